#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "ratlrc/lrc.hpp"

namespace ratlrc {

using json = nlohmann::json;

// Field descriptor: {"p":…,"m":…,"modulus":[c0,…,cm]}. Reading checks that
// the modulus is the canonical one.
json to_json(const Field& f);
const Field& field_from_json(const json& j);

// Points: canonical encoding, or the string "inf".
json to_json(PPoint u);
PPoint point_from_json(const Field& f, const json& j);

// Transform: [a,b,c,d] in normal form.
json to_json(const Moebius& phi);
Moebius moebius_from_json(const Field& f, const json& j);

// Map: {"num":[…],"den":[…]}, constant term first.
json to_json(const RationalMap& h);
RationalMap map_from_json(const Field& f, const json& j);

// Certificate: {"h":…,"r":…,"l":…,"groups":[{"t":…,"points":[…]}…]}.
json to_json(const GoodnessCertificate& cert);
/// Recomputes the certificate from "h" and requires the stored groups to
/// match it exactly.
GoodnessCertificate certificate_from_json(const Field& f, const json& j);

// Code descriptor: field, h, inverted, r, k, n, b, groups (t, d, points in
// layout order).
json to_json(const LrcCode& code);
/// Rebuilds from h and k and checks b, layout and the inverted flag.
LrcCode code_from_json(const json& j);

// Codewords as JSON arrays of encodings; erasures are null.
json to_json(const Codeword& word);
json to_json(const ReceivedWord& word);
ReceivedWord received_from_json(const Field& f, const json& j);

// Whitespace-separated encodings with "?" marking an erasure.
std::string to_text(const ReceivedWord& word);
ReceivedWord received_from_text(const Field& f, const std::string& text);

/// Bytes per symbol in the binary frame: ceil(log2 q) bits rounded up.
std::size_t symbol_width(const Field& f);
/// u32 little-endian length, then each symbol little-endian in symbol_width bytes.
std::vector<std::uint8_t> to_frame(const Field& f, const Codeword& word);
Codeword codeword_from_frame(const Field& f, std::span<const std::uint8_t> bytes);

}  // namespace ratlrc
