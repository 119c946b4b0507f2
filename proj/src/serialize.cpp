#include "ratlrc/serialize.hpp"

#include <sstream>

namespace ratlrc {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(Errc::ParseError, what); }

Elem elem_from_json(const Field& f, const json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    parse_error("expected a field element encoding, got " + j.dump());
  const auto v = j.get<std::uint64_t>();
  if (v >= f.q()) parse_error("encoding " + std::to_string(v) + " outside " + f.name());
  return static_cast<Elem>(v);
}

Polynomial poly_from_json(const Field& f, const json& j) {
  if (!j.is_array()) parse_error("expected a coefficient array");
  std::vector<Elem> c;
  for (const auto& v : j) c.push_back(elem_from_json(f, v));
  return Polynomial(f, std::move(c));
}

json poly_to_json(const Polynomial& p) { return json(std::vector<Elem>(p.coeffs().begin(), p.coeffs().end())); }

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

}  // namespace

json to_json(const Field& f) { return {{"p", f.p()}, {"m", f.m()}, {"modulus", f.modulus()}}; }

const Field& field_from_json(const json& j) {
  const Field& f = field(member(j, "p").get<std::uint32_t>(), member(j, "m").get<std::uint32_t>());
  if (j.contains("modulus") && j.at("modulus").get<std::vector<std::uint32_t>>() != f.modulus())
    parse_error("modulus differs from the canonical modulus of " + f.name());
  return f;
}

json to_json(PPoint u) { return u.is_infinity() ? json("inf") : json(u.value()); }

PPoint point_from_json(const Field& f, const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") parse_error("bad point " + j.dump());
    return PPoint::infinity();
  }
  return PPoint::finite(elem_from_json(f, j));
}

json to_json(const Moebius& phi) { return json::array({phi.a(), phi.b(), phi.c(), phi.d()}); }

Moebius moebius_from_json(const Field& f, const json& j) {
  if (!j.is_array() || j.size() != 4) parse_error("transform must be [a,b,c,d]");
  return Moebius(f, elem_from_json(f, j[0]), elem_from_json(f, j[1]), elem_from_json(f, j[2]),
                 elem_from_json(f, j[3]));
}

json to_json(const RationalMap& h) { return {{"num", poly_to_json(h.num())}, {"den", poly_to_json(h.den())}}; }

RationalMap map_from_json(const Field& f, const json& j) {
  return make_rational(poly_from_json(f, member(j, "num")), poly_from_json(f, member(j, "den")));
}

json to_json(const GoodnessCertificate& cert) {
  json groups = json::array();
  for (const auto& g : cert.groups) {
    json pts = json::array();
    for (PPoint u : g.points) pts.push_back(to_json(u));
    groups.push_back({{"t", to_json(g.value)}, {"points", pts}});
  }
  return {{"h", to_json(cert.h)}, {"r", cert.r}, {"l", cert.l()}, {"groups", groups}};
}

GoodnessCertificate certificate_from_json(const Field& f, const json& j) {
  GoodnessCertificate cert = certify(map_from_json(f, member(j, "h")));
  if (j.contains("groups") && j.at("groups") != to_json(cert).at("groups"))
    parse_error("stored recovery groups differ from the fibers of h");
  if (j.contains("l") && j.at("l").get<std::size_t>() != cert.l()) parse_error("stored l differs");
  return cert;
}

json to_json(const LrcCode& code) {
  json groups = json::array();
  for (std::size_t m = 0; m < code.l(); ++m) {
    json pts = json::array();
    for (std::size_t c : code.group_coords(m)) pts.push_back(to_json(code.layout[c]));
    groups.push_back({{"t", to_json(code.cert.groups[m].value)}, {"d", code.d_values[m]}, {"points", pts}});
  }
  return {{"field", to_json(code.field())},
          {"h", to_json(code.cert.h)},
          {"inverted", code.inverted},
          {"r", code.r},
          {"k", code.k},
          {"n", code.n},
          {"l", code.l()},
          {"b", code.b},
          {"groups", groups}};
}

LrcCode code_from_json(const json& j) {
  const Field& f = field_from_json(member(j, "field"));
  GoodnessCertificate cert = certify(map_from_json(f, member(j, "h")));
  LrcCode code = build_code(cert, member(j, "k").get<std::size_t>());
  if (code.inverted) parse_error("stored h must already miss b; found it covering F_q");
  code.inverted = member(j, "inverted").get<bool>();
  if (member(j, "b").get<Elem>() != code.b) parse_error("stored b differs from the smallest missing value");
  if (j.contains("groups") && j.at("groups") != to_json(code).at("groups"))
    parse_error("stored groups differ from the rebuilt layout");
  return code;
}

json to_json(const Codeword& word) { return json(word.symbols); }

json to_json(const ReceivedWord& word) {
  json out = json::array();
  for (const auto& s : word.symbols) out.push_back(s ? json(*s) : json(nullptr));
  return out;
}

ReceivedWord received_from_json(const Field& f, const json& j) {
  if (!j.is_array()) parse_error("codeword must be a JSON array");
  ReceivedWord out;
  for (const auto& v : j) {
    if (v.is_null())
      out.symbols.emplace_back(std::nullopt);
    else
      out.symbols.emplace_back(elem_from_json(f, v));
  }
  return out;
}

std::string to_text(const ReceivedWord& word) {
  std::string out;
  for (std::size_t i = 0; i < word.symbols.size(); ++i) {
    if (i) out += ' ';
    out += word.symbols[i] ? std::to_string(*word.symbols[i]) : "?";
  }
  return out;
}

ReceivedWord received_from_text(const Field& f, const std::string& text) {
  std::istringstream in(text);
  ReceivedWord out;
  std::string tok;
  while (in >> tok) {
    if (tok == "?") {
      out.symbols.emplace_back(std::nullopt);
      continue;
    }
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      parse_error("bad symbol \"" + tok + "\"");
    }
    if (used != tok.size() || v >= f.q()) parse_error("bad symbol \"" + tok + "\" for " + f.name());
    out.symbols.emplace_back(static_cast<Elem>(v));
  }
  return out;
}

std::size_t symbol_width(const Field& f) {
  std::size_t bits = 0;
  while ((std::uint64_t{1} << bits) < f.q()) ++bits;
  return std::max<std::size_t>(1, (bits + 7) / 8);
}

std::vector<std::uint8_t> to_frame(const Field& f, const Codeword& word) {
  const std::size_t w = symbol_width(f);
  std::vector<std::uint8_t> out;
  out.reserve(4 + w * word.symbols.size());
  const auto n = static_cast<std::uint32_t>(word.symbols.size());
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(n >> (8 * i)));
  for (Elem s : word.symbols)
    for (std::size_t i = 0; i < w; ++i) out.push_back(static_cast<std::uint8_t>(s >> (8 * i)));
  return out;
}

Codeword codeword_from_frame(const Field& f, std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4) parse_error("frame shorter than its length header");
  std::uint32_t n = 0;
  for (int i = 0; i < 4; ++i) n |= std::uint32_t{bytes[i]} << (8 * i);
  const std::size_t w = symbol_width(f);
  if (bytes.size() != 4 + std::size_t{n} * w)
    parse_error("frame size " + std::to_string(bytes.size()) + " does not match n = " + std::to_string(n));
  Codeword out;
  out.symbols.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < w; ++i) v |= std::uint64_t{bytes[4 + k * w + i]} << (8 * i);
    if (v >= f.q()) parse_error("symbol " + std::to_string(v) + " outside " + f.name());
    out.symbols.push_back(static_cast<Elem>(v));
  }
  return out;
}

}  // namespace ratlrc
