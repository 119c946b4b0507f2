#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "json_config.hpp"
#include "ratlrc/lrc.hpp"
#include "ratlrc/serialize.hpp"

namespace ratlrc::cli {

namespace {

struct Options {
  std::string format = "text";
  std::string output;

  std::uint32_t p = 0;
  std::uint32_t m = 1;

  // construct
  bool gal1 = false, gal2 = false, moebius = false, sset = false, tb_mult = false, tb_add = false;
  std::string map_file;
  std::uint64_t w = 1, d = 1, a = 0;
  std::vector<std::uint64_t> phi, S, H;
  int r = 0;
  std::size_t k = 0;
  std::string out;

  // encode / repair
  std::string code_path;
  std::vector<std::uint64_t> message;
  std::string message_file;
  std::vector<std::size_t> erase_at;
  std::string word_format = "json";
  std::string word_path;
  std::string symbols;

  // verify
  std::uint32_t qmin = 2, qmax = 64, sweep_max = 64;

  // search
  int deg = 3;
  std::size_t top = 5;
  bool poly_only = false;
};

// ---- small helpers ---------------------------------------------------------

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::ParseError, "cannot write " + path);
  f << bytes;
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
}

Elem checked(const Field& F, std::uint64_t v, const std::string& what) {
  if (v >= F.q()) throw Error(Errc::InvalidArgument, what + " = " + std::to_string(v) + " outside " + F.name());
  return static_cast<Elem>(v);
}

std::vector<Elem> checked(const Field& F, const std::vector<std::uint64_t>& vs, const std::string& what) {
  std::vector<Elem> out;
  for (auto v : vs) out.push_back(checked(F, v, what));
  return out;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string csv() const {
    std::ostringstream o;
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) o << (i ? "," : "") << csv_cell(cells[i]);
      o << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
    return o.str();
  }

  // Column widths count code points so the UTF-8 "≡" lines up.
  static std::size_t width(const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s) n += (c & 0xC0) != 0x80;
    return n;
  }

  std::string text() const {
    std::vector<std::size_t> w(header.size(), 0);
    for (std::size_t i = 0; i < header.size(); ++i) w[i] = width(header[i]);
    for (const auto& r : rows)
      for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], width(r[i]));
    std::ostringstream o;
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        s += cells[i];
        if (i + 1 < cells.size()) s += std::string(w[i] - width(cells[i]) + 2, ' ');
      }
      o << s << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
    return o.str();
  }
};

std::string fmt_double(double v, int digits = 4) {
  std::ostringstream o;
  o << std::setprecision(digits) << v;
  return o.str();
}

std::string points_text(const std::vector<PPoint>& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + pts[i].to_string();
  return s;
}

// Smallest prime factor decomposition of a prime power; {0,0} otherwise.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q) {
  if (q < 2) return {0, 0};
  std::uint32_t p = 2;
  while (p * p <= q && q % p) ++p;
  if (q % p) p = q;
  std::uint32_t m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  return q == 1 ? std::pair{p, m} : std::pair{0u, 0u};
}

LrcCode load_code(const std::string& path) {
  json j = read_json(path);
  if (j.contains("code")) j = j.at("code");
  return code_from_json(j);
}

// ---- construct -------------------------------------------------------------

struct Built {
  std::string name;
  RationalMap h;
};

Built build_map(const Options& o) {
  const int chosen = o.gal1 + o.gal2 + o.moebius + o.sset + o.tb_mult + o.tb_add + !o.map_file.empty();
  if (chosen != 1)
    throw Error(Errc::InvalidArgument,
                "choose exactly one of --gal1 --gal2 --moebius --sset --tb-mult --tb-add --file");
  if (!o.map_file.empty()) {
    const json j = read_json(o.map_file);
    const Field& F = j.contains("field") ? field_from_json(j.at("field")) : field(o.p, o.m);
    const json& hj = j.contains("h") ? j.at("h") : j;
    return {"file", map_from_json(F, hj)};
  }
  const Field& F = field(o.p, o.m);
  if (o.gal1) return {"gal1", gal1(F, checked(F, o.w, "w"))};
  if (o.gal2) return {"gal2", gal2(F, checked(F, o.d, "d"))};
  if (o.moebius) {
    if (o.phi.size() != 4) throw Error(Errc::InvalidArgument, "--phi needs four entries a,b,c,d");
    const auto e = checked(F, o.phi, "phi entry");
    return {"moebius", from_moebius(Moebius(F, e[0], e[1], e[2], e[3]))};
  }
  if (o.sset) {
    const auto s = checked(F, o.S, "S member");
    return {"sset", s_set(F, s, checked(F, o.a, "a"))};
  }
  if (o.tb_mult) {
    if (o.r < 1) throw Error(Errc::InvalidArgument, "--tb-mult needs --r >= 1");
    return {"tb-mult", tamo_barg_multiplicative(F, o.r)};
  }
  const auto gens = checked(F, o.H, "H generator");
  return {"tb-add", tamo_barg_additive(F, additive_span(F, gens))};
}

std::string cmd_construct(const Options& o) {
  const Built built = build_map(o);
  if (o.k == 0) throw Error(Errc::InvalidArgument, "--k is required");
  const GoodnessCertificate cert = certify(built.h);
  validate(cert);
  const LrcCode code = build_code(cert, o.k);
  validate(code.cert);
  if (!o.out.empty()) write_file(o.out, to_json(code).dump(2) + "\n");

  if (o.format == "json")
    return json{{"construction", built.name}, {"code", to_json(code)}, {"certificate", to_json(code.cert)}}.dump(2) +
           "\n";
  if (o.format == "csv") {
    Table t{{"n", "k", "r", "l", "b", "inverted", "group", "t", "d", "points"}, {}};
    for (std::size_t g = 0; g < code.l(); ++g) {
      std::vector<PPoint> pts;
      for (auto c : code.group_coords(g)) pts.push_back(code.layout[c]);
      t.rows.push_back({std::to_string(code.n), std::to_string(code.k), std::to_string(code.r),
                        std::to_string(code.l()), std::to_string(code.b), code.inverted ? "true" : "false",
                        std::to_string(g), code.cert.groups[g].value.to_string(),
                        std::to_string(code.d_values[g]), points_text(pts)});
    }
    return t.csv();
  }
  std::ostringstream s;
  s << "construction " << built.name << " over " << code.field().name() << "\n";
  s << "h = " << code.cert.h.to_string() << (code.inverted ? "  (1/h of the requested map)" : "") << "\n";
  s << "n=" << code.n << " k=" << code.k << " r=" << code.r << " l=" << code.l() << " b=" << code.b << "\n";
  for (std::size_t g = 0; g < code.l(); ++g) {
    std::vector<PPoint> pts;
    for (auto c : code.group_coords(g)) pts.push_back(code.layout[c]);
    s << "group " << g << ": t=" << code.cert.groups[g].value.to_string() << " d=" << code.d_values[g]
      << " points " << points_text(pts) << "\n";
  }
  return s.str();
}

// ---- encode / repair -------------------------------------------------------

std::vector<Elem> load_message(const Options& o, const Field& F) {
  if (!o.message.empty() && !o.message_file.empty())
    throw Error(Errc::InvalidArgument, "give either --message or --message-file");
  if (!o.message.empty()) return checked(F, o.message, "message symbol");
  if (o.message_file.empty()) throw Error(Errc::InvalidArgument, "--message or --message-file is required");
  const std::string text = read_file(o.message_file);
  const auto first = text.find_first_not_of(" \t\r\n");
  ReceivedWord w = first != std::string::npos && text[first] == '['
                       ? received_from_json(F, [&] {
                           try {
                             return json::parse(text);
                           } catch (const json::parse_error& e) {
                             throw Error(Errc::ParseError, o.message_file + ": " + e.what());
                           }
                         }())
                       : received_from_text(F, text);
  std::vector<Elem> msg;
  for (const auto& s : w.symbols) {
    if (!s) throw Error(Errc::ParseError, "message may not contain erasures");
    msg.push_back(*s);
  }
  return msg;
}

std::string word_table(const LrcCode& code, const ReceivedWord& w, const std::string& format) {
  if (format == "json") return to_json(w).dump() + "\n";
  if (format == "text") return to_text(w) + "\n";
  Table t{{"position", "group", "point", "symbol"}, {}};
  for (std::size_t c = 0; c < w.symbols.size(); ++c)
    t.rows.push_back({std::to_string(c), std::to_string(code.group_of_coord[c]), code.layout[c].to_string(),
                      w.symbols[c] ? std::to_string(*w.symbols[c]) : "?"});
  return t.csv();
}

std::string cmd_encode(const Options& o) {
  const LrcCode code = load_code(o.code_path);
  const Codeword word = encode(code, load_message(o, code.field()));
  const ReceivedWord received = erase(word, o.erase_at);
  if (!o.out.empty()) {
    if (o.word_format == "frame") {
      if (!o.erase_at.empty()) throw Error(Errc::InvalidArgument, "binary frames cannot carry erasures");
      const auto bytes = to_frame(code.field(), word);
      write_file(o.out, std::string(bytes.begin(), bytes.end()));
    } else {
      write_file(o.out, o.word_format == "text" ? to_text(received) + "\n" : to_json(received).dump() + "\n");
    }
  }
  return word_table(code, received, o.format);
}

ReceivedWord load_received(const Options& o, const Field& F) {
  if (!o.symbols.empty() && !o.word_path.empty()) throw Error(Errc::InvalidArgument, "give either --word or --symbols");
  if (!o.symbols.empty()) return received_from_text(F, o.symbols);
  if (o.word_path.empty()) throw Error(Errc::InvalidArgument, "--word or --symbols is required");
  const std::string bytes = read_file(o.word_path);
  if (o.word_format == "frame") {
    const auto* b = reinterpret_cast<const std::uint8_t*>(bytes.data());
    const Codeword c = codeword_from_frame(F, std::span<const std::uint8_t>(b, bytes.size()));
    ReceivedWord w;
    for (Elem s : c.symbols) w.symbols.emplace_back(s);
    return w;
  }
  const auto first = bytes.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && bytes[first] == '[') {
    try {
      return received_from_json(F, json::parse(bytes));
    } catch (const json::parse_error& e) {
      throw Error(Errc::ParseError, o.word_path + ": " + e.what());
    }
  }
  return received_from_text(F, bytes);
}

std::string cmd_repair(const Options& o) {
  const LrcCode code = load_code(o.code_path);
  const RepairResult r = repair(code, load_received(o, code.field()));
  const PPoint u = code.layout[r.position];
  if (o.format == "json")
    return json{{"position", r.position}, {"point", to_json(u)}, {"group", r.group},
                {"value", r.value},       {"read", r.read_positions}}
               .dump() +
           "\n";
  std::string read;
  for (std::size_t i = 0; i < r.read_positions.size(); ++i) read += (i ? " " : "") + std::to_string(r.read_positions[i]);
  if (o.format == "csv") {
    Table t{{"position", "point", "group", "value", "read"}, {}};
    t.rows.push_back({std::to_string(r.position), u.to_string(), std::to_string(r.group), std::to_string(r.value), read});
    return t.csv();
  }
  std::ostringstream s;
  s << "position " << r.position << " (point " << u.to_string() << ") = " << r.value << "\n";
  s << "read " << r.read_positions.size() << " symbols from group " << r.group << ": positions " << read << "\n";
  return s.str();
}

// ---- verify ----------------------------------------------------------------

struct VerifyRow {
  std::uint32_t q;
  std::string check, branch, measured, expected;
  bool pass;
};

std::string count_range(const std::set<std::size_t>& seen) {
  if (seen.size() == 1) return std::to_string(*seen.begin());
  return std::to_string(*seen.begin()) + ".." + std::to_string(*seen.rbegin());
}

std::string ratio(std::size_t ok, std::size_t total) { return std::to_string(ok) + "/" + std::to_string(total); }

void verify_field(std::uint32_t q, std::uint32_t p, std::uint32_t m, const Options& o, std::vector<VerifyRow>& rows) {
  const Field& F = field(p, m);

  {
    const std::string branch = p == 3 ? "q=3^m" : (q % 3 == 1 ? "q≡1 mod 3" : "q≡2 mod 3");
    const std::size_t want = p == 3 ? q / 3 : (q % 3 == 1 ? (q - 1) / 3 : (q + 1) / 3);
    std::set<std::size_t> seen;
    for (Elem w = 1; w < F.q(); ++w) seen.insert(split_count(gal1(F, w)));
    rows.push_back({q, "gal1", branch, count_range(seen), std::to_string(want), seen == std::set<std::size_t>{want}});
  }
  if (p != 2) {
    const std::string branch = q % 4 == 3 ? "q≡3 mod 4" : "q≡1 mod 4";
    const std::size_t want = q % 4 == 3 ? (q + 1) / 4 : (q - 1) / 4;
    std::set<std::size_t> seen;
    for (Elem d = 1; d < F.q(); ++d) seen.insert(split_count(gal2(F, d)));
    rows.push_back({q, "gal2", branch, count_range(seen), std::to_string(want), seen == std::set<std::size_t>{want}});
  }

  if (q <= o.sweep_max) {
    std::size_t total = 0, gen_ok = 0, short_ok = 0, ident_ok = 0, bound_ok = 0;
    for_each_moebius(F, [&](const Moebius& phi) {
      if (phi.is_affine()) return;
      ++total;
      const OrbitCensus c = orbits(phi);
      const std::uint64_t n = c.group_order;
      const std::uint64_t ceil = (q + n) / n;  // ceil((q+1)/n)
      if (c.short_count <= 3 && c.orbits.size() == (c.short_count <= 1 ? ceil : ceil + 1)) ++short_ok;
      try {
        const RationalMap h = from_moebius(phi, n);
        auto by_min = c.orbits;
        std::sort(by_min.begin(), by_min.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
        const std::size_t split = split_count(h);
        if (fibers(h).partition() == by_min && split == predicted_split_count(c, q, n - 1)) ++gen_ok;
        std::uint64_t short_mass = 0;
        for (auto s : c.sizes)
          if (s < n) short_mass += s;
        if (split * n == q + 1 - short_mass) ++ident_ok;
        const BoundReport b = estimate_bounds(q, 0, n, c.short_count);
        const auto l = static_cast<std::int64_t>(split);
        const bool sharp_case = c.short_count == 0 || (c.short_count <= 2 && (q + 1) % n != 0);
        if (b.lower <= l && l <= b.upper && (!sharp_case || l == b.upper)) ++bound_ok;
      } catch (const Error& e) {
        if (e.code() != Errc::TheoremViolation) throw;
      }
    });
    const std::string exp = std::to_string(total);
    rows.push_back({q, "gen-con", "non-affine φ", ratio(gen_ok, total), exp, gen_ok == total});
    rows.push_back({q, "three-short", "orbit law", ratio(short_ok, total), exp, short_ok == total});
    rows.push_back({q, "split-identity", "short orbits", ratio(ident_ok, total), exp, ident_ok == total});
    rows.push_back({q, "bounds", "g_h=0", ratio(bound_ok, total), exp, bound_ok == total});
  }

  auto distance_row = [&](const std::string& name, const RationalMap& h, std::size_t k) {
    const GoodnessCertificate cert = certify(h);
    if (cert.l() * static_cast<std::size_t>(cert.r) < k) return;
    if (std::pow(static_cast<double>(q), static_cast<double>(k)) > kExhaustionCap) return;
    const LrcCode code = build_code(cert, k);
    const DistanceReport d = min_distance(code);
    rows.push_back({q, "distance", name + " k=" + std::to_string(k), std::to_string(d.distance),
                    std::to_string(d.singleton_bound), d.optimal});
  };
  distance_row("gal1", gal1(F, 1), 2);
  if (p != 2) distance_row("gal2", gal2(F, 1), 3);
}

std::string cmd_verify(const Options& o) {
  if (o.qmin > o.qmax) throw Error(Errc::InvalidArgument, "--qmin exceeds --qmax");
  if (o.qmax > 1024) throw Error(Errc::CapExceeded, "verify sweeps q <= 1024");
  std::vector<VerifyRow> rows;
  for (std::uint32_t q = std::max<std::uint32_t>(o.qmin, 2); q <= o.qmax; ++q) {
    const auto [p, m] = prime_power(q);
    if (p) verify_field(q, p, m, o, rows);
  }
  const bool all = std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.pass; });
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"q", r.q},
                     {"check", r.check},
                     {"branch", r.branch},
                     {"measured", r.measured},
                     {"expected", r.expected},
                     {"status", r.pass ? "PASS" : "FAIL"}});
    return json{{"rows", arr}, {"all_pass", all}}.dump(2) + "\n";
  }
  Table t{{"q", "check", "branch", "measured", "expected", "status"}, {}};
  for (const auto& r : rows)
    t.rows.push_back({std::to_string(r.q), r.check, r.branch, r.measured, r.expected, r.pass ? "PASS" : "FAIL"});
  return o.format == "csv" ? t.csv() : t.text() + (all ? "all rows PASS\n" : "some rows FAIL\n");
}

// ---- search ----------------------------------------------------------------

std::string cmd_search(const Options& o) {
  const Field& F = field(o.p, o.m);
  const SearchResult res = search(F, {o.deg, o.top, o.poly_only});
  std::vector<GoodnessCertificate> certs;
  for (const auto& hit : res.top) {
    certs.push_back(certify(hit.h));
    validate(certs.back());
  }
  if (o.format == "json") {
    json top = json::array();
    for (std::size_t i = 0; i < res.top.size(); ++i)
      top.push_back({{"rank", i + 1},
                     {"split", res.top[i].split_count},
                     {"class_size", res.top[i].class_size},
                     {"h", to_json(res.top[i].h)},
                     {"certificate", to_json(certs[i])}});
    return json{{"field", to_json(F)},
                {"degree", o.deg},
                {"poly_only", o.poly_only},
                {"enumerated", res.enumerated},
                {"valid", res.valid},
                {"classes", res.classes},
                {"best_split", res.best_split},
                {"top", top}}
               .dump(2) +
           "\n";
  }
  Table t{{"rank", "split", "class_size", "h"}, {}};
  for (std::size_t i = 0; i < res.top.size(); ++i)
    t.rows.push_back({std::to_string(i + 1), std::to_string(res.top[i].split_count),
                      std::to_string(res.top[i].class_size), res.top[i].h.to_string()});
  if (o.format == "csv") return t.csv();
  std::ostringstream s;
  s << F.name() << " degree " << o.deg << (o.poly_only ? " polynomials" : " rational maps") << ": " << res.valid
    << " valid of " << res.enumerated << " enumerated, " << res.classes << " fiber partitions\n";
  s << "best split count " << res.best_split << "\n" << t.text();
  return s.str();
}

// ---- compare ---------------------------------------------------------------

struct RationalBest {
  std::string construction;
  RationalMap h;
  std::size_t split;
};

std::optional<RationalBest> best_rational(const Field& F, int r) {
  std::optional<RationalBest> best;
  auto offer = [&](std::string name, const RationalMap& h) {
    const std::size_t s = split_count(h);
    if (!best || s > best->split) best = RationalBest{std::move(name), h, s};
  };
  if (r == 2) offer("gal1 w=1", gal1(F, 1));
  if (r == 3 && F.p() != 2) offer("gal2 d=1", gal2(F, 1));
  // Transform of order r+1 with the fewest short orbits, first in scan order.
  std::optional<Moebius> pick;
  std::uint64_t pick_split = 0;
  for (const Moebius& phi : elements_of_order(F, static_cast<std::uint64_t>(r) + 1, 5000)) {
    if (phi.is_affine()) continue;
    const std::uint64_t s = predicted_split_count(orbits(phi, static_cast<std::uint64_t>(r) + 1), F.q(),
                                                  static_cast<std::uint64_t>(r));
    if (!pick || s > pick_split) {
      pick = phi;
      pick_split = s;
    }
  }
  if (pick && (!best || pick_split > best->split)) offer("moebius " + to_json(*pick).dump(), from_moebius(*pick));
  return best;
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::string cmd_compare(const Options& o) {
  const Field& F = field(o.p, o.m);
  if (o.r < 1) throw Error(Errc::InvalidArgument, "--r must be >= 1");
  if (o.r > 19) throw Error(Errc::CapExceeded, "--r above 19");
  const std::uint64_t q = F.q();
  const auto r = static_cast<std::uint64_t>(o.r);

  json rational = nullptr;
  if (const auto best = best_rational(F, o.r); best && best->split > 0) {
    const GoodnessCertificate cert = certify(best->h);
    validate(cert);
    const bool cert_ok = certificate_from_json(F, to_json(cert)).h == cert.h;
    const LrcCode code = build_code(cert, r);
    json dist = nullptr;
    if (std::pow(static_cast<double>(q), static_cast<double>(r)) <= kExhaustionCap) {
      const DistanceReport d = min_distance(code);
      dist = {{"distance", d.distance}, {"singleton_bound", d.singleton_bound}, {"optimal", d.optimal}, {"method", d.method}};
    } else if (code.n <= 24) {
      const DistanceReport d = min_distance_by_subsets(code);
      dist = {{"distance", d.distance}, {"singleton_bound", d.singleton_bound}, {"optimal", d.optimal}, {"method", d.method}};
    }
    rational = {{"construction", best->construction},
                {"h", to_json(best->h)},
                {"l", cert.l()},
                {"length", (r + 1) * cert.l()},
                {"k", r},
                {"certificate_valid", cert_ok},
                {"certificate", to_json(cert)},
                {"code", dist}};
  }

  json tb_mult = nullptr, tb_add = nullptr;
  std::string mult_note, add_note;
  if ((q - 1) % (r + 1) == 0) {
    const std::size_t s = split_count(tamo_barg_multiplicative(F, o.r));
    tb_mult = {{"h", "x^" + std::to_string(r + 1)}, {"l", s}, {"length", (r + 1) * s}};
  } else {
    mult_note = std::to_string(r + 1) + " does not divide q-1=" + std::to_string(q - 1);
  }
  {
    std::uint64_t size = 1;
    std::uint32_t j = 0;
    while (size < r + 1 && j < F.m()) {
      size *= F.p();
      ++j;
    }
    if (size == r + 1) {
      std::vector<Elem> gens;
      Elem basis = 1;
      for (std::uint32_t i = 0; i < j; ++i, basis *= F.p()) gens.push_back(basis);
      const RationalMap h = tamo_barg_additive(F, additive_span(F, gens));
      const std::size_t s = split_count(h);
      tb_add = {{"h", to_json(h)}, {"l", s}, {"length", (r + 1) * s}};
    } else {
      add_note = std::to_string(r + 1) + " is not the order of an additive subgroup of " + F.name();
    }
  }

  json poly = nullptr;
  std::string poly_note;
  try {
    const SearchResult res = search(F, {o.r + 1, 1, true});
    poly = {{"degree", r + 1}, {"best_split", res.best_split}, {"length", (r + 1) * res.best_split},
            {"h", res.top.empty() ? json(nullptr) : to_json(res.top.front().h)}};
  } catch (const Error& e) {
    if (e.code() != Errc::CapExceeded) throw;
    poly_note = "search space over cap";
  }

  const double rat_asym = static_cast<double>(q) / static_cast<double>(r + 1);
  const double poly_asym = static_cast<double>(q) / static_cast<double>(factorial(r + 1));
  const json asym = {{"rational", rat_asym}, {"polynomial", poly_asym}, {"factor", factorial(r)}};

  if (o.format == "json")
    return json{{"field", to_json(F)},
                {"q", q},
                {"r", r},
                {"rational", rational},
                {"tamo_barg", {{"multiplicative", tb_mult}, {"additive", tb_add}}},
                {"polynomial_search", poly},
                {"asymptotic", asym}}
               .dump(2) +
           "\n";

  auto len = [](const json& j) { return j.is_null() ? std::string("NA") : std::to_string(j.at("length").get<std::size_t>()); };
  auto l_of = [](const json& j) { return j.is_null() ? std::string("NA") : std::to_string(j.at("l").get<std::size_t>()); };
  Table t{{"family", "construction", "l", "n", "note"}, {}};
  std::string rnote;
  if (!rational.is_null() && !rational.at("code").is_null()) {
    const auto& c = rational.at("code");
    rnote = "d=" + std::to_string(c.at("distance").get<std::size_t>()) + " singleton=" +
            std::to_string(c.at("singleton_bound").get<std::size_t>()) +
            (c.at("optimal").get<bool>() ? " optimal" : " NOT optimal");
  }
  if (!rational.is_null() && rational.at("certificate_valid").get<bool>()) rnote += rnote.empty() ? "certificate valid" : ", certificate valid";
  t.rows.push_back({"rational", rational.is_null() ? "none" : rational.at("construction").get<std::string>(),
                    l_of(rational), len(rational), rnote});
  t.rows.push_back({"tamo-barg multiplicative", "x^" + std::to_string(r + 1), l_of(tb_mult), len(tb_mult), mult_note});
  t.rows.push_back({"tamo-barg additive", "subgroup of order " + std::to_string(r + 1), l_of(tb_add), len(tb_add), add_note});
  t.rows.push_back({"polynomial search", "degree " + std::to_string(r + 1),
                    poly.is_null() ? "NA" : std::to_string(poly.at("best_split").get<std::size_t>()), len(poly),
                    poly_note});
  if (o.format == "csv") return t.csv();
  std::ostringstream s;
  s << F.name() << ", locality r=" << r << "\n" << t.text();
  s << "asymptotic lengths: q/(r+1)=" << fmt_double(rat_asym) << " vs q/(r+1)!=" << fmt_double(poly_asym)
    << ", factor r!=" << factorial(r) << "\n";
  return s.str();
}

void add_field_options(CLI::App* sub, Options& o, bool required) {
  auto* p = sub->add_option("--p", o.p, "characteristic");
  if (required) p->required();
  sub->add_option("--m", o.m, "extension degree")->capture_default_str();
}

}  // namespace

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::TheoremViolation:
      return kTheoremViolation;
    case Errc::ParseError:
    case Errc::NoErasure:
    case Errc::MultipleErasures:
    case Errc::LengthMismatch:
    case Errc::FieldMismatch:
      return kDataError;
    default:
      return kUsage;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Optimal locally recoverable codes from good rational functions", "ratlrc"};
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON file mirroring the command-line flags");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.add_option("--format", o.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--output", o.output, "write results to this file instead of stdout");
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "build a code and print its descriptor and certificate");
  add_field_options(construct, o, false);
  construct->add_flag("--gal1", o.gal1, "order-3 family (x^3 - 3w^2 x + w^3)/(x(x - w))");
  construct->add_flag("--gal2", o.gal2, "order-4 family, odd q");
  construct->add_flag("--moebius", o.moebius, "sum of iterates of --phi");
  construct->add_flag("--sset", o.sset, "prod (x - s) / (x - a) over --S");
  construct->add_flag("--tb-mult", o.tb_mult, "x^(r+1)");
  construct->add_flag("--tb-add", o.tb_add, "subspace polynomial of the span of --H");
  construct->add_option("--file", o.map_file, "map, certificate or code JSON");
  construct->add_option("--w", o.w)->capture_default_str();
  construct->add_option("--d", o.d)->capture_default_str();
  construct->add_option("--phi", o.phi, "a,b,c,d")->delimiter(',');
  construct->add_option("--S", o.S)->delimiter(',');
  construct->add_option("--a", o.a)->capture_default_str();
  construct->add_option("--r", o.r, "locality for --tb-mult");
  construct->add_option("--H", o.H, "generators of the additive subgroup")->delimiter(',');
  construct->add_option("--k", o.k, "dimension, a multiple of r")->required();
  construct->add_option("--out", o.out, "also write the code descriptor here");

  auto* enc = app.add_subcommand("encode", "encode a message with a stored code");
  enc->add_option("--code", o.code_path, "code descriptor JSON")->required();
  enc->add_option("--message", o.message, "k symbols")->delimiter(',');
  enc->add_option("--message-file", o.message_file);
  enc->add_option("--erase", o.erase_at, "positions to erase in the output")->delimiter(',');
  enc->add_option("--out", o.out, "write the word to this file");
  enc->add_option("--word-format", o.word_format)->check(CLI::IsMember({"json", "text", "frame"}))->capture_default_str();

  auto* rep = app.add_subcommand("repair", "repair one erased symbol from its recovery group");
  rep->add_option("--code", o.code_path, "code descriptor JSON")->required();
  rep->add_option("--word", o.word_path, "received word: JSON (null) or text (?)");
  rep->add_option("--symbols", o.symbols, "received word inline, text form");
  rep->add_option("--word-format", o.word_format)->check(CLI::IsMember({"json", "text", "frame"}))->capture_default_str();

  auto* ver = app.add_subcommand("verify", "check the counting laws and code parameters over a range of q");
  ver->add_option("--qmin", o.qmin)->capture_default_str();
  ver->add_option("--qmax", o.qmax)->capture_default_str();
  ver->add_option("--sweep-max", o.sweep_max, "largest q for the exhaustive PGL(2,q) sweep")->capture_default_str();

  auto* srch = app.add_subcommand("search", "exhaustive search for maps with many totally split values");
  add_field_options(srch, o, true);
  srch->add_option("--deg", o.deg)->capture_default_str();
  srch->add_option("--top", o.top)->capture_default_str();
  srch->add_flag("--poly-only", o.poly_only, "restrict to polynomials");

  auto* cmp = app.add_subcommand("compare", "best rational construction vs polynomial baselines");
  add_field_options(cmp, o, true);
  cmp->add_option("--r", o.r, "locality")->required();

  for (auto* sub : {construct, enc, rep, ver, srch, cmp}) sub->configurable();

  std::vector<const char*> argv{"ratlrc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    std::string result;
    if (construct->parsed()) {
      if (o.map_file.empty() && o.p == 0) throw Error(Errc::InvalidArgument, "--p is required");
      result = cmd_construct(o);
    } else if (enc->parsed()) {
      result = cmd_encode(o);
    } else if (rep->parsed()) {
      result = cmd_repair(o);
    } else if (ver->parsed()) {
      result = cmd_verify(o);
    } else if (srch->parsed()) {
      result = cmd_search(o);
    } else {
      result = cmd_compare(o);
    }
    if (o.output.empty())
      out << result;
    else
      write_file(o.output, result);
    if (ver->parsed() && result.find("FAIL") != std::string::npos) return kTheoremViolation;
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const json::exception& e) {
    err << "error: ParseError: " << e.what() << "\n";
    return kDataError;
  }
}

}  // namespace ratlrc::cli
