#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ratlrc/lrc.hpp"
#include "ratlrc/serialize.hpp"

using namespace ratlrc;

namespace {

PPoint fin(Elem v) { return PPoint::finite(v); }
const PPoint inf = PPoint::infinity();

Polynomial P(const Field& f, std::vector<Elem> c) { return Polynomial(f, std::move(c)); }

template <class E>
Errc code_of(E&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::InvalidArgument;
}

LrcCode gal1_code(std::size_t k) { return build_code(certify(gal1(field(5, 1), 1)), k); }

// Integer re-derivation of the encoder over a prime field: symbol at finite x
// in group m is sum_i sum_j a_ij d_m^j x^i; at infinity it is
// sum_j a_(r-1)j d_m^j, with 0^0 = 1.
std::vector<std::vector<oracle::i64>> oracle_generator(const LrcCode& code) {
  const oracle::i64 p = code.field().p();
  const std::size_t rows = code.rows();
  auto pw = [p](oracle::i64 x, std::size_t e) {
    oracle::i64 v = 1;
    for (std::size_t i = 0; i < e; ++i) v = oracle::mod(v * x, p);
    return v;
  };
  std::vector<std::vector<oracle::i64>> G(code.k, std::vector<oracle::i64>(code.n, 0));
  for (std::size_t c = 0; c < code.n; ++c) {
    const PPoint u = code.layout[c];
    const oracle::i64 d = code.d_values[code.group_of_coord[c]];
    for (int i = 0; i < code.r; ++i)
      for (std::size_t j = 0; j < rows; ++j) {
        oracle::i64 v;
        if (u.is_infinity())
          v = i == code.r - 1 ? pw(d, j) : 0;
        else
          v = oracle::mod(pw(d, j) * pw(u.value(), static_cast<std::size_t>(i)), p);
        G[static_cast<std::size_t>(i) * rows + j][c] = v;
      }
  }
  return G;
}

}  // namespace

TEST_CASE("build over F_5 from gal1") {
  const LrcCode code = gal1_code(2);
  CHECK(code.n == 6);
  CHECK(code.k == 2);
  CHECK(code.r == 2);
  CHECK(code.b == 0);
  CHECK(!code.inverted);
  CHECK(code.layout == std::vector<PPoint>{fin(2), fin(3), fin(4), fin(0), fin(1), inf});
  CHECK(code.d_values == std::vector<Elem>{4, 0});
  CHECK(code.group_of_coord == std::vector<std::size_t>{0, 0, 0, 1, 1, 1});
  CHECK(code.group_coords(1) == std::vector<std::size_t>{3, 4, 5});

  CHECK(code_of([] { gal1_code(3); }) == Errc::NotDivisible);
  CHECK(code_of([] { gal1_code(6); }) == Errc::OutOfRange);
  CHECK(code_of([] { gal1_code(0); }) == Errc::OutOfRange);
}

TEST_CASE("build over F_7 from gal2") {
  const LrcCode code = build_code(certify(gal2(field(7, 1), 1)), 3);
  CHECK(code.n == 8);
  CHECK(code.b == 0);
  CHECK(code.r == 3);
}

TEST_CASE("image covering F_q falls back to 1/h") {
  const Field& f3 = field(3, 1);
  const RationalMap h = make_rational(P(f3, {0, 1}), P(f3, {1, 0, 1}));  // x / (x^2 + 1)
  REQUIRE(image(h).size() == 3);
  const LrcCode code = build_code(certify(h), 1);
  CHECK(code.inverted);
  CHECK(code.cert.h == h.reciprocal());
  CHECK(code.b == 0);
  REQUIRE(code.l() == 1);
  CHECK(code.cert.groups[0].value == inf);
  CHECK(code.layout == std::vector<PPoint>{fin(0), inf});
  const DistanceReport d = min_distance(code);
  CHECK(d.distance == 2);
  CHECK(d.optimal);

  const LrcCode back = code_from_json(to_json(code));
  CHECK(back.inverted);
  CHECK(back.layout == code.layout);
}

TEST_CASE("encode examples") {
  const LrcCode code = gal1_code(2);
  const Elem a10[] = {1, 0}, a01[] = {0, 1}, zero[] = {0, 0};
  CHECK(encode(code, a10).symbols == std::vector<Elem>{1, 1, 1, 1, 1, 0});
  CHECK(encode(code, a01).symbols == std::vector<Elem>{2, 3, 4, 0, 1, 1});
  CHECK(encode(code, zero).symbols == std::vector<Elem>(6, 0));
  const Elem short_msg[] = {1};
  CHECK(code_of([&] { encode(code, short_msg); }) == Errc::LengthMismatch);
}

TEST_CASE("repair examples") {
  const LrcCode code = gal1_code(2);
  const Elem a10[] = {1, 0}, a01[] = {0, 1};
  const Codeword w10 = encode(code, a10);

  const std::size_t at3[] = {1};
  RepairResult r = repair(code, erase(w10, at3));
  CHECK(r.value == 1);
  CHECK(r.group == 0);
  CHECK(r.read_positions == std::vector<std::size_t>{0, 2});

  const std::size_t at_inf[] = {5};
  r = repair(code, erase(w10, at_inf));
  CHECK(r.value == 0);
  CHECK(r.read_positions == std::vector<std::size_t>{3, 4});

  const Codeword w01 = encode(code, a01);
  const std::size_t at0[] = {3};
  r = repair(code, erase(w01, at0));
  CHECK(r.value == 0);
  CHECK(r.read_positions == std::vector<std::size_t>{4, 5});

  ReceivedWord none{};
  for (Elem s : w01.symbols) none.symbols.emplace_back(s);
  CHECK(code_of([&] { repair(code, none); }) == Errc::NoErasure);
  const std::size_t two[] = {0, 4};
  CHECK(code_of([&] { repair(code, erase(w01, two)); }) == Errc::MultipleErasures);
  const std::size_t bad[] = {6};
  CHECK(code_of([&] { erase(w01, bad); }) == Errc::OutOfRange);
}

TEST_CASE("distance, rank and degree bound examples") {
  const LrcCode c2 = gal1_code(2);
  DistanceReport d = min_distance(c2);
  CHECK(d.distance == 5);
  CHECK(d.singleton_bound == 5);
  CHECK(d.optimal);
  CHECK(dimension_check(c2) == 2);
  CHECK(degree_bound_check(c2));

  const LrcCode c4 = gal1_code(4);
  d = min_distance(c4);
  CHECK(d.distance == 2);
  CHECK(d.optimal);
  CHECK(dimension_check(c4) == 4);
  CHECK(degree_bound_check(c4));

  const LrcCode g2 = build_code(certify(gal2(field(7, 1), 1)), 3);
  d = min_distance(g2);
  CHECK(d.distance == 6);
  CHECK(d.optimal);
  CHECK(dimension_check(g2) == 3);

  const LrcCode full = build_code(certify(gal2(field(7, 1), 1)), 6);
  CHECK(dimension_check(full) == 6);

  CHECK(singleton_bound(6, 2, 2) == 5);
  CHECK(singleton_bound(6, 4, 2) == 2);
}

TEST_CASE("library distances agree with the integer oracle") {
  std::vector<LrcCode> codes{gal1_code(2), gal1_code(4), build_code(certify(gal2(field(7, 1), 1)), 3),
                             build_code(certify(gal2(field(7, 1), 1)), 6),
                             build_code(certify(tamo_barg_multiplicative(field(13, 1), 3)), 3)};
  for (const auto& code : codes) {
    const auto G = oracle_generator(code);
    const auto lib = generator_matrix(code);
    for (std::size_t i = 0; i < code.k; ++i)
      for (std::size_t c = 0; c < code.n; ++c) REQUIRE(lib[i][c] == static_cast<Elem>(G[i][c]));
    const std::size_t want = oracle::min_weight_prime(G, code.field().p());
    CHECK(min_distance(code).distance == want);
    CHECK(min_distance_by_subsets(code).distance == want);
    CHECK(want == singleton_bound(code.n, code.k, static_cast<std::size_t>(code.r)));
  }
}

TEST_CASE("exhaustion cap") {
  const LrcCode big = build_code(certify(gal2(field(11, 1), 1)), 6);
  CHECK(code_of([&] { min_distance(big); }) == Errc::CapExceeded);
  const DistanceReport d = min_distance_by_subsets(big);
  CHECK(d.distance == 6);
  CHECK(d.optimal);
  CHECK(d.method == "subset-rank");
}

TEST_CASE("round trip and linearity, randomized") {
  std::vector<LrcCode> codes{gal1_code(4), build_code(certify(gal2(field(7, 1), 1)), 6),
                             build_code(certify(gal1(field(3, 2), 1)), 4),
                             build_code(certify(tamo_barg_additive(field(2, 3), additive_span(field(2, 3), std::vector<Elem>{1, 2}))), 6)};
  std::mt19937_64 rng(2024);
  for (const auto& code : codes) {
    const Field& F = code.field();
    std::uniform_int_distribution<Elem> pick(0, F.q() - 1);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Elem> a(code.k), b(code.k), mix(code.k);
      for (auto& x : a) x = pick(rng);
      for (auto& x : b) x = pick(rng);
      const Elem alpha = pick(rng), beta = pick(rng);
      for (std::size_t i = 0; i < code.k; ++i) mix[i] = F.add(F.mul(alpha, a[i]), F.mul(beta, b[i]));
      const Codeword wa = encode(code, a), wb = encode(code, b), wm = encode(code, mix);
      for (std::size_t c = 0; c < code.n; ++c)
        REQUIRE(wm.symbols[c] == F.add(F.mul(alpha, wa.symbols[c]), F.mul(beta, wb.symbols[c])));
      for (std::size_t pos = 0; pos < code.n; ++pos) {
        const std::size_t at[] = {pos};
        const RepairResult r = repair(code, erase(wa, at));
        REQUIRE(r.value == wa.symbols[pos]);
        REQUIRE(r.read_positions.size() == static_cast<std::size_t>(code.r));
        for (auto rp : r.read_positions) {
          REQUIRE(rp != pos);
          REQUIRE(code.group_of_coord[rp] == code.group_of_coord[pos]);
        }
      }
    }
  }
}

TEST_CASE("code and codeword serialization") {
  const LrcCode code = gal1_code(2);
  const json j = to_json(code);
  CHECK(j.at("n") == 6);
  CHECK(j.at("b") == 0);
  CHECK(j.at("groups")[0].at("d") == 4);
  CHECK(j.at("groups")[1].at("points") == json::array({0, 1, "inf"}));
  const LrcCode back = code_from_json(j);
  CHECK(back.layout == code.layout);
  CHECK(back.d_values == code.d_values);

  json tampered = j;
  tampered["b"] = 1;
  CHECK(code_of([&] { code_from_json(tampered); }) == Errc::ParseError);

  const Elem a01[] = {0, 1};
  const Codeword w = encode(code, a01);
  const std::size_t at[] = {2};
  const ReceivedWord rw = erase(w, at);
  CHECK(to_text(rw) == "2 3 ? 0 1 1");
  CHECK(to_json(rw).dump() == "[2,3,null,0,1,1]");
  CHECK(received_from_text(code.field(), "2 3 ? 0 1 1").symbols == rw.symbols);
  CHECK(received_from_json(code.field(), to_json(rw)).symbols == rw.symbols);
  CHECK(code_of([&] { received_from_text(code.field(), "2 3 9"); }) == Errc::ParseError);

  const auto frame = to_frame(code.field(), w);
  CHECK(frame == std::vector<std::uint8_t>{6, 0, 0, 0, 2, 3, 4, 0, 1, 1});
  CHECK(codeword_from_frame(code.field(), frame) == w);
  CHECK(symbol_width(field(2, 8)) == 1);
  CHECK(symbol_width(field(257, 1)) == 2);
  CHECK(symbol_width(field(2, 31)) == 4);
  const std::vector<std::uint8_t> truncated(frame.begin(), frame.end() - 1);
  CHECK(code_of([&] { codeword_from_frame(code.field(), truncated); }) == Errc::ParseError);
}
