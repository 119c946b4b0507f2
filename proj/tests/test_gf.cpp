#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ratlrc/gf.hpp"
#include "ratlrc/poly.hpp"
#include "ratlrc/serialize.hpp"

using namespace ratlrc;

namespace {

// Smallest monic quadratic over F_p, (c0, c1) lexicographic, without roots.
std::vector<std::uint32_t> smallest_irreducible_quadratic(std::uint32_t p) {
  for (std::uint32_t c0 = 0; c0 < p; ++c0)
    for (std::uint32_t c1 = 0; c1 < p; ++c1) {
      bool root = false;
      for (std::uint32_t x = 0; x < p && !root; ++x) root = (x * x + c1 * x + c0) % p == 0;
      if (!root) return {c0, c1, 1};
    }
  return {};
}

Polynomial P(const Field& f, std::vector<Elem> c) { return Polynomial(f, std::move(c)); }

}  // namespace

TEST_CASE("field construction") {
  const Field& f5 = field(5, 1);
  CHECK(f5.q() == 5);
  CHECK(f5.modulus() == std::vector<std::uint32_t>{0, 1});
  CHECK(&field(5, 1) == &f5);

  CHECK(field(2, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(field(3, 2).modulus() == smallest_irreducible_quadratic(3));
  CHECK(field(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(field(5, 2).modulus() == smallest_irreducible_quadratic(5));
  CHECK(field(7, 2).modulus() == smallest_irreducible_quadratic(7));
  // x^3 + 1 has the root 1; x^3 + x^2 + 1 is next.
  CHECK(field(2, 3).modulus() == std::vector<std::uint32_t>{1, 0, 1, 1});

  CHECK_THROWS_AS(field(4, 1), Error);
  CHECK_THROWS_AS(field(5, 0), Error);
  try {
    field(2, 32);
    FAIL("expected cap error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CapExceeded);
  }
  CHECK(field(2, 31).q() == (1u << 31));
}

TEST_CASE("moduli are irreducible") {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 4}, {2, 5}, {2, 6}, {2, 8}, {3, 3}, {3, 4}, {5, 3}, {7, 2}, {2, 21}, {3, 13}}) {
    const Field& f = field(p, m);
    const Field& base = field(p, 1);
    CHECK(is_irreducible(Polynomial(base, f.modulus())));
  }
}

TEST_CASE("element arithmetic examples") {
  const Field& f7 = field(7, 1);
  CHECK(f7.element(3).inv().enc() == 5);
  const Field& f4 = field(2, 2);
  CHECK((f4.element(2) * f4.element(2)).enc() == 3);  // z*z = z+1
  const Field& f5 = field(5, 1);
  CHECK(f5.zero().pow(0).enc() == 1);
  CHECK(f5.pow(0, 0) == 1);

  try {
    f5.zero().inv();
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DivisionByZero);
  }
  try {
    (void)(f5.one() + f7.one());
    FAIL("expected FieldMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FieldMismatch);
  }
  CHECK_THROWS_AS(f5.element(5), Error);
}

TEST_CASE("enumerate") {
  auto encs = [](const Field& f) {
    std::vector<Elem> out;
    for (const auto& e : enumerate(f)) out.push_back(e.enc());
    return out;
  };
  CHECK(encs(field(5, 1)) == std::vector<Elem>{0, 1, 2, 3, 4});
  CHECK(encs(field(2, 2)) == std::vector<Elem>{0, 1, 2, 3});
  const auto f9 = encs(field(3, 2));
  CHECK(f9.size() == 9);
  CHECK(f9.front() == 0);
  CHECK(f9.back() == 8);
}

TEST_CASE("extension arithmetic matches the digit oracle") {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
    const Field& f = field(p, m);
    for (Elem a = 0; a < f.q(); ++a)
      for (Elem b = 0; b < f.q(); ++b) {
        REQUIRE(f.mul(a, b) == oracle::ext_mul(a, b, p, f.modulus()));
        REQUIRE(f.add(a, b) == oracle::ext_add(a, b, p, m));
      }
  }
}

TEST_CASE("untabled extension field agrees with the oracle") {
  // 3^13 and 2^21 exceed the table limit and use digit arithmetic.
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 13}, {2, 21}}) {
    const Field& f = field(p, m);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Elem> pick(0, f.q() - 1);
    for (int i = 0; i < 2000; ++i) {
      const Elem a = pick(rng), b = pick(rng);
      REQUIRE(f.mul(a, b) == oracle::ext_mul(a, b, p, f.modulus()));
      REQUIRE(f.add(a, b) == oracle::ext_add(a, b, p, m));
      if (a != 0) REQUIRE(f.mul(a, f.inv(a)) == 1);
    }
  }
}

TEST_CASE("field axioms, randomized") {
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields{
      {2, 1}, {3, 1}, {5, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 8}, {5, 3}, {257, 1}, {2147483647, 1}, {3, 13}};
  for (auto [p, m] : fields) {
    const Field& f = field(p, m);
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<Elem> pick(0, f.q() - 1);
    for (int i = 0; i < 10000; ++i) {
      const FieldElement a = f.element(pick(rng)), b = f.element(pick(rng)), c = f.element(pick(rng));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a + (-a) == f.zero());
      REQUIRE(a - b + b == a);
      if (!a.is_zero()) REQUIRE(a * a.inv() == f.one());
    }
  }
}

TEST_CASE("Frobenius fixes every element, q <= 512") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
    for (std::uint32_t m = 1;; ++m) {
      std::uint64_t q = 1;
      for (std::uint32_t i = 0; i < m; ++i) q *= p;
      if (q > 512) break;
      const Field& f = field(p, m);
      for (Elem a = 0; a < f.q(); ++a) REQUIRE(f.pow(a, f.q()) == a);
    }
  }
}

TEST_CASE("polynomial factor examples") {
  const Field& f5 = field(5, 1);
  auto fz = factor(P(f5, {0, 4, 1}));  // x^2 + 4x = x (x + 4)
  REQUIRE(fz.factors.size() == 2);
  CHECK(fz.factors[0].factor == P(f5, {0, 1}));
  CHECK(fz.factors[1].factor == P(f5, {4, 1}));
  CHECK(fz.leading == 1);

  const Field& f2 = field(2, 1);
  auto irr = factor(P(f2, {1, 1, 1}));
  REQUIRE(irr.factors.size() == 1);
  CHECK(irr.factors[0].multiplicity == 1);
  CHECK(irr.factors[0].factor == P(f2, {1, 1, 1}));

  const Field& f7 = field(7, 1);
  // 2 (x - 1)^2 (x^2 + 1) over F_7; x^2 + 1 has no root since -1 is a non-residue mod 7.
  const Polynomial g = P(f7, {2}) * P(f7, {6, 1}) * P(f7, {6, 1}) * P(f7, {1, 0, 1});
  auto fz7 = factor(g);
  CHECK(fz7.leading == 2);
  CHECK(expand(f7, fz7) == g);
  REQUIRE(fz7.factors.size() == 2);
  CHECK(fz7.factors[0].factor == P(f7, {6, 1}));
  CHECK(fz7.factors[0].multiplicity == 2);
  CHECK(fz7.factors[1].factor == P(f7, {1, 0, 1}));

  try {
    factor(Polynomial(f5));
    FAIL("expected ZeroPolynomial");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ZeroPolynomial);
  }
  try {
    factor(Polynomial::monomial(f5, 1, 17));
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CapExceeded);
  }
}

TEST_CASE("polynomial invariants, randomized") {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}, {7, 1}}) {
    const Field& f = field(p, m);
    std::mt19937_64 rng(99 + p * 10 + m);
    std::uniform_int_distribution<Elem> pick(0, f.q() - 1);
    std::uniform_int_distribution<int> deg(1, 8);
    auto random_poly = [&](int d) {
      std::vector<Elem> c(static_cast<std::size_t>(d) + 1);
      for (auto& x : c) x = pick(rng);
      if (c.back() == 0) c.back() = 1;
      return Polynomial(f, c);
    };
    for (int i = 0; i < 300; ++i) {
      const Polynomial a = random_poly(deg(rng)), b = random_poly(deg(rng));
      const DivMod dm = divmod(a, b);
      REQUIRE(dm.quotient * b + dm.remainder == a);
      REQUIRE(dm.remainder.degree() < b.degree());
      const Polynomial g = gcd(a, b);
      REQUIRE(divmod(a, g).remainder.is_zero());
      REQUIRE(divmod(b, g).remainder.is_zero());

      const Factorization fz = factor(a);
      REQUIRE(expand(f, fz) == a);
      for (std::size_t j = 0; j < fz.factors.size(); ++j) {
        const auto& fc = fz.factors[j].factor;
        REQUIRE(fc.is_monic());
        REQUIRE(is_irreducible(fc));
        if (fc.degree() > 1)
          for (Elem x = 0; x < f.q(); ++x) REQUIRE(fc.eval(x) != 0);
        if (j > 0) REQUIRE(fz.factors[j - 1].factor < fc);
      }
    }
  }
}

TEST_CASE("derivative and evaluation") {
  const Field& f5 = field(5, 1);
  const Polynomial p = P(f5, {1, 2, 0, 1});  // x^3 + 2x + 1
  CHECK(p.derivative() == P(f5, {2, 0, 3}));
  CHECK(p.eval(2) == oracle::poly_eval_prime({1, 2, 0, 1}, 2, 5));
  CHECK(Polynomial::monomial(f5, 1, 5).derivative().is_zero());
}

TEST_CASE("field JSON") {
  const Field& f = field(3, 2);
  const json j = to_json(f);
  CHECK(j.dump() == R"({"m":2,"modulus":[1,0,1],"p":3})");
  CHECK(&field_from_json(j) == &f);
  json bad = j;
  bad["modulus"] = {2, 2, 1};
  CHECK_THROWS_AS(field_from_json(bad), Error);
}
