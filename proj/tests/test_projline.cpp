#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ratlrc/projline.hpp"
#include "ratlrc/serialize.hpp"

using namespace ratlrc;

namespace {

PPoint fin(Elem v) { return PPoint::finite(v); }
const PPoint inf = PPoint::infinity();

std::vector<std::vector<oracle::i64>> as_ints(const OrbitCensus& c, std::uint32_t q) {
  std::vector<std::vector<oracle::i64>> out;
  for (const auto& orb : c.orbits) {
    std::vector<oracle::i64> v;
    for (PPoint u : orb) v.push_back(u.index(q));
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("points order finite first, infinity last") {
  const auto line = projective_line(field(5, 1));
  REQUIRE(line.size() == 6);
  CHECK(line.back() == inf);
  CHECK(std::is_sorted(line.begin(), line.end()));
  CHECK(fin(4) < inf);
  CHECK(inf.index(5) == 5);
  CHECK(PPoint::from_index(5, 5) == inf);
}

TEST_CASE("apply examples over F_5") {
  const Field& f = field(5, 1);
  const Moebius phi(f, 0, 1, 4, 1);  // 1 / (1 - x)
  CHECK(phi.apply(fin(1)) == inf);
  CHECK(phi.apply(inf) == fin(0));
  CHECK(phi.apply(fin(2)) == fin(4));
  for (Elem u = 0; u <= 5; ++u)
    CHECK(phi.apply(PPoint::from_index(u, 5)).index(5) == oracle::moebius_prime(0, 1, 4, 1, u, 5));
}

TEST_CASE("normal form") {
  const Field& f = field(5, 1);
  const Moebius phi(f, 0, 1, 4, 1);
  // first nonzero of (a, c, b, d) is c = 4; scaled by 4^-1 = 4.
  CHECK(phi.a() == 0);
  CHECK(phi.c() == 1);
  CHECK(phi.b() == 4);
  CHECK(phi.d() == 4);
  CHECK(Moebius(f, 2, 4, 0, 2) == Moebius(f, 1, 2, 0, 1));
  CHECK_THROWS_AS(Moebius(f, 1, 2, 2, 4), Error);
}

TEST_CASE("compose and inverse") {
  const Field& f = field(5, 1);
  const Moebius phi(f, 0, 1, 4, 1);
  CHECK(compose(phi, inverse(phi)).is_identity());
  // phi^2 = (x - 1) / x
  CHECK(compose(phi, phi) == Moebius(f, 1, 4, 1, 0));
  CHECK(order(Moebius::identity(f)) == 1);
  CHECK(order(phi) == 3);
  CHECK(power(phi, 3).is_identity());
  CHECK(order(Moebius(field(7, 1), 0, 1, 5, 2)) == 4);  // 1 / (2 (1 - x))
}

TEST_CASE("group laws, randomized") {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{5, 1}, {7, 1}, {2, 3}, {3, 2}, {31, 1}}) {
    const Field& F = field(p, m);
    std::mt19937_64 rng(42 + p);
    std::uniform_int_distribution<Elem> pick(0, F.q() - 1);
    auto random_moebius = [&] {
      while (true) {
        const Elem a = pick(rng), b = pick(rng), c = pick(rng), d = pick(rng);
        if (F.sub(F.mul(a, d), F.mul(b, c)) != 0) return Moebius(F, a, b, c, d);
      }
    };
    const auto line = projective_line(F);
    for (int i = 0; i < 200; ++i) {
      const Moebius x = random_moebius(), y = random_moebius(), z = random_moebius();
      REQUIRE(compose(compose(x, y), z) == compose(x, compose(y, z)));
      REQUIRE(compose(x, inverse(x)).is_identity());
      const Moebius xy = compose(x, y);
      std::vector<bool> hit(F.q() + 1, false);
      for (PPoint u : line) {
        REQUIRE(xy.apply(u) == x.apply(y.apply(u)));
        hit[x.apply(u).index(F.q())] = true;
      }
      REQUIRE(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
    }
  }
}

TEST_CASE("orbit examples match brute-force iteration") {
  const Field& f5 = field(5, 1);
  const OrbitCensus c5 = orbits(Moebius(f5, 0, 1, 4, 1));
  CHECK(c5.orbits == std::vector<std::vector<PPoint>>{{fin(0), fin(1), inf}, {fin(2), fin(3), fin(4)}});
  CHECK(c5.short_count == 0);
  CHECK(as_ints(c5, 5) == oracle::orbits_prime(0, 1, 4, 1, 5));

  const Field& f7 = field(7, 1);
  const OrbitCensus c7 = orbits(Moebius(f7, 0, 1, 6, 1));
  CHECK(c7.short_count == 2);
  REQUIRE(c7.orbits.size() == 4);
  CHECK(c7.orbits[0] == std::vector<PPoint>{fin(3)});
  CHECK(c7.orbits[1] == std::vector<PPoint>{fin(5)});
  CHECK(as_ints(c7, 7) == oracle::orbits_prime(0, 1, 6, 1, 7));

  const OrbitCensus g2 = orbits(Moebius(f7, 0, 1, 5, 2));
  CHECK(g2.orbits == std::vector<std::vector<PPoint>>{{fin(0), fin(1), fin(4), inf}, {fin(2), fin(3), fin(5), fin(6)}});
  CHECK(g2.short_count == 0);
  CHECK(g2.group_order == 4);
}

TEST_CASE("elements of order") {
  const auto e3 = elements_of_order(field(5, 1), 3, 10);
  CHECK(!e3.empty());
  CHECK(e3.size() <= 10);
  for (const auto& phi : e3) CHECK(order(phi) == 3);
  CHECK(std::is_sorted(e3.begin(), e3.end()));

  const auto e5 = elements_of_order(field(2, 2), 5, 3);
  CHECK(e5.size() == 3);
  for (const auto& phi : e5) CHECK(order(phi) == 5);

  CHECK_THROWS_AS(elements_of_order(field(5, 1), 1, 10), Error);
  CHECK(elements_of_order(field(5, 1), 7, 10).empty());
}

TEST_CASE("scan visits |PGL(2,q)| distinct elements in order") {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}}) {
    const Field& F = field(p, m);
    const std::uint64_t q = F.q();
    std::vector<Moebius> all;
    for_each_moebius(F, [&](const Moebius& phi) { all.push_back(phi); });
    CHECK(all.size() == q * (q * q - 1));
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  }
}

TEST_CASE("three short orbits and the orbit-count law, small q") {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}}) {
    const Field& F = field(p, m);
    const std::uint64_t q = F.q();
    for_each_moebius(F, [&](const Moebius& phi) {
      const OrbitCensus c = orbits(phi);
      const std::uint64_t n = c.group_order;
      std::uint64_t total = 0;
      for (auto s : c.sizes) {
        REQUIRE(n % s == 0);
        total += s;
      }
      REQUIRE(total == q + 1);
      if (n < 2) return;
      REQUIRE(c.short_count <= 3);
      const std::uint64_t ceil = (q + 1 + n - 1) / n;
      REQUIRE(c.orbits.size() == (c.short_count <= 1 ? ceil : ceil + 1));
    });
  }
}

TEST_CASE("transform JSON") {
  const Field& f = field(7, 1);
  const Moebius phi(f, 0, 1, 5, 2);
  const json j = to_json(phi);
  CHECK(j == json::array({0, 3, 1, 6}));
  CHECK(moebius_from_json(f, j) == phi);
  CHECK(to_json(inf) == "inf");
  CHECK(point_from_json(f, json("inf")) == inf);
  CHECK_THROWS_AS(moebius_from_json(f, json::array({1, 2, 3})), Error);
}
