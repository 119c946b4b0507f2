#include "ratlrc/goodfun.hpp"

#include <algorithm>
#include <set>

namespace ratlrc {

RationalMap from_moebius(const Moebius& phi) {
  if (phi.is_affine())
    throw Error(Errc::AffineGenerator, "generator " + phi.to_string() + " is affine (c = 0)");
  return from_moebius(phi, order(phi));
}

RationalMap from_moebius(const Moebius& phi, std::uint64_t n) {
  if (phi.is_affine())
    throw Error(Errc::AffineGenerator, "generator " + phi.to_string() + " is affine (c = 0)");
  if (n < 2) throw Error(Errc::OrderOne, "generator has order 1");
  const Field& F = phi.field();

  std::vector<Moebius> iterates;
  iterates.reserve(n - 1);
  Moebius cur = phi;
  for (std::uint64_t i = 1; i < n; ++i) {
    iterates.push_back(cur);
    cur = compose(cur, phi);
  }

  // Common denominator: product over the distinct finite poles of the iterates.
  std::vector<Elem> poles;
  for (const auto& it : iterates)
    if (!it.is_affine()) poles.push_back(F.neg(F.div(it.d(), it.c())));
  std::sort(poles.begin(), poles.end());
  poles.erase(std::unique(poles.begin(), poles.end()), poles.end());
  Polynomial D = Polynomial::constant(F, 1);
  for (Elem p : poles) D.mul_linear(F.neg(p), 1);

  Polynomial N = D;
  N.mul_linear(0, 1);
  for (const auto& it : iterates) {
    if (it.is_affine()) {
      Polynomial term = D;
      N.add_scaled(term.mul_linear(it.b(), it.a()), F.inv(it.d()));
    } else {
      const Elem pole = F.neg(F.div(it.d(), it.c()));
      N.add_scaled(deflate(D, pole).mul_linear(it.b(), it.a()), F.inv(it.c()));
    }
  }

  RationalMap h = make_rational(std::move(N), std::move(D));
  if (static_cast<std::uint64_t>(h.degree()) != n)
    throw Error(Errc::TheoremViolation, "sum of iterates of " + phi.to_string() + " has degree " +
                                            std::to_string(h.degree()) + ", expected " + std::to_string(n));
  if (compose_right(h, phi) != h)
    throw Error(Errc::TheoremViolation, "sum of iterates of " + phi.to_string() + " is not phi-invariant");
  return h;
}

Moebius gal1_generator(const Field& f, Elem w) {
  if (w == 0) throw Error(Errc::InvalidArgument, "w must be nonzero");
  return Moebius(f, 0, f.mul(w, w), f.neg(1), w);
}

Moebius gal2_generator(const Field& f, Elem d) {
  if (f.p() == 2) throw Error(Errc::EvenCharacteristic, "gal2 needs odd q");
  if (d == 0) throw Error(Errc::InvalidArgument, "d must be nonzero");
  return Moebius(f, 0, f.mul(d, d), f.from_int(-2), f.mul(f.from_int(2), d));
}

RationalMap gal1(const Field& f, Elem w) {
  if (!f.contains(w)) throw Error(Errc::OutOfRange, "w outside " + f.name());
  if (w == 0) throw Error(Errc::InvalidArgument, "w must be nonzero");
  const Elem w2 = f.mul(w, w);
  const Elem w3 = f.mul(w2, w);
  Polynomial num(f, {w3, f.neg(f.mul(f.from_int(3), w2)), 0, 1});
  Polynomial den(f, {0, f.neg(w), 1});
  return make_rational(std::move(num), std::move(den));
}

RationalMap gal2(const Field& f, Elem d) {
  if (f.p() == 2) throw Error(Errc::EvenCharacteristic, "gal2 needs odd q, got " + f.name());
  if (!f.contains(d)) throw Error(Errc::OutOfRange, "d outside " + f.name());
  if (d == 0) throw Error(Errc::InvalidArgument, "d must be nonzero");
  auto k = [&f](std::int64_t n) { return f.from_int(n); };
  const Elem d2 = f.mul(d, d);
  const Elem d3 = f.mul(d2, d);
  const Elem d4 = f.mul(d3, d);
  Polynomial num(f, {f.neg(d4), f.mul(k(8), d3), f.neg(f.mul(k(12), d2)), 0, k(4)});
  // 2x (x - d)(2x - d) = 4x^3 - 6d x^2 + 2d^2 x
  Polynomial den(f, {0, f.mul(k(2), d2), f.neg(f.mul(k(6), d)), k(4)});
  return make_rational(std::move(num), std::move(den));
}

RationalMap s_set(const Field& f, std::span<const Elem> S, Elem a) {
  if (S.empty()) throw Error(Errc::InvalidArgument, "S must be nonempty");
  std::set<Elem> seen;
  for (Elem s : S) {
    if (!f.contains(s)) throw Error(Errc::OutOfRange, "S member outside " + f.name());
    if (!seen.insert(s).second) throw Error(Errc::InvalidArgument, "S has a repeated member " + std::to_string(s));
  }
  if (seen.count(a)) throw Error(Errc::PoleInSet, "pole a = " + std::to_string(a) + " lies in S");
  Polynomial num = Polynomial::constant(f, 1);
  for (Elem s : S) num = num * Polynomial::linear_root(f, s);
  return make_rational(std::move(num), Polynomial::linear_root(f, a));
}

RationalMap tamo_barg_multiplicative(const Field& f, int r) {
  if (r < 1) throw Error(Errc::InvalidArgument, "locality must be >= 1");
  if ((f.q() - 1) % static_cast<std::uint32_t>(r + 1) != 0)
    throw Error(Errc::NotDivisible, std::to_string(r + 1) + " does not divide q - 1 = " + std::to_string(f.q() - 1));
  return make_polynomial_map(Polynomial::monomial(f, 1, static_cast<std::size_t>(r + 1)));
}

std::vector<Elem> additive_span(const Field& f, std::span<const Elem> generators) {
  std::set<Elem> span{0};
  for (Elem g : generators) {
    if (!f.contains(g)) throw Error(Errc::OutOfRange, "generator outside " + f.name());
    std::set<Elem> next = span;
    for (Elem s : span) {
      Elem cur = s;
      for (std::uint32_t k = 1; k < f.p(); ++k) {
        cur = f.add(cur, g);
        next.insert(cur);
      }
    }
    span = std::move(next);
  }
  return {span.begin(), span.end()};
}

RationalMap tamo_barg_additive(const Field& f, std::span<const Elem> H) {
  std::set<Elem> members;
  for (Elem a : H) {
    if (!f.contains(a)) throw Error(Errc::OutOfRange, "H member outside " + f.name());
    members.insert(a);
  }
  if (members.size() != H.size()) throw Error(Errc::NotASubgroup, "H has repeated members");
  if (members.size() < 2 || !members.count(0)) throw Error(Errc::NotASubgroup, "H must contain 0 and a nonzero element");
  for (Elem a : members)
    for (Elem b : members)
      if (!members.count(f.add(a, b))) throw Error(Errc::NotASubgroup, "H is not closed under addition");
  Polynomial h = Polynomial::constant(f, 1);
  for (Elem a : members) h = h * Polynomial::linear_root(f, a);
  return make_polynomial_map(std::move(h));
}

GoodnessCertificate certify(const RationalMap& h) {
  const FiberMap fm = fibers(h);
  GoodnessCertificate cert{h, h.degree() - 1, {}};
  const auto deg = static_cast<std::size_t>(h.degree());
  for (std::uint32_t t = 0; t <= fm.q; ++t)
    if (fm.by_target[t].size() == deg) cert.groups.push_back({PPoint::from_index(t, fm.q), fm.by_target[t]});
  return cert;
}

void validate(const GoodnessCertificate& cert) {
  const auto fail = [](const std::string& why) { throw Error(Errc::TheoremViolation, "certificate: " + why); };
  if (cert.r != cert.h.degree() - 1) fail("r != deg h - 1");
  std::set<PPoint> used;
  for (std::size_t i = 0; i < cert.groups.size(); ++i) {
    const auto& g = cert.groups[i];
    if (g.points.size() != static_cast<std::size_t>(cert.r + 1)) fail("group size != r + 1");
    if (!std::is_sorted(g.points.begin(), g.points.end())) fail("group points unsorted");
    if (i > 0 && !(cert.groups[i - 1].value < g.value)) fail("values not strictly ascending");
    for (PPoint u : g.points) {
      if (!used.insert(u).second) fail("groups overlap at " + u.to_string());
      if (cert.h.eval(u) != g.value) fail("h not constant on group " + g.value.to_string());
    }
  }
}

std::uint64_t predicted_split_count(std::size_t short_orbits, std::uint64_t q, std::uint64_t r) {
  const std::uint64_t n = r + 1;
  const std::uint64_t ceil = (q + 1 + n - 1) / n;
  switch (short_orbits) {
    case 0:
      if ((q + 1) % n != 0)
        throw Error(Errc::TheoremViolation, "no short orbits but r + 1 does not divide q + 1");
      return (q + 1) / n;
    case 1:
    case 2:
      return ceil - 1;
    case 3:
      return ceil - 2;
    default:
      throw Error(Errc::TheoremViolation, std::to_string(short_orbits) + " short orbits (at most 3 allowed)");
  }
}

std::uint64_t predicted_split_count(const OrbitCensus& census, std::uint64_t q, std::uint64_t r) {
  if (census.group_order != r + 1)
    throw Error(Errc::InvalidArgument, "census taken for group order " + std::to_string(census.group_order) +
                                           ", expected " + std::to_string(r + 1));
  return predicted_split_count(census.short_count, q, r);
}

}  // namespace ratlrc
