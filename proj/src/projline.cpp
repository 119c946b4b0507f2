#include "ratlrc/projline.hpp"

#include <algorithm>
#include <tuple>

namespace ratlrc {

std::vector<PPoint> projective_line(const Field& f) {
  std::vector<PPoint> pts;
  pts.reserve(std::size_t{f.q()} + 1);
  for (Elem a = 0; a < f.q(); ++a) pts.push_back(PPoint::finite(a));
  pts.push_back(PPoint::infinity());
  return pts;
}

Moebius::Moebius(const Field& f, Elem a, Elem b, Elem c, Elem d) : field_(&f) {
  for (Elem v : {a, b, c, d})
    if (!f.contains(v)) throw Error(Errc::OutOfRange, "Moebius entry outside " + f.name());
  if (f.sub(f.mul(a, d), f.mul(b, c)) == 0)
    throw Error(Errc::InvalidArgument, "singular Moebius matrix (ad - bc = 0)");
  const Elem lead = a != 0 ? a : c;  // c != 0 whenever a == 0
  const Elem s = f.inv(lead);
  a_ = f.mul(a, s);
  b_ = f.mul(b, s);
  c_ = f.mul(c, s);
  d_ = f.mul(d, s);
}

PPoint Moebius::apply(PPoint u) const noexcept {
  const Field& f = *field_;
  if (u.is_infinity()) return c_ == 0 ? PPoint::infinity() : PPoint::finite(f.div(a_, c_));
  const Elem den = f.add(f.mul(c_, u.value()), d_);
  if (den == 0) return PPoint::infinity();
  return PPoint::finite(f.div(f.add(f.mul(a_, u.value()), b_), den));
}

std::strong_ordering operator<=>(const Moebius& x, const Moebius& y) noexcept {
  return std::tie(x.a_, x.b_, x.c_, x.d_) <=> std::tie(y.a_, y.b_, y.c_, y.d_);
}

std::string Moebius::to_string() const {
  return "(" + std::to_string(a_) + "x+" + std::to_string(b_) + ")/(" + std::to_string(c_) + "x+" +
         std::to_string(d_) + ")";
}

Moebius compose(const Moebius& phi, const Moebius& psi) {
  if (&phi.field() != &psi.field()) throw Error(Errc::FieldMismatch, "compose across fields");
  const Field& f = phi.field();
  auto dot = [&f](Elem x1, Elem y1, Elem x2, Elem y2) { return f.add(f.mul(x1, y1), f.mul(x2, y2)); };
  return Moebius(f, dot(phi.a(), psi.a(), phi.b(), psi.c()), dot(phi.a(), psi.b(), phi.b(), psi.d()),
                 dot(phi.c(), psi.a(), phi.d(), psi.c()), dot(phi.c(), psi.b(), phi.d(), psi.d()));
}

Moebius inverse(const Moebius& phi) {
  const Field& f = phi.field();
  return Moebius(f, phi.d(), f.neg(phi.b()), f.neg(phi.c()), phi.a());
}

Moebius power(const Moebius& phi, std::uint64_t n) {
  Moebius result = Moebius::identity(phi.field());
  Moebius base = phi;
  while (n) {
    if (n & 1) result = compose(result, base);
    base = compose(base, base);
    n >>= 1;
  }
  return result;
}

std::uint64_t order(const Moebius& phi) {
  const std::uint64_t q = phi.field().q();
  const std::uint64_t cap = q * (q * q - 1);
  Moebius cur = phi;
  for (std::uint64_t n = 1; n <= cap; ++n) {
    if (cur.is_identity()) return n;
    cur = compose(cur, phi);
  }
  throw Error(Errc::TheoremViolation, "order of " + phi.to_string() + " exceeds |PGL(2,q)|");
}

OrbitCensus orbits(const Moebius& phi) { return orbits(phi, order(phi)); }

OrbitCensus orbits(const Moebius& phi, std::uint64_t group_order) {
  const std::uint32_t q = phi.field().q();
  std::vector<char> seen(std::size_t{q} + 1, 0);
  OrbitCensus census;
  census.group_order = group_order;
  for (std::uint32_t i = 0; i <= q; ++i) {
    if (seen[i]) continue;
    std::vector<PPoint> orbit;
    PPoint u = PPoint::from_index(i, q);
    while (!seen[u.index(q)]) {
      seen[u.index(q)] = 1;
      orbit.push_back(u);
      u = phi.apply(u);
    }
    std::sort(orbit.begin(), orbit.end());
    census.orbits.push_back(std::move(orbit));
  }
  std::sort(census.orbits.begin(), census.orbits.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x.front() < y.front();
  });
  for (const auto& o : census.orbits) {
    census.sizes.push_back(o.size());
    (o.size() < group_order ? census.short_count : census.long_count) += 1;
  }
  return census;
}

void for_each_moebius(const Field& f, const std::function<void(const Moebius&)>& visit) {
  const Elem q = f.q();
  // a = 0 forces c = 1 and b != 0.
  for (Elem b = 1; b < q; ++b)
    for (Elem d = 0; d < q; ++d) visit(Moebius(f, 0, b, 1, d, Moebius::Normalized{}));
  for (Elem b = 0; b < q; ++b)
    for (Elem c = 0; c < q; ++c) {
      const Elem bc = f.mul(b, c);
      for (Elem d = 0; d < q; ++d)
        if (d != bc) visit(Moebius(f, 1, b, c, d, Moebius::Normalized{}));
    }
}

std::vector<Moebius> elements_of_order(const Field& f, std::uint64_t n, std::size_t limit) {
  if (n < 2) throw Error(Errc::InvalidArgument, "elements_of_order requires n >= 2");
  std::vector<Moebius> out;
  if (limit == 0) return out;
  // Element orders in PGL(2, q) are bounded by q + 1.
  if (n > std::uint64_t{f.q()} + 1) return out;
  struct Done {};
  try {
    for_each_moebius(f, [&](const Moebius& phi) {
      if (out.size() >= limit) throw Done{};
      if (phi.is_identity()) return;
      // Early exit once the power cycle passes n.
      Moebius cur = phi;
      for (std::uint64_t k = 1; k <= n; ++k) {
        if (cur.is_identity()) {
          if (k == n) out.push_back(phi);
          return;
        }
        cur = compose(cur, phi);
      }
    });
  } catch (const Done&) {
  }
  if (out.size() > limit) out.erase(out.begin() + static_cast<std::ptrdiff_t>(limit), out.end());
  return out;
}

}  // namespace ratlrc
