#include "ratlrc/ratfun.hpp"

#include <algorithm>

namespace ratlrc {

namespace {

// sum_i c_i A^i B^(n - i) for linear A, B, accumulated as R <- R * B + c_j A^j.
Polynomial homogenize(const Polynomial& c, int n, const Polynomial& A, const Polynomial& B) {
  const Field& f = c.field();
  Polynomial acc(f);
  Polynomial apow = Polynomial::constant(f, 1);
  for (int j = 0; j <= n; ++j) {
    acc.mul_linear(B[0], B[1]);
    acc.add_scaled(apow, c[j]);
    if (j < n) apow.mul_linear(A[0], A[1]);
  }
  return acc;
}

}  // namespace

bool passes_separability_guard(const Polynomial& f, const Polynomial& g) {
  // For coprime f, g the Wronskian vanishes iff f' = g' = 0, i.e. iff
  // f - t g is inseparable in x.
  return !(f.derivative() * g - g.derivative() * f).is_zero();
}

bool wronskian_in_frobenius_ring(const RationalMap& h) {
  const Polynomial w = h.num().derivative() * h.den() - h.den().derivative() * h.num();
  return !w.is_constant() && w.only_exponents_divisible_by(h.field().q());
}

RationalMap make_rational(Polynomial f, Polynomial g) {
  if (&f.field() != &g.field()) throw Error(Errc::FieldMismatch, "numerator and denominator over different fields");
  if (g.is_zero()) throw Error(Errc::ZeroDenominator, "denominator is the zero polynomial");
  const Field& F = f.field();
  const Polynomial common = gcd(f, g);
  if (common.degree() > 0) {
    f = divmod(f, common).quotient;
    g = divmod(g, common).quotient;
  }
  if (!g.is_monic()) {
    const Elem s = F.inv(g.leading());
    f = f.scaled(s);
    g = g.scaled(s);
  }
  if (std::max(f.degree(), g.degree()) < 1) throw Error(Errc::DegreeZero, "map is constant");
  if (!passes_separability_guard(f, g))
    throw Error(Errc::Inseparable, "f'g - g'f vanishes: (" + f.to_string() + ")/(" +
                                       g.to_string() + ")");
  return RationalMap(std::move(f), std::move(g));
}

RationalMap make_polynomial_map(Polynomial f) {
  const Field& F = f.field();
  return make_rational(std::move(f), Polynomial::constant(F, 1));
}

PPoint RationalMap::eval(PPoint u) const noexcept {
  const Field& f = field();
  if (u.is_infinity()) {
    if (num_.degree() > den_.degree()) return PPoint::infinity();
    if (num_.degree() < den_.degree()) return PPoint::finite(0);
    return PPoint::finite(num_.leading());  // den is monic
  }
  const Elem gu = den_.eval(u.value());
  if (gu == 0) return PPoint::infinity();
  return PPoint::finite(f.div(num_.eval(u.value()), gu));
}

RationalMap RationalMap::reciprocal() const { return make_rational(den_, num_); }

std::strong_ordering operator<=>(const RationalMap& a, const RationalMap& b) {
  if (auto c = a.num_ <=> b.num_; c != 0) return c;
  return a.den_ <=> b.den_;
}

std::string RationalMap::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::vector<std::vector<PPoint>> FiberMap::partition() const {
  std::vector<std::vector<PPoint>> out;
  for (const auto& fb : by_target)
    if (!fb.empty()) out.push_back(fb);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return out;
}

FiberMap fibers(const RationalMap& h) {
  const std::uint32_t q = h.field().q();
  FiberMap out;
  out.q = q;
  out.by_target.resize(std::size_t{q} + 1);
  // Domain points are visited in canonical order, so each fiber comes out sorted.
  for (std::uint32_t i = 0; i <= q; ++i) {
    const PPoint u = PPoint::from_index(i, q);
    out.by_target[h.eval(u).index(q)].push_back(u);
  }
  return out;
}

std::size_t split_count(const RationalMap& h) {
  const std::uint32_t q = h.field().q();
  std::vector<std::uint32_t> counts(std::size_t{q} + 1, 0);
  for (std::uint32_t i = 0; i <= q; ++i) ++counts[h.eval(PPoint::from_index(i, q)).index(q)];
  const auto deg = static_cast<std::uint32_t>(h.degree());
  return static_cast<std::size_t>(std::count(counts.begin(), counts.end(), deg));
}

std::vector<PPoint> image(const RationalMap& h) {
  const std::uint32_t q = h.field().q();
  std::vector<char> hit(std::size_t{q} + 1, 0);
  for (std::uint32_t i = 0; i <= q; ++i) hit[h.eval(PPoint::from_index(i, q)).index(q)] = 1;
  std::vector<PPoint> out;
  for (std::uint32_t i = 0; i <= q; ++i)
    if (hit[i]) out.push_back(PPoint::from_index(i, q));
  return out;
}

RationalMap compose_left(const Moebius& phi, const RationalMap& h) {
  if (&phi.field() != &h.field()) throw Error(Errc::FieldMismatch, "compose_left across fields");
  const auto& f = h.num();
  const auto& g = h.den();
  return make_rational(f.scaled(phi.a()) + g.scaled(phi.b()), f.scaled(phi.c()) + g.scaled(phi.d()));
}

RationalMap compose_right(const RationalMap& h, const Moebius& psi) {
  if (&psi.field() != &h.field()) throw Error(Errc::FieldMismatch, "compose_right across fields");
  const Field& F = h.field();
  const Polynomial A(F, {psi.b(), psi.a()});
  const Polynomial B(F, {psi.d(), psi.c()});
  const int n = h.degree();
  return make_rational(homogenize(h.num(), n, A, B), homogenize(h.den(), n, A, B));
}

InfSplitData inf_split(const RationalMap& h) {
  InfSplitData out;
  const Field& F = h.field();
  const int df = h.num().degree();
  const int dg = h.den().degree();
  if (dg >= 1) {
    const Factorization fz = factor(h.den());
    for (const auto& [fac, mult] : fz.factors) {
      out.places.push_back({fac, mult, fac.degree()});
      out.denominator_factor_degrees.push_back(fac.degree());
    }
  }
  if (df > dg) {
    out.places.push_back({std::nullopt, df - dg, 1});
    out.delta = 1;
  }
  int total = 0;
  for (const auto& pl : out.places) total += pl.ramification * pl.relative_degree;
  if (total != h.degree())
    throw Error(Errc::TheoremViolation, "sum e*f = " + std::to_string(total) + " != deg h = " +
                                            std::to_string(h.degree()) + " over " + F.name());
  return out;
}

long ramified_bound(const RationalMap& h) {
  const InfSplitData data = inf_split(h);
  long sum = 0;
  for (int d : data.denominator_factor_degrees) sum += d;
  return h.degree() + sum + data.delta - 1;
}

}  // namespace ratlrc
