#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "ratlrc/poly.hpp"
#include "ratlrc/projline.hpp"

namespace ratlrc {

/// Reduced fraction h = num / den acting on P^1(F_q).
///
/// Invariants: gcd(num, den) = 1, den monic, max(deg num, deg den) >= 1, and
/// the Wronskian num' den - den' num is nonzero.
class RationalMap {
 public:
  const Field& field() const noexcept { return num_.field(); }
  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }
  int degree() const noexcept { return std::max(num_.degree(), den_.degree()); }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }

  PPoint eval(PPoint u) const noexcept;
  PPoint operator()(PPoint u) const noexcept { return eval(u); }
  /// 1 / h.
  RationalMap reciprocal() const;

  friend bool operator==(const RationalMap&, const RationalMap&) = default;
  /// Canonical order: numerator, then denominator, in polynomial order.
  friend std::strong_ordering operator<=>(const RationalMap& a, const RationalMap& b);

  std::string to_string() const;

 private:
  friend RationalMap make_rational(Polynomial f, Polynomial g);
  RationalMap(Polynomial f, Polynomial g) : num_(std::move(f)), den_(std::move(g)) {}

  Polynomial num_;
  Polynomial den_;
};

/// Reduces f / g to canonical form. Throws ZeroDenominator, DegreeZero or
/// Inseparable.
RationalMap make_rational(Polynomial f, Polynomial g);
/// Polynomial map f / 1.
RationalMap make_polynomial_map(Polynomial f);

/// f' g - g' f != 0, the separability predicate used by make_rational.
bool passes_separability_guard(const Polynomial& f, const Polynomial& g);
/// Stricter test: true when f' g - g' f is a nonconstant polynomial in x^q.
/// Informational only; Singer-cycle sums and every map over F_2 with a
/// nonconstant Wronskian land here although they are separable.
bool wronskian_in_frobenius_ring(const RationalMap& h);

/// Fibers of h indexed by target point (index 0..q-1 finite, q infinity).
struct FiberMap {
  std::uint32_t q = 0;
  std::vector<std::vector<PPoint>> by_target;

  const std::vector<PPoint>& fiber(PPoint t) const { return by_target.at(t.index(q)); }
  /// Fibers sorted by smallest member; empty fibers dropped. This is the
  /// domain partition induced by h.
  std::vector<std::vector<PPoint>> partition() const;
};

FiberMap fibers(const RationalMap& h);
/// Number of targets whose fiber has exactly deg(h) points.
std::size_t split_count(const RationalMap& h);
/// Points in h(P^1(F_q)).
std::vector<PPoint> image(const RationalMap& h);

/// phi o h.
RationalMap compose_left(const Moebius& phi, const RationalMap& h);
/// h o psi.
RationalMap compose_right(const RationalMap& h, const Moebius& psi);

/// One place of F_q(x) above the infinite place of F_q(t).
struct InfPlace {
  std::optional<Polynomial> place;  // irreducible factor of den; nullopt for x = infinity
  int ramification;                 // e
  int relative_degree;              // f
};

struct InfSplitData {
  std::vector<InfPlace> places;
  int delta = 0;  // 1 when deg num > deg den
  std::vector<int> denominator_factor_degrees;
};

/// Throws CapExceeded when the denominator exceeds the factorization cap,
/// TheoremViolation if sum e * f != deg h.
InfSplitData inf_split(const RationalMap& h);
/// deg(h) + sum deg(g_i) + delta - 1 over the distinct irreducible factors
/// g_i of the denominator.
long ramified_bound(const RationalMap& h);

}  // namespace ratlrc
