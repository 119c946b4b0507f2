#pragma once

#include <boost/rational.hpp>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ratlrc/projline.hpp"
#include "ratlrc/ratfun.hpp"

namespace ratlrc {

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

/// h = sum_{i < n} phi^i for a non-affine phi of order n >= 2. The result has
/// degree n and satisfies h o phi = h; both are checked before returning
/// (TheoremViolation otherwise). Throws AffineGenerator or OrderOne.
RationalMap from_moebius(const Moebius& phi);
/// Same, with the order of phi supplied by the caller.
RationalMap from_moebius(const Moebius& phi, std::uint64_t order);

/// (x^3 - 3 w^2 x + w^3) / (x (x - w)); throws InvalidArgument for w == 0.
RationalMap gal1(const Field& f, Elem w);
/// (4x^4 - 12 d^2 x^2 + 8 d^3 x - d^4) / (2x (x - d)(2x - d)) for odd q.
/// Throws EvenCharacteristic for q even, InvalidArgument for d == 0.
RationalMap gal2(const Field& f, Elem d);
/// The order-3 and order-4 generators behind gal1 / gal2:
/// w^2 / (w - x) and d^2 / (2 (d - x)).
Moebius gal1_generator(const Field& f, Elem w);
Moebius gal2_generator(const Field& f, Elem d);

/// prod_{s in S} (x - s) / (x - a). Throws PoleInSet when a is in S,
/// InvalidArgument for an empty S or repeated members.
RationalMap s_set(const Field& f, std::span<const Elem> S, Elem a);

/// x^(r+1); throws NotDivisible unless (r + 1) | (q - 1).
RationalMap tamo_barg_multiplicative(const Field& f, int r);
/// prod_{a in H} (x - a); throws NotASubgroup unless H is an additive
/// subgroup of F_q with at least two elements.
RationalMap tamo_barg_additive(const Field& f, std::span<const Elem> H);
/// F_p-span of the given generators, ascending.
std::vector<Elem> additive_span(const Field& f, std::span<const Elem> generators);

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

struct RecoveryGroup {
  PPoint value;               // t_i
  std::vector<PPoint> points;  // A_i, sorted
};

/// Full fibers of h as recovery groups, ordered by value (finite ascending,
/// infinity last). An empty group list is the "not good" verdict.
struct GoodnessCertificate {
  RationalMap h;
  int r = 0;
  std::vector<RecoveryGroup> groups;

  std::size_t l() const noexcept { return groups.size(); }
  bool is_good() const noexcept { return !groups.empty(); }
};

GoodnessCertificate certify(const RationalMap& h);
/// Re-checks sizes, disjointness, constancy of h and ordering. Throws
/// TheoremViolation on the first failure.
void validate(const GoodnessCertificate& cert);

// ---------------------------------------------------------------------------
// Counting formulas and bounds
// ---------------------------------------------------------------------------

/// Split count predicted from the number of short orbits of a Galois group of
/// order r + 1. Throws TheoremViolation for more than three short orbits,
/// InvalidArgument if the census was taken for a different group order.
std::uint64_t predicted_split_count(const OrbitCensus& census, std::uint64_t q, std::uint64_t r);
std::uint64_t predicted_split_count(std::size_t short_orbits, std::uint64_t q, std::uint64_t r);

/// Floor / ceiling of sqrt(q) with an exactness flag.
struct SqrtBracket {
  std::int64_t floor;
  std::int64_t ceil;
  bool exact;
};
SqrtBracket sqrt_bracket(std::uint64_t q);

struct BoundReport {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::uint64_t q = 0;
  std::uint64_t genus = 0;
  std::uint64_t group_order = 1;
  std::uint64_t ramified_rational = 0;
  bool sqrt_exact = true;
};

/// Hasse-Weil window for the split count. sqrt(q) is replaced by its ceiling
/// when q is not a square, which only widens the interval.
BoundReport estimate_bounds(std::uint64_t q, std::uint64_t genus, std::uint64_t group_order,
                            std::uint64_t ramified_rational);

using Rational = boost::rational<std::int64_t>;

struct PregeneReport {
  Rational value;            // conservative lower bound on l
  double approx = 0;         // same formula with floating sqrt(q)
  bool gcd_condition = true;  // gcd(q, (r+1)!) == 1
  bool sqrt_exact = true;
  std::int64_t genus_bound = 0;  // (deg h - 2) * #G + 1 with deg h = r + 1
  std::uint64_t group_order = 0;
};

/// Lower bound on l for an (r, l)-good map whose denominator factors have
/// total degree sum_deg_gi. group_order feeds only the genus companion
/// value and defaults to (r+1)!. Throws CapExceeded for r > 19.
PregeneReport pregene_bound(std::uint64_t q, std::uint64_t r, std::uint64_t sum_deg_gi,
                            std::uint64_t group_order = 0);
/// (deg_h - 2) * group_order + 1.
std::int64_t genus_bound(std::int64_t deg_h, std::uint64_t group_order);

// ---------------------------------------------------------------------------
// Exhaustive search
// ---------------------------------------------------------------------------

constexpr double kSearchCap = 1e7;

struct SearchOptions {
  int degree = 3;
  std::size_t top_k = 5;
  bool polynomial_only = false;
};

struct SearchHit {
  RationalMap h;
  std::size_t split_count;
  std::size_t class_size;  // maps sharing this fiber partition
};

struct SearchResult {
  std::vector<SearchHit> top;
  std::size_t enumerated = 0;  // candidate (f, g) pairs visited
  std::size_t valid = 0;       // reduced, exact degree, separable
  std::size_t classes = 0;     // distinct fiber partitions
  std::size_t best_split = 0;
};

/// Enumerates reduced f / g (g monic) with max degree exactly d, groups them
/// by the domain partition into fibers, and ranks one representative per
/// class by (split count desc, canonical order asc). Throws CapExceeded when
/// q^(2d+1) > 1e7.
SearchResult search(const Field& f, const SearchOptions& options);

}  // namespace ratlrc
