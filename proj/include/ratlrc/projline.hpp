#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "ratlrc/gf.hpp"

namespace ratlrc {

/// A point of P^1(F_q): a finite encoding or infinity. The raw code orders
/// finite points by encoding with infinity strictly last.
class PPoint {
 public:
  static constexpr std::uint32_t kInfinityCode = std::numeric_limits<std::uint32_t>::max();

  constexpr PPoint() = default;
  static constexpr PPoint finite(Elem value) noexcept { return PPoint(value); }
  static constexpr PPoint infinity() noexcept { return PPoint(kInfinityCode); }
  /// Inverse of index(): 0..q-1 are finite, q is infinity.
  static constexpr PPoint from_index(std::uint32_t index, std::uint32_t q) noexcept {
    return index == q ? infinity() : finite(index);
  }

  constexpr bool is_infinity() const noexcept { return code_ == kInfinityCode; }
  constexpr Elem value() const noexcept { return code_; }
  /// Dense index in [0, q]; infinity maps to q.
  constexpr std::uint32_t index(std::uint32_t q) const noexcept { return is_infinity() ? q : code_; }

  friend constexpr bool operator==(PPoint, PPoint) noexcept = default;
  friend constexpr std::strong_ordering operator<=>(PPoint a, PPoint b) noexcept { return a.code_ <=> b.code_; }

  std::string to_string() const { return is_infinity() ? "inf" : std::to_string(code_); }

 private:
  constexpr explicit PPoint(std::uint32_t code) : code_(code) {}
  std::uint32_t code_ = 0;
};

/// All q + 1 points in canonical order.
std::vector<PPoint> projective_line(const Field& f);

/// Element of PGL(2, q): x -> (a x + b) / (c x + d), kept in normal form
/// (first nonzero of a, c, b, d equals 1) so that equality in PGL(2, q) is
/// structural equality.
class Moebius {
 public:
  /// Throws InvalidArgument when ad - bc == 0.
  Moebius(const Field& f, Elem a, Elem b, Elem c, Elem d);
  static Moebius identity(const Field& f) { return Moebius(f, 1, 0, 0, 1); }

  const Field& field() const noexcept { return *field_; }
  Elem a() const noexcept { return a_; }
  Elem b() const noexcept { return b_; }
  Elem c() const noexcept { return c_; }
  Elem d() const noexcept { return d_; }
  bool is_affine() const noexcept { return c_ == 0; }
  bool is_identity() const noexcept { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }

  PPoint apply(PPoint u) const noexcept;
  PPoint operator()(PPoint u) const noexcept { return apply(u); }

  friend bool operator==(const Moebius& x, const Moebius& y) noexcept {
    return x.field_ == y.field_ && x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  /// Scan order: (a, b, c, d) compared lexicographically by encoding.
  friend std::strong_ordering operator<=>(const Moebius& x, const Moebius& y) noexcept;

  std::string to_string() const;

 private:
  struct Normalized {};
  Moebius(const Field& f, Elem a, Elem b, Elem c, Elem d, Normalized)
      : field_(&f), a_(a), b_(b), c_(c), d_(d) {}
  friend void for_each_moebius(const Field&, const std::function<void(const Moebius&)>&);

  const Field* field_;
  Elem a_, b_, c_, d_;
};

/// (phi o psi)(u) = phi(psi(u)).
Moebius compose(const Moebius& phi, const Moebius& psi);
Moebius inverse(const Moebius& phi);
/// phi^n for n >= 0.
Moebius power(const Moebius& phi, std::uint64_t n);
/// Least n >= 1 with phi^n = id, found by iterated composition.
std::uint64_t order(const Moebius& phi);

struct OrbitCensus {
  std::vector<std::vector<PPoint>> orbits;  // sorted by (size, smallest member)
  std::vector<std::size_t> sizes;
  std::uint64_t group_order = 1;
  std::size_t short_count = 0;
  std::size_t long_count = 0;
};

/// Orbits of <phi> on P^1(F_q).
OrbitCensus orbits(const Moebius& phi);
/// Same census from a precomputed group order, skipping order().
OrbitCensus orbits(const Moebius& phi, std::uint64_t group_order);

/// Visits every element of PGL(2, q) once, in scan order.
void for_each_moebius(const Field& f, const std::function<void(const Moebius&)>& visit);

/// Up to `limit` transforms of exact order n, in scan order. Throws
/// InvalidArgument for n < 2.
std::vector<Moebius> elements_of_order(const Field& f, std::uint64_t n, std::size_t limit);

}  // namespace ratlrc
