#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ratlrc/error.hpp"

namespace ratlrc {

/// Canonical integer encoding of a field element: sum of coeffs[i] * p^i.
using Elem = std::uint32_t;

class FieldElement;

/// GF(p^m) built over the lexicographically smallest monic irreducible
/// modulus (coefficients compared constant term first).
///
/// Instances are interned: field(p, m) always returns the same object, so
/// identity comparison is field equality. Elements are handled either as
/// FieldElement values or, on hot paths, as raw Elem encodings passed back
/// through the arithmetic members below.
class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t m() const noexcept { return m_; }
  std::uint32_t q() const noexcept { return q_; }
  /// Modulus coefficients, constant term first, length m + 1. For m = 1 this
  /// is the placeholder x - 0.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Elem add(Elem a, Elem b) const noexcept {
    switch (kind_) {
      case Kind::Prime: {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<Elem>(s >= p_ ? s - p_ : s);
      }
      case Kind::Binary:
        return a ^ b;
      case Kind::General:
        return add_table_.empty() ? add_digits(a, b) : add_table_[std::size_t{a} * q_ + b];
    }
    return 0;
  }
  Elem neg(Elem a) const noexcept {
    switch (kind_) {
      case Kind::Prime:
        return a == 0 ? 0 : p_ - a;
      case Kind::Binary:
        return a;
      case Kind::General:
        return neg_table_.empty() ? neg_digits(a) : neg_table_[a];
    }
    return 0;
  }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) return exp_[std::size_t{log_[a]} + log_[b]];
    if (kind_ == Kind::Prime) return static_cast<Elem>(std::uint64_t{a} * b % p_);
    return mul_digits(a, b);
  }
  /// Throws Errc::DivisionByZero for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// pow(0, 0) == 1.
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  /// Image of an integer under Z -> F_p -> F_q.
  Elem from_int(std::int64_t n) const noexcept;

  bool contains(Elem a) const noexcept { return a < q_; }
  FieldElement element(Elem a) const;
  FieldElement zero() const;
  FieldElement one() const;
  /// All q elements in ascending encoding order.
  std::vector<FieldElement> elements() const;

  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(std::span<const std::uint32_t> digits) const;

  std::string name() const;

 private:
  friend const Field& field(std::uint32_t p, std::uint32_t m);

  enum class Kind { Prime, Binary, General };

  Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

  Elem add_digits(Elem a, Elem b) const noexcept;
  Elem neg_digits(Elem a) const noexcept;
  Elem mul_digits(Elem a, Elem b) const noexcept;
  Elem pow_digits(Elem a, std::uint64_t e) const noexcept;
  void build_tables();

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  Kind kind_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> exp_;  // 2(q-1) entries so exp_[log a + log b] needs no reduction
  std::vector<std::uint32_t> log_;
  std::vector<Elem> add_table_;
  std::vector<Elem> neg_table_;
};

/// Returns the interned GF(p^m). Throws InvalidArgument for non-prime p or
/// m == 0, CapExceeded for p^m > 2^31.
const Field& field(std::uint32_t p, std::uint32_t m = 1);

/// Ascending encoding order; same as Field::elements().
std::vector<FieldElement> enumerate(const Field& f);

class FieldElement {
 public:
  FieldElement(const Field& f, Elem value);

  const Field& field() const noexcept { return *field_; }
  Elem enc() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement inv() const { return {*field_, field_->inv(value_)}; }
  /// Negative exponents invert first; pow(0, 0) == 1.
  FieldElement pow(std::int64_t e) const;

  FieldElement operator-() const noexcept { return {*field_, field_->neg(value_)}; }
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }
  /// Canonical order: integer order of the encoding.
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    return a.value_ <=> b.value_;
  }

  std::string to_string() const;

 private:
  void check_same(const FieldElement& other) const;

  const Field* field_;
  Elem value_;
};

}  // namespace ratlrc
