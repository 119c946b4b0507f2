#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ratlrc/gf.hpp"

namespace ratlrc {

/// Dense univariate polynomial over a Field, coefficients constant term first
/// and stored as raw encodings. The zero polynomial has degree -1.
class Polynomial {
 public:
  explicit Polynomial(const Field& f) : field_(&f) {}
  Polynomial(const Field& f, std::vector<Elem> coeffs);

  static Polynomial constant(const Field& f, Elem c);
  static Polynomial monomial(const Field& f, Elem c, std::size_t degree);
  static Polynomial x(const Field& f) { return monomial(f, 1, 1); }
  /// (x - root)
  static Polynomial linear_root(const Field& f, Elem root);

  const Field& field() const noexcept { return *field_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
  Elem operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Elem leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  std::span<const Elem> coeffs() const noexcept { return coeffs_; }
  FieldElement coeff(std::size_t i) const { return field_->element((*this)[i]); }

  Elem eval(Elem u) const noexcept;
  FieldElement eval(const FieldElement& u) const;
  Polynomial derivative() const;
  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;
  Polynomial scaled(Elem c) const;
  /// In place: *this *= (c1 x + c0).
  Polynomial& mul_linear(Elem c0, Elem c1);
  /// In place: *this += c * other.
  Polynomial& add_scaled(const Polynomial& other, Elem c);
  /// True when only exponents divisible by `step` carry nonzero coefficients.
  bool only_exponents_divisible_by(std::uint64_t step) const noexcept;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }
  /// Canonical order: degree first, then coefficient encodings compared
  /// constant term first.
  friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b);

  std::string to_string(char var = 'x') const;

 private:
  void trim() noexcept;
  void check_same(const Polynomial& o) const;

  const Field* field_;
  std::vector<Elem> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// a = quotient * b + remainder with deg remainder < deg b. Throws
/// ZeroPolynomial when b == 0.
DivMod divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) == 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// base^e mod modulus.
Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus);
/// Divides exactly by (x - root) via synthetic division; the remainder is
/// discarded, so callers pass a known root.
Polynomial deflate(const Polynomial& a, Elem root);

struct Factor {
  Polynomial factor;
  int multiplicity;
};

struct Factorization {
  Elem leading;
  std::vector<Factor> factors;  // monic, pairwise distinct, canonical order
};

constexpr int kMaxFactorDegree = 16;

/// Trial division by monic polynomials of increasing degree in canonical
/// order. Throws ZeroPolynomial for g == 0, InvalidArgument for constants,
/// CapExceeded above kMaxFactorDegree or when the candidate scan would exceed
/// desk scale.
Factorization factor(const Polynomial& g);

/// Product leading * prod factor^multiplicity.
Polynomial expand(const Field& f, const Factorization& fz);

/// Rabin's test; meant for moduli and test oracles, not hot paths.
bool is_irreducible(const Polynomial& g);

}  // namespace ratlrc
