#include "ratlrc/poly.hpp"

#include <algorithm>
#include <utility>

namespace ratlrc {

namespace {

// Candidate scan budget for factor(); q^d monic candidates per degree.
constexpr double kFactorScanBudget = 5e7;


}  // namespace

Polynomial::Polynomial(const Field& f, std::vector<Elem> coeffs) : field_(&f), coeffs_(std::move(coeffs)) {
  for (Elem c : coeffs_)
    if (!f.contains(c)) throw Error(Errc::OutOfRange, "coefficient " + std::to_string(c) + " outside " + f.name());
  trim();
}

Polynomial Polynomial::constant(const Field& f, Elem c) { return Polynomial(f, {c}); }

Polynomial Polynomial::monomial(const Field& f, Elem c, std::size_t degree) {
  std::vector<Elem> v(degree + 1, 0);
  v[degree] = c;
  return Polynomial(f, std::move(v));
}

Polynomial Polynomial::linear_root(const Field& f, Elem root) { return Polynomial(f, {f.neg(root), 1}); }

void Polynomial::trim() noexcept {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Polynomial::check_same(const Polynomial& o) const {
  if (field_ != o.field_) throw Error(Errc::FieldMismatch, field_->name() + " vs " + o.field_->name());
}

Elem Polynomial::eval(Elem u) const noexcept {
  Elem acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, u), coeffs_[i]);
  return acc;
}

FieldElement Polynomial::eval(const FieldElement& u) const {
  if (&u.field() != field_) throw Error(Errc::FieldMismatch, "evaluation point from another field");
  return field_->element(eval(u.enc()));
}

Polynomial Polynomial::derivative() const {
  Polynomial out(*field_);
  if (coeffs_.size() <= 1) return out;
  out.coeffs_.resize(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out.coeffs_[i - 1] = field_->mul(field_->from_int(static_cast<std::int64_t>(i % field_->p())), coeffs_[i]);
  out.trim();
  return out;
}

Polynomial Polynomial::monic() const {
  if (coeffs_.empty() || coeffs_.back() == 1) return *this;
  return scaled(field_->inv(coeffs_.back()));
}

Polynomial Polynomial::scaled(Elem c) const {
  Polynomial out(*this);
  for (auto& v : out.coeffs_) v = field_->mul(v, c);
  out.trim();
  return out;
}

Polynomial& Polynomial::mul_linear(Elem c0, Elem c1) {
  if (coeffs_.empty()) return *this;
  const Field& f = *field_;
  coeffs_.push_back(0);
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Elem lo = f.mul(coeffs_[k], c0);
    coeffs_[k] = k ? f.add(lo, f.mul(coeffs_[k - 1], c1)) : lo;
  }
  trim();
  return *this;
}

Polynomial& Polynomial::add_scaled(const Polynomial& other, Elem c) {
  check_same(other);
  if (c == 0) return *this;
  const Field& f = *field_;
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] = f.add(coeffs_[i], f.mul(other.coeffs_[i], c));
  trim();
  return *this;
}

bool Polynomial::only_exponents_divisible_by(std::uint64_t step) const noexcept {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0 && i % step != 0) return false;
  return true;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same(o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = field_->add(coeffs_[i], o.coeffs_[i]);
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same(o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = field_->sub(coeffs_[i], o.coeffs_[i]);
  trim();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& v : out.coeffs_) v = field_->neg(v);
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same(b);
  Polynomial out(*a.field_);
  if (a.is_zero() || b.is_zero()) return out;
  const Field& f = *a.field_;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out.coeffs_[i + j] = f.add(out.coeffs_[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
  }
  out.trim();
  return out;
}

std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) {
  a.check_same(b);
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    if (auto c = a.coeffs_[i] <=> b.coeffs_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string Polynomial::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0 || coeffs_[i] != 1) out += std::to_string(coeffs_[i]);
    if (i > 0) {
      if (coeffs_[i] != 1) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(Errc::ZeroPolynomial, "division by the zero polynomial");
  if (&a.field() != &b.field()) throw Error(Errc::FieldMismatch, "divmod across fields");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {Polynomial(f), a};
  std::vector<Elem> rem(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const Elem lead_inv = f.inv(bc.back());
  std::vector<Elem> quot(rem.size() - db, 0);
  for (std::size_t k = rem.size(); k-- > db;) {
    Elem c = f.mul(rem[k], lead_inv);
    quot[k - db] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] = f.sub(rem[k - db + i], f.mul(c, bc[i]));
  }
  rem.resize(db);
  return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus) {
  const Field& f = base.field();
  Polynomial result = divmod(Polynomial::constant(f, 1), modulus).remainder;
  Polynomial b = divmod(base, modulus).remainder;
  while (e) {
    if (e & 1) result = divmod(result * b, modulus).remainder;
    b = divmod(b * b, modulus).remainder;
    e >>= 1;
  }
  return result;
}

Polynomial deflate(const Polynomial& a, Elem root) {
  const Field& f = a.field();
  if (a.degree() < 1) return Polynomial(f);
  const auto c = a.coeffs();
  std::vector<Elem> out(c.size() - 1);
  Elem carry = 0;
  for (std::size_t k = c.size(); k-- > 1;) {
    carry = f.add(c[k], f.mul(carry, root));
    out[k - 1] = carry;
  }
  return Polynomial(f, std::move(out));
}

bool is_irreducible(const Polynomial& g) {
  const int n = g.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const Field& f = g.field();
  const Polynomial x = Polynomial::x(f);
  // Ben-Or: no factor of degree k <= n/2, checked via gcd(x^{q^k} - x, g).
  // Exits early on the small factors most reducible inputs have.
  Polynomial cur = divmod(x, g).remainder;
  for (int k = 1; 2 * k <= n; ++k) {
    cur = powmod(cur, f.q(), g);
    if (gcd(cur - x, g).degree() != 0) return false;
  }
  return true;
}

Factorization factor(const Polynomial& g) {
  if (g.is_zero()) throw Error(Errc::ZeroPolynomial, "cannot factor the zero polynomial");
  if (g.degree() < 1) throw Error(Errc::InvalidArgument, "cannot factor a constant");
  if (g.degree() > kMaxFactorDegree)
    throw Error(Errc::CapExceeded, "factorization degree " + std::to_string(g.degree()) + " above cap " +
                                       std::to_string(kMaxFactorDegree));
  const Field& f = g.field();
  Factorization out{g.leading(), {}};
  Polynomial work = g.monic();

  // Linear factors by root scan.
  for (Elem a = 0; a < f.q() && work.degree() >= 1; ++a) {
    int mult = 0;
    while (work.degree() >= 1 && work.eval(a) == 0) {
      work = deflate(work, a);
      ++mult;
    }
    if (mult) out.factors.push_back({Polynomial::linear_root(f, a), mult});
  }

  for (int d = 2; 2 * d <= work.degree(); ++d) {
    double candidates = 1;
    for (int i = 0; i < d; ++i) candidates *= f.q();
    if (candidates > kFactorScanBudget)
      throw Error(Errc::CapExceeded, "trial division over " + f.name() + " at degree " + std::to_string(d) +
                                         " exceeds the scan budget");
    std::vector<Elem> c(d + 1, 0);
    c[d] = 1;
    std::vector<Factor> found;
    while (2 * d <= work.degree()) {
      Polynomial cand(f, c);
      int mult = 0;
      while (work.degree() >= d) {
        DivMod dm = divmod(work, cand);
        if (!dm.remainder.is_zero()) break;
        work = std::move(dm.quotient);
        ++mult;
      }
      if (mult) found.push_back({std::move(cand), mult});
      int i = d - 1;
      while (i >= 0 && ++c[i] == f.q()) c[i--] = 0;
      if (i < 0) break;
    }
    for (auto& fc : found) out.factors.push_back(std::move(fc));
  }
  if (work.degree() >= 1) out.factors.push_back({std::move(work), 1});

  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& a, const Factor& b) { return a.factor < b.factor; });
  return out;
}

Polynomial expand(const Field& f, const Factorization& fz) {
  Polynomial acc = Polynomial::constant(f, fz.leading);
  for (const auto& [fac, mult] : fz.factors)
    for (int i = 0; i < mult; ++i) acc = acc * fac;
  return acc;
}

}  // namespace ratlrc
