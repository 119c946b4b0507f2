#include "ratlrc/gf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "ratlrc/poly.hpp"

namespace ratlrc {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::DegreeZero: return "DegreeZero";
    case Errc::Inseparable: return "Inseparable";
    case Errc::AffineGenerator: return "AffineGenerator";
    case Errc::OrderOne: return "OrderOne";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::PoleInSet: return "PoleInSet";
    case Errc::TheoremViolation: return "TheoremViolation";
    case Errc::NoErasure: return "NoErasure";
    case Errc::MultipleErasures: return "MultipleErasures";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

constexpr std::uint32_t kTableLimit = 1u << 20;
constexpr std::uint32_t kAddTableLimit = 1024;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Smallest monic irreducible of degree m over F_p with (c_0, c_1, ...)
// compared lexicographically, c_0 most significant.
std::vector<std::uint32_t> canonical_modulus(const Field& base, std::uint32_t m) {
  const std::uint32_t p = base.p();
  std::vector<Elem> c(m + 1, 0);
  c[m] = 1;
  c[0] = 1;  // x divides anything with c_0 = 0
  while (true) {
    if (is_irreducible(Polynomial(base, c))) return {c.begin(), c.end()};
    // Increment with c_{m-1} as the least significant position.
    int i = static_cast<int>(m) - 1;
    while (i >= 0 && ++c[i] == p) c[i--] = 0;
    if (i < 0) throw Error(Errc::InvalidArgument, "no irreducible modulus found");
  }
}

struct Registry {
  std::mutex mu;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<Field>> fields;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

const Field& field(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw Error(Errc::InvalidArgument, "characteristic " + std::to_string(p) + " is not prime");
  if (m == 0) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > Field::kMaxOrder)
      throw Error(Errc::CapExceeded, "field order above 2^31 (p=" + std::to_string(p) + ", m=" + std::to_string(m) + ")");
  }

  auto& reg = registry();
  {
    std::lock_guard lock(reg.mu);
    if (auto it = reg.fields.find({p, m}); it != reg.fields.end()) return *it->second;
  }
  std::vector<std::uint32_t> modulus{0, 1};
  if (m > 1) modulus = canonical_modulus(field(p, 1), m);

  std::lock_guard lock(reg.mu);
  auto& slot = reg.fields[{p, m}];
  if (!slot) slot.reset(new Field(p, m, std::move(modulus)));
  return *slot;
}

std::vector<FieldElement> enumerate(const Field& f) { return f.elements(); }

Field::Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) q *= p;
  q_ = static_cast<std::uint32_t>(q);
  kind_ = m == 1 ? Kind::Prime : (p == 2 ? Kind::Binary : Kind::General);
  build_tables();
}

void Field::build_tables() {
  if (kind_ == Kind::General && q_ <= kTableLimit) {
    neg_table_.resize(q_);
    for (Elem a = 0; a < q_; ++a) neg_table_[a] = neg_digits(a);
    if (q_ <= kAddTableLimit) {
      add_table_.resize(std::size_t{q_} * q_);
      for (Elem a = 0; a < q_; ++a)
        for (Elem b = 0; b < q_; ++b) add_table_[std::size_t{a} * q_ + b] = add_digits(a, b);
    }
  }
  if (q_ > kTableLimit || q_ == 2) return;

  const std::uint64_t order = q_ - 1;
  const auto divisors = prime_divisors(order);
  Elem generator = 0;
  for (Elem g = 2; g < q_ && generator == 0; ++g) {
    bool primitive = true;
    for (auto d : divisors)
      if (pow_digits(g, order / d) == 1) {
        primitive = false;
        break;
      }
    if (primitive) generator = g;
  }
  exp_.resize(2 * order);
  log_.assign(q_, 0);
  Elem x = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    exp_[i] = x;
    exp_[i + order] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = mul_digits(x, generator);
  }
}

std::vector<std::uint32_t> Field::digits(Elem a) const {
  std::vector<std::uint32_t> d(m_);
  for (std::uint32_t i = 0; i < m_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

Elem Field::from_digits(std::span<const std::uint32_t> digits) const {
  std::uint64_t v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * p_ + digits[i] % p_;
  return static_cast<Elem>(v);
}

Elem Field::add_digits(Elem a, Elem b) const noexcept {
  Elem out = 0, scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    Elem s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    out += s * scale;
    a /= p_;
    b /= p_;
    scale *= (i + 1 < m_) ? p_ : 1;
  }
  return out;
}

Elem Field::neg_digits(Elem a) const noexcept {
  Elem out = 0, scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    Elem d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * scale;
    a /= p_;
    scale *= (i + 1 < m_) ? p_ : 1;
  }
  return out;
}

Elem Field::mul_digits(Elem a, Elem b) const noexcept {
  if (m_ == 1) return static_cast<Elem>(std::uint64_t{a} * b % p_);
  std::vector<std::uint64_t> x(m_), y(m_), prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    x[i] = a % p_;
    a /= p_;
    y[i] = b % p_;
    b /= p_;
  }
  for (std::uint32_t i = 0; i < m_; ++i)
    for (std::uint32_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
  // Reduce with the monic modulus: z^m = -(c_0 + ... + c_{m-1} z^{m-1}).
  for (std::size_t k = prod.size(); k-- > m_;) {
    std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::uint32_t i = 0; i < m_; ++i)
      prod[k - m_ + i] = (prod[k - m_ + i] + (p_ - modulus_[i]) % p_ * c) % p_;
  }
  std::uint64_t out = 0;
  for (std::size_t i = m_; i-- > 0;) out = out * p_ + prod[i];
  return static_cast<Elem>(out);
}

Elem Field::pow_digits(Elem a, std::uint64_t e) const noexcept {
  Elem result = 1, base = a;
  while (e) {
    if (e & 1) result = mul_digits(result, base);
    base = mul_digits(base, base);
    e >>= 1;
  }
  return result;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero in " + name());
  if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow(a, q_ - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (!exp_.empty()) return exp_[(std::uint64_t{log_[a]} * (e % (q_ - 1))) % (q_ - 1)];
  Elem result = 1, base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem Field::from_int(std::int64_t n) const noexcept {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

FieldElement Field::element(Elem a) const { return FieldElement(*this, a); }
FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (Elem a = 0; a < q_; ++a) out.emplace_back(*this, a);
  return out;
}

std::string Field::name() const {
  return m_ == 1 ? "GF(" + std::to_string(p_) + ")"
                 : "GF(" + std::to_string(p_) + "^" + std::to_string(m_) + ")";
}

FieldElement::FieldElement(const Field& f, Elem value) : field_(&f), value_(value) {
  if (!f.contains(value))
    throw Error(Errc::OutOfRange, "encoding " + std::to_string(value) + " outside " + f.name());
}

FieldElement FieldElement::pow(std::int64_t e) const {
  if (e < 0) return inv().pow(-e);
  return {*field_, field_->pow(value_, static_cast<std::uint64_t>(e))};
}

void FieldElement::check_same(const FieldElement& other) const {
  if (field_ != other.field_)
    throw Error(Errc::FieldMismatch, field_->name() + " vs " + other.field_->name());
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  a.check_same(b);
  return {*a.field_, a.field_->add(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  a.check_same(b);
  return {*a.field_, a.field_->sub(a.value_, b.value_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  a.check_same(b);
  return {*a.field_, a.field_->mul(a.value_, b.value_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  a.check_same(b);
  return {*a.field_, a.field_->div(a.value_, b.value_)};
}

std::string FieldElement::to_string() const { return std::to_string(value_); }

}  // namespace ratlrc
