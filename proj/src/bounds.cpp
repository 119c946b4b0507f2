#include <cmath>

#include "ratlrc/goodfun.hpp"

namespace ratlrc {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace

SqrtBracket sqrt_bracket(std::uint64_t q) {
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(q)));
  while (s * s > static_cast<std::int64_t>(q)) --s;
  while ((s + 1) * (s + 1) <= static_cast<std::int64_t>(q)) ++s;
  const bool exact = s * s == static_cast<std::int64_t>(q);
  return {s, exact ? s : s + 1, exact};
}

BoundReport estimate_bounds(std::uint64_t q, std::uint64_t genus, std::uint64_t group_order,
                            std::uint64_t ramified_rational) {
  if (group_order == 0) throw Error(Errc::InvalidArgument, "group order must be >= 1");
  const SqrtBracket root = sqrt_bracket(q);
  const auto Q = static_cast<std::int64_t>(q);
  const auto g = static_cast<std::int64_t>(genus);
  const auto G = static_cast<std::int64_t>(group_order);
  const auto R = static_cast<std::int64_t>(ramified_rational);
  // Outward rounding: the larger sqrt bracket lowers `lower` and raises `upper`.
  const std::int64_t spread = 2 * g * root.ceil;
  BoundReport out;
  out.q = q;
  out.genus = genus;
  out.group_order = group_order;
  out.ramified_rational = ramified_rational;
  out.sqrt_exact = root.exact;
  // ceil((q + 1 - spread) / G - R / 2) = ceil((2 (q + 1 - spread) - R G) / 2G)
  out.lower = ceil_div(2 * (Q + 1 - spread) - R * G, 2 * G);
  out.upper = floor_div(Q + 1 + spread, G);
  return out;
}

std::int64_t genus_bound(std::int64_t deg_h, std::uint64_t group_order) {
  return (deg_h - 2) * static_cast<std::int64_t>(group_order) + 1;
}

PregeneReport pregene_bound(std::uint64_t q, std::uint64_t r, std::uint64_t sum_deg_gi, std::uint64_t group_order) {
  if (r < 1) throw Error(Errc::InvalidArgument, "locality must be >= 1");
  if (r > 19) throw Error(Errc::CapExceeded, "(r+1)! overflows for r > 19");
  std::int64_t fact = 1;
  for (std::uint64_t i = 2; i <= r + 1; ++i) fact *= static_cast<std::int64_t>(i);

  PregeneReport out;
  const std::uint64_t p_divides = [&] {
    // gcd(q, (r+1)!) == 1 iff the characteristic exceeds r + 1.
    std::uint64_t n = q, p = 0;
    for (std::uint64_t d = 2; d * d <= n && p == 0; ++d)
      if (n % d == 0) p = d;
    return p == 0 ? n : p;
  }();
  out.gcd_condition = p_divides > r + 1;

  const SqrtBracket root = sqrt_bracket(q);
  out.sqrt_exact = root.exact;
  const auto Q = static_cast<std::int64_t>(q);
  const auto R = static_cast<std::int64_t>(r);
  const auto S = root.ceil;  // the formula decreases in sqrt(q)
  out.value = Rational(Q - 2 * S + 1, fact) - Rational(2 * S * (R - 1)) -
              Rational(R + 1 + static_cast<std::int64_t>(sum_deg_gi), 2);

  const double s = std::sqrt(static_cast<double>(q));
  out.approx = (static_cast<double>(q) - 2 * s + 1) / static_cast<double>(fact) - 2 * s * static_cast<double>(r - 1) -
               static_cast<double>(r + 1 + sum_deg_gi) / 2.0;

  out.group_order = group_order == 0 ? static_cast<std::uint64_t>(fact) : group_order;
  out.genus_bound = genus_bound(static_cast<std::int64_t>(r + 1), out.group_order);
  return out;
}

}  // namespace ratlrc
