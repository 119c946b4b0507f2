#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "ratlrc/goodfun.hpp"

namespace ratlrc {

namespace {

struct ClassEntry {
  RationalMap rep;
  std::size_t split;
  std::size_t count;
};

// Advances a little-endian digit counter; false on wrap-around.
bool next_digits(std::vector<Elem>& digits, Elem base) {
  for (auto& d : digits) {
    if (++d < base) return true;
    d = 0;
  }
  return false;
}

}  // namespace

SearchResult search(const Field& F, const SearchOptions& options) {
  const int d = options.degree;
  if (d < 1) throw Error(Errc::InvalidArgument, "search degree must be >= 1");
  const double size = std::pow(static_cast<double>(F.q()), 2 * d + 1);
  if (size > kSearchCap)
    throw Error(Errc::CapExceeded, "search space q^(2d+1) = " + std::to_string(static_cast<long long>(size)) +
                                       " exceeds 1e7 for " + F.name() + ", d = " + std::to_string(d));

  const std::uint32_t q = F.q();
  SearchResult result;
  std::unordered_map<std::string, ClassEntry> classes;
  std::vector<std::uint32_t> image_of(std::size_t{q} + 1);
  std::vector<std::uint32_t> label(std::size_t{q} + 2);
  std::vector<std::uint32_t> fiber_size(std::size_t{q} + 1);
  std::string key(std::size_t{q} + 1, '\0');

  const int max_den = options.polynomial_only ? 0 : d;
  for (int e = 0; e <= max_den; ++e) {
    std::vector<Elem> g_low(static_cast<std::size_t>(e), 0);
    do {
      std::vector<Elem> g_coeffs = g_low;
      g_coeffs.push_back(1);
      const Polynomial g(F, g_coeffs);
      // deg f = d is required whenever deg g < d.
      std::vector<Elem> f_digits(static_cast<std::size_t>(d) + 1, 0);
      do {
        ++result.enumerated;
        if (e < d && f_digits[d] == 0) continue;
        Polynomial f(F, f_digits);
        if (f.is_zero()) continue;
        if (e > 0 && gcd(f, g).degree() > 0) continue;
        if (!passes_separability_guard(f, g)) continue;
        const RationalMap h = make_rational(f, g);
        ++result.valid;

        std::fill(fiber_size.begin(), fiber_size.end(), 0);
        for (std::uint32_t i = 0; i <= q; ++i) {
          image_of[i] = h.eval(PPoint::from_index(i, q)).index(q);
          ++fiber_size[image_of[i]];
        }
        std::size_t split = 0;
        for (auto s : fiber_size)
          if (s == static_cast<std::uint32_t>(d)) ++split;

        // Canonical relabelling by first occurrence: the domain partition.
        std::fill(label.begin(), label.end(), 0);
        std::uint32_t next = 1;
        for (std::uint32_t i = 0; i <= q; ++i) {
          auto& l = label[image_of[i]];
          if (l == 0) l = next++;
          key[i] = static_cast<char>(l);
        }
        auto [it, inserted] = classes.try_emplace(key, ClassEntry{h, split, 0});
        ++it->second.count;
        if (!inserted && h < it->second.rep) it->second.rep = h;
      } while (next_digits(f_digits, q));
    } while (next_digits(g_low, q));
  }

  std::vector<SearchHit> hits;
  hits.reserve(classes.size());
  for (auto& [k, entry] : classes) hits.push_back({entry.rep, entry.split, entry.count});
  std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) {
    if (a.split_count != b.split_count) return a.split_count > b.split_count;
    return a.h < b.h;
  });
  result.classes = hits.size();
  result.best_split = hits.empty() ? 0 : hits.front().split_count;
  if (hits.size() > options.top_k) hits.erase(hits.begin() + static_cast<std::ptrdiff_t>(options.top_k), hits.end());
  result.top = std::move(hits);
  return result;
}

}  // namespace ratlrc
