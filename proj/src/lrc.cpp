#include "ratlrc/lrc.hpp"

#include <algorithm>
#include <cmath>

#include "ratlrc/parallel.hpp"

namespace ratlrc {

namespace {

// Value at x0 of the interpolant through (xs[i], ys[i]).
Elem lagrange_eval(const Field& f, std::span<const Elem> xs, std::span<const Elem> ys, Elem x0) {
  Elem acc = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Elem num = 1, den = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      num = f.mul(num, f.sub(x0, xs[j]));
      den = f.mul(den, f.sub(xs[i], xs[j]));
    }
    acc = f.add(acc, f.mul(ys[i], f.div(num, den)));
  }
  return acc;
}

// Coefficient of x^(size-1) of the interpolant through (xs[i], ys[i]).
Elem lagrange_leading(const Field& f, std::span<const Elem> xs, std::span<const Elem> ys) {
  Elem acc = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Elem den = 1;
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (j != i) den = f.mul(den, f.sub(xs[i], xs[j]));
    acc = f.add(acc, f.div(ys[i], den));
  }
  return acc;
}

// Per-group row polynomial coefficients b_i = sum_j a_{ij} d^j.
std::vector<Elem> group_coefficients(const LrcCode& code, std::span<const Elem> message, Elem d) {
  const Field& f = code.field();
  const std::size_t t = code.rows();
  std::vector<Elem> out(static_cast<std::size_t>(code.r), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    Elem acc = 0, dj = 1;  // d^0 = 1 even for d = 0
    for (std::size_t j = 0; j < t; ++j) {
      acc = f.add(acc, f.mul(message[i * t + j], dj));
      dj = f.mul(dj, d);
    }
    out[i] = acc;
  }
  return out;
}

bool next_digits(std::vector<Elem>& digits, Elem base) {
  for (auto& d : digits) {
    if (++d < base) return true;
    d = 0;
  }
  return false;
}

}  // namespace

std::vector<std::size_t> LrcCode::group_coords(std::size_t m) const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < n; ++c)
    if (group_of_coord[c] == m) out.push_back(c);
  return out;
}

LrcCode build_code(const GoodnessCertificate& cert_in, std::size_t k) {
  const int r = cert_in.r;
  if (r < 1) throw Error(Errc::InvalidArgument, "locality must be >= 1");
  if (k % static_cast<std::size_t>(r) != 0)
    throw Error(Errc::NotDivisible, "k = " + std::to_string(k) + " is not a multiple of r = " + std::to_string(r));
  if (k == 0 || k / static_cast<std::size_t>(r) > cert_in.l())
    throw Error(Errc::OutOfRange, "need 1 <= k/r <= l = " + std::to_string(cert_in.l()) + ", got k = " +
                                      std::to_string(k));
  const Field& f = cert_in.h.field();

  auto first_missing = [&f](const RationalMap& h) -> std::optional<Elem> {
    std::vector<char> hit(f.q(), 0);
    for (PPoint t : image(h))
      if (!t.is_infinity()) hit[t.value()] = 1;
    for (Elem b = 0; b < f.q(); ++b)
      if (!hit[b]) return b;
    return std::nullopt;
  };

  auto b = first_missing(cert_in.h);
  bool inverted = false;
  GoodnessCertificate cert = cert_in;
  if (!b) {
    // A good map has |image| <= q, so covering F_q means it misses infinity
    // and 1/h misses 0.
    cert = certify(cert_in.h.reciprocal());
    inverted = true;
    b = first_missing(cert.h);
    if (!b) throw Error(Errc::TheoremViolation, "neither h nor 1/h misses a point of F_q");
  }
  LrcCode code{std::move(cert), inverted, r, k, 0, 0, {}, {}, {}};
  code.b = *b;
  code.n = static_cast<std::size_t>(r + 1) * code.cert.l();
  for (std::size_t m = 0; m < code.cert.l(); ++m) {
    const auto& g = code.cert.groups[m];
    code.d_values.push_back(g.value.is_infinity() ? 0 : f.inv(f.sub(g.value.value(), code.b)));
    // Points are sorted with infinity last already.
    for (PPoint u : g.points) {
      code.layout.push_back(u);
      code.group_of_coord.push_back(m);
    }
  }
  return code;
}

Codeword encode(const LrcCode& code, std::span<const Elem> message) {
  if (message.size() != code.k)
    throw Error(Errc::LengthMismatch, "message has " + std::to_string(message.size()) + " symbols, expected " +
                                          std::to_string(code.k));
  const Field& f = code.field();
  for (Elem a : message)
    if (!f.contains(a)) throw Error(Errc::OutOfRange, "message symbol outside " + f.name());
  Codeword out;
  out.symbols.resize(code.n);
  for (std::size_t m = 0; m < code.l(); ++m) {
    const auto coeffs = group_coefficients(code, message, code.d_values[m]);
    for (std::size_t c : code.group_coords(m)) {
      const PPoint u = code.layout[c];
      if (u.is_infinity()) {
        out.symbols[c] = coeffs.back();
      } else {
        out.symbols[c] = Polynomial(f, coeffs).eval(u.value());
      }
    }
  }
  return out;
}

ReceivedWord erase(const Codeword& word, std::span<const std::size_t> positions) {
  ReceivedWord out;
  out.symbols.assign(word.symbols.begin(), word.symbols.end());
  for (std::size_t p : positions) {
    if (p >= word.symbols.size())
      throw Error(Errc::OutOfRange, "erasure position " + std::to_string(p) + " outside word of length " +
                                        std::to_string(word.symbols.size()));
    out.symbols[p].reset();
  }
  return out;
}

RepairResult repair(const LrcCode& code, const ReceivedWord& word) {
  if (word.symbols.size() != code.n)
    throw Error(Errc::LengthMismatch, "word has " + std::to_string(word.symbols.size()) + " symbols, expected " +
                                          std::to_string(code.n));
  std::optional<std::size_t> erased;
  for (std::size_t c = 0; c < code.n; ++c) {
    if (word.symbols[c]) continue;
    if (erased) throw Error(Errc::MultipleErasures, "more than one erased symbol");
    erased = c;
  }
  if (!erased) throw Error(Errc::NoErasure, "no erased symbol");

  const Field& f = code.field();
  const std::size_t pos = *erased;
  const std::size_t group = code.group_of_coord[pos];
  RepairResult out{pos, 0, group, {}};

  std::vector<Elem> xs, ys;
  std::optional<Elem> c_inf;
  for (std::size_t c : code.group_coords(group)) {
    if (c == pos) continue;
    out.read_positions.push_back(c);
    const Elem y = *word.symbols[c];
    if (code.layout[c].is_infinity()) {
      c_inf = y;
    } else {
      xs.push_back(code.layout[c].value());
      ys.push_back(y);
    }
  }

  const PPoint target = code.layout[pos];
  if (target.is_infinity()) {
    // Leading coefficient of the degree <= r-1 interpolant.
    out.value = lagrange_leading(f, xs, ys);
  } else if (!c_inf) {
    out.value = lagrange_eval(f, xs, ys, target.value());
  } else {
    // Strip the known x^(r-1) term and interpolate the rest at degree <= r-2.
    const auto top = static_cast<std::uint64_t>(code.r - 1);
    for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = f.sub(ys[i], f.mul(*c_inf, f.pow(xs[i], top)));
    const Elem rest = xs.empty() ? 0 : lagrange_eval(f, xs, ys, target.value());
    out.value = f.add(rest, f.mul(*c_inf, f.pow(target.value(), top)));
  }
  return out;
}

std::size_t singleton_bound(std::size_t n, std::size_t k, std::size_t r) {
  return n - k - (k + r - 1) / r + 2;
}

std::vector<std::vector<Elem>> generator_matrix(const LrcCode& code) {
  std::vector<std::vector<Elem>> rows;
  std::vector<Elem> unit(code.k, 0);
  for (std::size_t i = 0; i < code.k; ++i) {
    unit[i] = 1;
    rows.push_back(encode(code, unit).symbols);
    unit[i] = 0;
  }
  return rows;
}

std::size_t matrix_rank(const Field& f, std::vector<std::vector<Elem>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Elem inv = f.inv(rows[rank][c]);
    for (auto& v : rows[rank]) v = f.mul(v, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const Elem s = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(s, rows[rank][j]));
    }
    ++rank;
  }
  return rank;
}

std::size_t dimension_check(const LrcCode& code) { return matrix_rank(code.field(), generator_matrix(code)); }

bool degree_bound_check(const LrcCode& code) {
  const std::size_t r = static_cast<std::size_t>(code.r);
  const std::size_t t = code.rows();
  const std::size_t lhs = (r + 1) * (t - 1) + r - 1;
  return lhs == code.k + t - 2 && lhs + 2 <= code.n;
}

DistanceReport min_distance(const LrcCode& code) {
  const Field& f = code.field();
  const double size = std::pow(static_cast<double>(f.q()), static_cast<double>(code.k));
  if (size > kExhaustionCap)
    throw Error(Errc::CapExceeded, "q^k = " + std::to_string(static_cast<long long>(size)) +
                                       " exceeds 1e6; use the generator-matrix rank check instead");
  const auto G = generator_matrix(code);
  const std::size_t n = code.n;
  const std::size_t k = code.k;
  const Elem q = f.q();

  // Shard on the first message symbol; each shard walks the remaining k-1.
  std::vector<std::size_t> shard_min(q, n + 1);
  parallel_for(q, [&](std::size_t lo, std::size_t hi) {
    std::vector<Elem> word(n);
    for (std::size_t first = lo; first < hi; ++first) {
      std::vector<Elem> rest(k - 1, 0);
      do {
        std::fill(word.begin(), word.end(), 0);
        bool nonzero = first != 0;
        for (std::size_t j = 0; j < n; ++j) word[j] = f.mul(static_cast<Elem>(first), G[0][j]);
        for (std::size_t i = 1; i < k; ++i) {
          const Elem a = rest[i - 1];
          if (a == 0) continue;
          nonzero = true;
          for (std::size_t j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(a, G[i][j]));
        }
        if (!nonzero) continue;
        const auto w = static_cast<std::size_t>(n - std::count(word.begin(), word.end(), Elem{0}));
        shard_min[first] = std::min(shard_min[first], w);
      } while (next_digits(rest, q));
    }
  });
  DistanceReport out;
  out.distance = *std::min_element(shard_min.begin(), shard_min.end());
  out.singleton_bound = singleton_bound(n, k, static_cast<std::size_t>(code.r));
  out.optimal = out.distance == out.singleton_bound;
  out.method = "exhaustive";
  return out;
}

DistanceReport min_distance_by_subsets(const LrcCode& code) {
  const Field& f = code.field();
  const auto G = generator_matrix(code);
  const std::size_t n = code.n;
  const std::size_t k = code.k;

  // Rank deficiency is inherited by subsets, so the first size s at which
  // every s-subset has full rank bounds the largest deficient set by s - 1.
  std::size_t full_from = n + 1;
  for (std::size_t s = k; s <= n && full_from > n; ++s) {
    std::vector<char> pick(n, 0);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(s), 1);
    bool all_full = true;
    do {
      std::vector<std::vector<Elem>> sub(k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (pick[j]) sub[i].push_back(G[i][j]);
      if (matrix_rank(f, std::move(sub)) < k) {
        all_full = false;
        break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (all_full) full_from = s;
  }
  DistanceReport out;
  // A code with rank k on all n columns always reaches full_from <= n.
  out.distance = n - full_from + 1;
  out.singleton_bound = singleton_bound(n, k, static_cast<std::size_t>(code.r));
  out.optimal = out.distance == out.singleton_bound;
  out.method = "subset-rank";
  return out;
}

}  // namespace ratlrc
