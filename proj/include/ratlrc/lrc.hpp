#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ratlrc/goodfun.hpp"

namespace ratlrc {

/// Optimal (n, k, r) locally recoverable code evaluated on the full fibers of
/// a good rational map.
///
/// Coordinates are laid out group by group in certificate order; inside a
/// group finite points ascend and the infinity symbol, when present, comes
/// last. Messages a_{ij} (0 <= i < r, 0 <= j < k/r) are flattened as
/// a[i * (k/r) + j].
struct LrcCode {
  GoodnessCertificate cert;  // certificate of the map actually used
  bool inverted = false;     // h was replaced by 1/h to free up b
  int r = 0;
  std::size_t k = 0;
  std::size_t n = 0;
  Elem b = 0;
  std::vector<PPoint> layout;
  std::vector<std::size_t> group_of_coord;
  std::vector<Elem> d_values;  // 1 / (t_m - b), with 1 / (inf - b) = 0

  const Field& field() const noexcept { return cert.h.field(); }
  std::size_t rows() const noexcept { return k / static_cast<std::size_t>(r); }
  std::size_t l() const noexcept { return cert.groups.size(); }
  /// Coordinates of group m in layout order.
  std::vector<std::size_t> group_coords(std::size_t m) const;
};

/// Throws NotDivisible when r does not divide k, OutOfRange when k / r is 0
/// or exceeds l.
LrcCode build_code(const GoodnessCertificate& cert, std::size_t k);

struct Codeword {
  std::vector<Elem> symbols;
  friend bool operator==(const Codeword&, const Codeword&) = default;
};

/// Codeword with erased positions marked as nullopt.
struct ReceivedWord {
  std::vector<std::optional<Elem>> symbols;
};

/// Throws LengthMismatch unless message.size() == k.
Codeword encode(const LrcCode& code, std::span<const Elem> message);

/// Throws OutOfRange for positions >= n.
ReceivedWord erase(const Codeword& word, std::span<const std::size_t> positions);

struct RepairResult {
  std::size_t position;
  Elem value;
  std::size_t group;
  std::vector<std::size_t> read_positions;  // exactly r, all in `group`
};

/// Local repair of a single erasure from the r other symbols of its group.
/// Throws NoErasure, MultipleErasures or LengthMismatch.
RepairResult repair(const LrcCode& code, const ReceivedWord& word);

struct DistanceReport {
  std::size_t distance = 0;
  std::size_t singleton_bound = 0;
  bool optimal = false;
  std::string method;
};

constexpr double kExhaustionCap = 1e6;

/// n - k - ceil(k / r) + 2.
std::size_t singleton_bound(std::size_t n, std::size_t k, std::size_t r);
/// Minimum weight over all nonzero messages. Throws CapExceeded when
/// q^k > 1e6.
DistanceReport min_distance(const LrcCode& code);
/// Exact distance from column-subset ranks of the generator matrix:
/// d = n - max{|Z| : rank(G_Z) < k}.
DistanceReport min_distance_by_subsets(const LrcCode& code);

/// k x n generator matrix (row = encoding of a unit message).
std::vector<std::vector<Elem>> generator_matrix(const LrcCode& code);
std::size_t matrix_rank(const Field& f, std::vector<std::vector<Elem>> rows);
/// Rank of the generator matrix; equals k for every valid code.
std::size_t dimension_check(const LrcCode& code);
/// (r + 1)(k / r - 1) + r - 1 == k + k / r - 2 <= n - 2.
bool degree_bound_check(const LrcCode& code);

}  // namespace ratlrc
