#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "specbound/contraction.hpp"
#include "specbound/spectral.hpp"

namespace specbound {

// ---------------------------------------------------------------------------
// Set partitions

struct PartitionLimits {
  std::size_t max_n = 12;
  std::uint64_t cap = 5'000'000;
};

/// Number of set partitions of n elements into k blocks with
/// min_blocks <= k <= max_blocks (saturates at UINT64_MAX).
std::uint64_t count_partitions(std::size_t n, std::size_t min_blocks, std::size_t max_blocks);

/// Lazily yields set partitions of {0..n-1} in lexicographic
/// restricted-growth-string order, restricted to min_blocks <= k <= max_blocks.
class PartitionEnumerator {
 public:
  PartitionEnumerator(std::size_t n, std::size_t min_blocks, std::size_t max_blocks);
  std::optional<IndexPartition> next();

 private:
  bool advance();

  std::size_t n_;
  std::size_t min_blocks_;
  std::size_t max_blocks_;
  std::vector<std::size_t> labels_;
  std::vector<std::size_t> prefix_max_;  // prefix_max_[i] = max(labels_[0..i])
  bool started_ = false;
  bool done_ = false;
};

/// Every partition with k <= max_blocks (all k when unset). Throws
/// PartitionSpaceTooLarge when n exceeds limits.max_n or the count exceeds
/// limits.cap.
std::vector<IndexPartition> enumerate_partitions(std::size_t n,
                                                 std::optional<std::size_t> max_blocks = {},
                                                 PartitionLimits limits = {},
                                                 std::size_t min_blocks = 1);

// ---------------------------------------------------------------------------
// Bounds

struct SearchOptions {
  std::vector<Orientation> orientations{Orientation::Row, Orientation::Column};
  std::optional<std::size_t> max_blocks;
  std::optional<std::size_t> min_blocks;
  int depth = 1;
  /// Depth >= 3 is exponential and must be requested explicitly.
  bool allow_deep = false;
  PartitionLimits limits;
  double tol = 1e-10;
};

void validate(const SearchOptions& options);

struct TrailStage {
  Orientation orientation;
  IndexPartition partition;
  Matrix result;
};

/// A chain of contractions in one direction. No stages is the zero-step
/// (identity) trail whose terminal matrix is the input itself.
struct Trail {
  Direction direction = Direction::Down;
  std::vector<TrailStage> stages;
  RhoEstimate<double> estimate;

  const Matrix& terminal(const Matrix& input) const {
    return stages.empty() ? input : stages.back().result;
  }
  /// The bound this trail certifies: estimate.lower for down, upper for up.
  double bound() const { return direction == Direction::Down ? estimate.lower : estimate.upper; }
};

struct BoundsReport {
  double lower = 0;
  double upper = 0;
  Trail lower_certificate;
  Trail upper_certificate;
  SearchOptions options;
  std::uint64_t contractions_evaluated = 0;
};

struct RowSumBounds {
  double lower;
  double upper;
};

RowSumBounds row_sum_bounds(const Matrix& m);
RowSumBounds column_sum_bounds(const Matrix& m);

/// Best downward and upward contraction trails up to options.depth stages;
/// every stage must reduce the dimension. The lower bound is the best
/// estimate.lower over downward trails and the upper bound the best
/// estimate.upper over upward trails, never worse than the row sums. Ties
/// go to fewer stages, then per stage fewer blocks, earlier restricted growth
/// string, row before column.
BoundsReport bounds_search(const Matrix& m, const SearchOptions& options = {});

/// bounds_search over bipartitions only (depth 1): the closed-form 2×2 bounds.
BoundsReport two_by_two_bounds(const Matrix& m,
                               std::vector<Orientation> orientations = {Orientation::Row});

enum class Conclusion { ALeB, Inconclusive };
const char* to_string(Conclusion c);

struct ComparisonCertificate {
  Trail a_trail;  // upward on A
  Trail b_trail;  // downward on B
  Conclusion conclusion = Conclusion::Inconclusive;
  SearchOptions options;
};

/// Certifies rho(A) <= rho(B) when the best upward trail on A ends at or
/// below the best downward trail on B, within tol·max(1, rho(A↑)). The
/// zero-step trail counts as a candidate whenever n fits the block filters.
/// Never concludes the opposite ordering.
ComparisonCertificate compare(const Matrix& a, const Matrix& b, const SearchOptions& options = {});

struct ReplayResult {
  bool matches = false;
  RhoEstimate<double> estimate;
  std::string detail;
};

/// Recomputes every stage of the trail from the input and checks the
/// contracted matrices bit-for-bit and the certified bound within tol.
ReplayResult replay(const Matrix& input, const Trail& trail, double tol);

}  // namespace specbound
