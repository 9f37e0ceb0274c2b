#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "specbound/fill.hpp"
#include "specbound/matrix.hpp"
#include "specbound/orientation.hpp"

namespace specbound {

/// Expands index i into an s×s block in place (indices after i shift by
/// s-1). Block D has every row summing to M(i,i); each new row repeats row i
/// of M on the other columns; old row j splits M(j,i) across the new
/// columns. Splits are drawn in output-row order, one per (row, block column)
/// whose width exceeds one.
Matrix row_sum_expand(const Matrix& m, std::size_t i, std::size_t s, const FillPolicy& fill);

/// transpose(row_sum_expand(transpose(m), i, s, fill)).
Matrix column_sum_expand(const Matrix& m, std::size_t i, std::size_t s, const FillPolicy& fill);

/// Simultaneous row-sum expansion of every index: index i becomes a block of
/// size sizes[i], and every row of output block (i, j) sums to M(i, j).
/// The induced partition (see expansion_partition) is equitable with
/// quotient exactly M.
Matrix equitable_expand(const Matrix& m, std::span<const std::size_t> sizes, const FillPolicy& fill);

/// Partition of the expanded index set grouping each source index's block.
IndexPartition expansion_partition(std::span<const std::size_t> sizes);

/// 2×2 mix: column-sum expansion of the first diagonal entry, row-sum
/// expansion of the second. Blocks: (1,1) s1×s1 with column sums M(0,0);
/// (1,2) s1×s2 with total M(0,1); (2,1) every entry M(1,0); (2,2) s2×s2 with
/// row sums M(1,1). Splits are drawn for the columns of (1,1), then (1,2)
/// row-major as one split, then the rows of (2,2).
Matrix mixed_expand(const Matrix& m, std::size_t s1, std::size_t s2, const FillPolicy& fill);

struct ExpansionPlan {
  std::vector<std::size_t> sizes;
  /// One per index; ignored where sizes[i] == 1. Empty means all rows.
  std::vector<Orientation> orientations;
  FillPolicy fill;
};

/// All expanded indices row: equitable_expand. All column: its transpose
/// dual. A 2×2 with one of each: mixed_expand (via a swap when the column
/// index is second). Anything else raises UnsupportedMix.
Matrix expand(const Matrix& m, const ExpansionPlan& plan);

namespace step {
struct Permute {
  Permutation p;
};
struct Transpose {};
struct RowSumExpand {
  std::size_t index;
  std::size_t size;
  FillPolicy fill;
};
struct ColumnSumExpand {
  std::size_t index;
  std::size_t size;
  FillPolicy fill;
};
struct Equitable {
  ExpansionPlan plan;
};
struct Mixed {
  std::size_t s1;
  std::size_t s2;
  FillPolicy fill;
};
}  // namespace step

using ExpansionStep =
    std::variant<step::Permute, step::Transpose, step::RowSumExpand, step::ColumnSumExpand,
                 step::Equitable, step::Mixed>;

struct SequenceResult {
  Matrix matrix;
  /// Dimension before the first step, then after each step.
  std::vector<std::size_t> dimensions;
};

/// Left-to-right composition. A failing step rethrows its Error annotated
/// with the step index.
SequenceResult apply_sequence(const Matrix& m, const std::vector<ExpansionStep>& steps);

}  // namespace specbound
