#pragma once

#include <algorithm>

#include "specbound/matrix.hpp"
#include "specbound/orientation.hpp"

namespace specbound {

struct ContractionSpec {
  IndexPartition partition;
  Direction direction = Direction::Down;
  Orientation orientation = Orientation::Row;
};

/// k×k matrix of per-block minimum (down) or maximum (up) row sums. Column
/// orientation contracts the transpose by rows and transposes back.
template <typename Scalar>
NonnegativeMatrix<Scalar> contract(const NonnegativeMatrix<Scalar>& m, const ContractionSpec& spec) {
  if (spec.orientation == Orientation::Column) {
    return transpose(contract(transpose(m), {spec.partition, spec.direction, Orientation::Row}));
  }
  const auto sums = block_row_sums(m, spec.partition);
  const std::size_t k = spec.partition.k();
  Dense<Scalar> out(detail::ix(k), detail::ix(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const auto& cell = sums(i, j);
      out(detail::ix(i), detail::ix(j)) =
          spec.direction == Direction::Down ? std::ranges::min(cell) : std::ranges::max(cell);
    }
  }
  return trusted<Scalar>(std::move(out));
}

/// Same-dimension matrix whose block row sums are all equal to the block
/// minimum (down) or maximum (up), so that down ⇒ result ≤ M, up ⇒ M ≤ result,
/// and quotient(result, partition) == contract(M, spec) exactly.
///
/// Down removes each row's surplus scanning the block's columns from the
/// highest index to the lowest, clamping entries at zero. Up adds the whole
/// deficit to the block's highest-index column. Either way one entry is then
/// settled so the block row sum is bit-equal to the target, retrying from
/// lower-index columns when rounding rules that out.
template <typename Scalar>
NonnegativeMatrix<Scalar> adjust(const NonnegativeMatrix<Scalar>& m, const ContractionSpec& spec) {
  if (spec.orientation == Orientation::Column) {
    return transpose(adjust(transpose(m), {spec.partition, spec.direction, Orientation::Row}));
  }
  const auto target = contract(m, spec);
  const auto& part = spec.partition;
  Dense<Scalar> out = m.dense();
  std::vector<Scalar> cells;
  for (std::size_t gi = 0; gi < part.k(); ++gi) {
    for (std::size_t gj = 0; gj < part.k(); ++gj) {
      const auto cols = part.members(gj);
      const Scalar goal = target(gi, gj);
      for (std::size_t row : part.members(gi)) {
        cells.clear();
        for (std::size_t c : cols) cells.push_back(out(detail::ix(row), detail::ix(c)));
        const Scalar current = detail::sequential_sum<Scalar>(cells);
        if (current == goal) continue;

        const std::vector<Scalar> original = cells;
        const std::size_t t = cells.size();
        // Entries may move within [0, original] going down and upward from
        // the original going up.
        auto settle = [&](std::size_t c) {
          const Scalar orig = original[c];
          const Scalar lo = spec.direction == Direction::Down ? Scalar(0) : orig;
          const Scalar hi = spec.direction == Direction::Down
                                ? orig
                                : std::max(cells[c], orig) * Scalar(2) + goal;
          return detail::settle_entry<Scalar>(cells, c, goal, lo, hi);
        };
        // The change starts at the highest-index column. Rounding can make the
        // exact target unreachable from one entry, so other starting columns
        // are tried until some entry settles.
        std::vector<Scalar> first;
        bool hit = false;
        for (std::size_t start = t; start-- > 0 && !hit;) {
          cells = original;
          std::size_t settle_at = start;
          if (spec.direction == Direction::Down) {
            Scalar surplus = current - goal;
            for (std::size_t step = 0; step < t && surplus > Scalar(0); ++step) {
              const std::size_t c = (start + t - step) % t;
              const Scalar take = std::min(cells[c], surplus);
              cells[c] -= take;
              surplus -= take;
              settle_at = c;
            }
          } else {
            cells[start] += goal - current;
          }
          if (first.empty()) first = cells;
          hit = settle(settle_at);
          for (std::size_t c = t; c-- > 0 && !hit;)
            if (c != settle_at) hit = settle(c);
        }
        if (!hit) cells = first;
        for (std::size_t c = 0; c < cols.size(); ++c) out(detail::ix(row), detail::ix(cols[c])) = cells[c];
      }
    }
  }
  return trusted<Scalar>(std::move(out));
}

}  // namespace specbound
