#include "specbound/expansion.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace specbound {

namespace {

using detail::ix;

std::vector<std::size_t> offsets_of(std::span<const std::size_t> sizes) {
  std::vector<std::size_t> off(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) off[i + 1] = off[i] + sizes[i];
  return off;
}

void check_sizes(std::span<const std::size_t> sizes, std::size_t n) {
  if (sizes.size() != n) {
    throw Error(ErrorKind::InvalidSize, "plan has " + std::to_string(sizes.size()) +
                                            " sizes for n=" + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (sizes[i] == 0) {
      throw Error(ErrorKind::InvalidSize, "expansion size 0 at index " + std::to_string(i), i);
    }
  }
}

}  // namespace

IndexPartition expansion_partition(std::span<const std::size_t> sizes) {
  std::vector<std::size_t> labels;
  for (std::size_t i = 0; i < sizes.size(); ++i) labels.insert(labels.end(), sizes[i], i);
  return IndexPartition(labels);
}

Matrix equitable_expand(const Matrix& m, std::span<const std::size_t> sizes, const FillPolicy& fill) {
  const std::size_t n = m.n();
  check_sizes(sizes, n);
  const auto off = offsets_of(sizes);
  const std::size_t total = off.back();

  SplitSource source(fill);
  Dense<double> out = Dense<double>::Zero(ix(total), ix(total));
  std::vector<double> parts;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = off[i]; r < off[i + 1]; ++r) {
      for (std::size_t j = 0; j < n; ++j) {
        parts.assign(sizes[j], 0.0);
        source.split(m(i, j), parts);
        for (std::size_t c = 0; c < sizes[j]; ++c) out(ix(r), ix(off[j] + c)) = parts[c];
      }
    }
  }
  return Matrix::validate(std::move(out));
}

Matrix row_sum_expand(const Matrix& m, std::size_t i, std::size_t s, const FillPolicy& fill) {
  if (i >= m.n()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "expansion index " + std::to_string(i) + " for n=" + std::to_string(m.n()), i);
  }
  if (s == 0) throw Error(ErrorKind::InvalidSize, "expansion size must be >= 1");
  std::vector<std::size_t> sizes(m.n(), 1);
  sizes[i] = s;
  return equitable_expand(m, sizes, fill);
}

Matrix column_sum_expand(const Matrix& m, std::size_t i, std::size_t s, const FillPolicy& fill) {
  return transpose(row_sum_expand(transpose(m), i, s, fill));
}

Matrix mixed_expand(const Matrix& m, std::size_t s1, std::size_t s2, const FillPolicy& fill) {
  if (m.n() != 2) {
    throw Error(ErrorKind::NotTwoByTwo, "mixed expansion needs a 2x2, got n=" + std::to_string(m.n()));
  }
  if (s1 == 0 || s2 == 0) throw Error(ErrorKind::InvalidSize, "expansion sizes must be >= 1");

  SplitSource source(fill);
  const std::size_t total = s1 + s2;
  Dense<double> out = Dense<double>::Zero(ix(total), ix(total));
  std::vector<double> parts(s1);
  for (std::size_t c = 0; c < s1; ++c) {
    source.split(m(0, 0), parts);
    for (std::size_t r = 0; r < s1; ++r) out(ix(r), ix(c)) = parts[r];
  }
  parts.assign(s1 * s2, 0.0);
  source.split(m(0, 1), parts);
  for (std::size_t r = 0; r < s1; ++r)
    for (std::size_t c = 0; c < s2; ++c) out(ix(r), ix(s1 + c)) = parts[r * s2 + c];
  out.bottomLeftCorner(ix(s2), ix(s1)).setConstant(m(1, 0));
  parts.assign(s2, 0.0);
  for (std::size_t r = 0; r < s2; ++r) {
    source.split(m(1, 1), parts);
    for (std::size_t c = 0; c < s2; ++c) out(ix(s1 + r), ix(s1 + c)) = parts[c];
  }
  return Matrix::validate(std::move(out));
}

Matrix expand(const Matrix& m, const ExpansionPlan& plan) {
  check_sizes(plan.sizes, m.n());
  if (!plan.orientations.empty() && plan.orientations.size() != m.n()) {
    throw Error(ErrorKind::InvalidSize, "plan has " + std::to_string(plan.orientations.size()) +
                                            " orientations for n=" + std::to_string(m.n()));
  }
  auto orientation = [&](std::size_t i) {
    return plan.orientations.empty() ? Orientation::Row : plan.orientations[i];
  };
  bool any_row = false;
  bool any_col = false;
  for (std::size_t i = 0; i < m.n(); ++i) {
    if (plan.sizes[i] == 1) continue;
    (orientation(i) == Orientation::Row ? any_row : any_col) = true;
  }
  if (!any_col) return equitable_expand(m, plan.sizes, plan.fill);
  if (!any_row) return transpose(equitable_expand(transpose(m), plan.sizes, plan.fill));
  if (m.n() != 2) {
    throw Error(ErrorKind::UnsupportedMix,
                "mixed row/column expansion is only defined for a 2x2; compose steps instead");
  }
  if (orientation(0) == Orientation::Column) {
    return mixed_expand(m, plan.sizes[0], plan.sizes[1], plan.fill);
  }
  // Row first, column second: swap the indices, expand, swap the blocks back.
  const Permutation swap({1, 0});
  const Matrix swapped = mixed_expand(permute_symmetric(m, swap), plan.sizes[1], plan.sizes[0], plan.fill);
  const std::size_t s_first = plan.sizes[1];
  const std::size_t total = swapped.n();
  std::vector<std::size_t> back(total);
  for (std::size_t i = 0; i < total; ++i) {
    // New index i belongs to source index 0 when i < sizes[0].
    back[i] = i < plan.sizes[0] ? s_first + i : i - plan.sizes[0];
  }
  return permute_symmetric(swapped, Permutation(std::move(back)));
}

namespace {

struct StepRunner {
  const Matrix& m;
  Matrix operator()(const step::Permute& s) const { return permute_symmetric(m, s.p); }
  Matrix operator()(const step::Transpose&) const { return transpose(m); }
  Matrix operator()(const step::RowSumExpand& s) const {
    return row_sum_expand(m, s.index, s.size, s.fill);
  }
  Matrix operator()(const step::ColumnSumExpand& s) const {
    return column_sum_expand(m, s.index, s.size, s.fill);
  }
  Matrix operator()(const step::Equitable& s) const { return expand(m, s.plan); }
  Matrix operator()(const step::Mixed& s) const { return mixed_expand(m, s.s1, s.s2, s.fill); }
};

}  // namespace

SequenceResult apply_sequence(const Matrix& m, const std::vector<ExpansionStep>& steps) {
  SequenceResult result{m, {m.n()}};
  for (std::size_t k = 0; k < steps.size(); ++k) {
    try {
      result.matrix = std::visit(StepRunner{result.matrix}, steps[k]);
    } catch (const Error& e) {
      throw e.with_step(k);
    }
    result.dimensions.push_back(result.matrix.n());
  }
  return result;
}

}  // namespace specbound
