#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "specbound/error.hpp"
#include "specbound/partition.hpp"

namespace specbound {

template <typename Scalar>
using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Dense square matrix whose entries are finite and nonnegative. Immutable
/// once constructed; every operation returns a new value.
template <typename Scalar>
class NonnegativeMatrix {
 public:
  using scalar_type = Scalar;
  using dense_type = Dense<Scalar>;

  /// Checks shape and entries. Throws NonSquare, NonFinite(i,j) or
  /// NegativeEntry(i,j), reporting the first offender in row-major order.
  static NonnegativeMatrix validate(dense_type entries) {
    if (entries.rows() != entries.cols() || entries.rows() == 0) {
      throw Error(ErrorKind::NonSquare,
                  "matrix is " + std::to_string(entries.rows()) + "x" +
                      std::to_string(entries.cols()) + ", expected square with n >= 1");
    }
    for (Eigen::Index i = 0; i < entries.rows(); ++i) {
      for (Eigen::Index j = 0; j < entries.cols(); ++j) {
        const Scalar v = entries(i, j);
        const auto si = static_cast<std::size_t>(i);
        const auto sj = static_cast<std::size_t>(j);
        if (!std::isfinite(v)) {
          throw Error(ErrorKind::NonFinite, "non-finite entry at (" + std::to_string(i) + "," +
                                                std::to_string(j) + ")", si, sj);
        }
        if (v < Scalar(0)) {
          throw Error(ErrorKind::NegativeEntry, "negative entry at (" + std::to_string(i) + "," +
                                                    std::to_string(j) + ")", si, sj);
        }
      }
    }
    return NonnegativeMatrix(std::move(entries));
  }

  static NonnegativeMatrix from_rows(const std::vector<std::vector<Scalar>>& rows) {
    const std::size_t n = rows.size();
    for (const auto& r : rows) {
      if (r.size() != n) {
        throw Error(ErrorKind::NonSquare, "row of length " + std::to_string(r.size()) +
                                              " in a matrix with " + std::to_string(n) + " rows");
      }
    }
    dense_type d(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    return validate(std::move(d));
  }

  static NonnegativeMatrix zero(std::size_t n) {
    return validate(dense_type::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)));
  }
  static NonnegativeMatrix identity(std::size_t n) {
    return validate(dense_type::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)));
  }

  std::size_t n() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  Scalar operator()(std::size_t i, std::size_t j) const {
    return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  const dense_type& dense() const noexcept { return entries_; }

  std::vector<std::vector<Scalar>> to_rows() const {
    std::vector<std::vector<Scalar>> rows(n(), std::vector<Scalar>(n()));
    for (std::size_t i = 0; i < n(); ++i)
      for (std::size_t j = 0; j < n(); ++j) rows[i][j] = (*this)(i, j);
    return rows;
  }

  friend bool operator==(const NonnegativeMatrix& a, const NonnegativeMatrix& b) {
    return a.entries_.rows() == b.entries_.rows() && a.entries_ == b.entries_;
  }

 private:
  explicit NonnegativeMatrix(dense_type entries) : entries_(std::move(entries)) {}

  template <typename S>
  friend NonnegativeMatrix<S> trusted(Dense<S> entries);

  dense_type entries_;
};

using Matrix = NonnegativeMatrix<double>;

/// For results that are nonnegative by construction (transposes, permutations,
/// sums and extrema of nonnegative values).
template <typename Scalar>
NonnegativeMatrix<Scalar> trusted(Dense<Scalar> entries) {
  return NonnegativeMatrix<Scalar>(std::move(entries));
}

namespace detail {

inline Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }

/// Left-to-right sum of row `row` over `cols`. All block row sums in the
/// library go through here, so "equal row sums" means bit-equal.
template <typename Derived>
typename Derived::Scalar sequential_row_sum(const Eigen::MatrixBase<Derived>& m, std::size_t row,
                                            std::span<const std::size_t> cols) {
  typename Derived::Scalar s(0);
  for (std::size_t c : cols) s += m(ix(row), ix(c));
  return s;
}

template <typename Scalar>
Scalar sequential_sum(std::span<const Scalar> values) {
  Scalar s(0);
  for (Scalar v : values) s += v;
  return s;
}

/// Moves values[pos] within [lo, hi] so that sequential_sum(values) == target
/// exactly, if such a value exists. The sum is monotone in values[pos], so a
/// bisection over representable values finds it. Returns whether it hit.
template <typename Scalar>
bool settle_entry(std::span<Scalar> values, std::size_t pos, Scalar target, Scalar lo, Scalar hi) {
  auto sum_with = [&](Scalar x) {
    values[pos] = x;
    return sequential_sum<Scalar>(values);
  };
  const Scalar start = std::clamp(values[pos], lo, hi);
  if (sum_with(start) == target) return true;
  if (sum_with(lo) > target || sum_with(hi) < target) {
    values[pos] = start;
    return false;
  }
  if (sum_with(lo) == target) return true;
  // sum(lo) < target <= sum(hi)
  while (true) {
    const Scalar mid = lo + (hi - lo) / Scalar(2);
    if (mid <= lo || mid >= hi) break;
    if (sum_with(mid) < target) lo = mid;
    else hi = mid;
  }
  if (sum_with(hi) == target) return true;
  values[pos] = start;
  return false;
}

}  // namespace detail

template <typename Scalar>
NonnegativeMatrix<Scalar> transpose(const NonnegativeMatrix<Scalar>& m) {
  return trusted<Scalar>(m.dense().transpose());
}

/// output(i, j) = m(p(i), p(j)).
template <typename Scalar>
NonnegativeMatrix<Scalar> permute_symmetric(const NonnegativeMatrix<Scalar>& m,
                                            const Permutation& p) {
  if (p.n() != m.n()) {
    throw Error(ErrorKind::DimensionMismatch, "permutation of size " + std::to_string(p.n()) +
                                                  " applied to n=" + std::to_string(m.n()));
  }
  Dense<Scalar> out(m.dense().rows(), m.dense().cols());
  for (std::size_t i = 0; i < m.n(); ++i)
    for (std::size_t j = 0; j < m.n(); ++j) out(detail::ix(i), detail::ix(j)) = m(p(i), p(j));
  return trusted<Scalar>(std::move(out));
}

/// k×k table; cell (i, j) lists the row sums of block (i, j), one per member
/// of group i in increasing index order.
template <typename Scalar>
class BlockRowSums {
 public:
  BlockRowSums(std::size_t k) : k_(k), cells_(k * k) {}
  std::size_t k() const noexcept { return k_; }
  const std::vector<Scalar>& operator()(std::size_t i, std::size_t j) const {
    return cells_.at(i * k_ + j);
  }
  std::vector<Scalar>& cell(std::size_t i, std::size_t j) { return cells_.at(i * k_ + j); }

 private:
  std::size_t k_;
  std::vector<std::vector<Scalar>> cells_;
};

inline void require_same_n(std::size_t matrix_n, const IndexPartition& p) {
  if (p.n() != matrix_n) {
    throw Error(ErrorKind::DimensionMismatch, "partition of " + std::to_string(p.n()) +
                                                  " indices for n=" + std::to_string(matrix_n));
  }
}

template <typename Scalar>
BlockRowSums<Scalar> block_row_sums(const NonnegativeMatrix<Scalar>& m, const IndexPartition& p) {
  require_same_n(m.n(), p);
  BlockRowSums<Scalar> out(p.k());
  for (std::size_t i = 0; i < p.k(); ++i) {
    for (std::size_t j = 0; j < p.k(); ++j) {
      auto& cell = out.cell(i, j);
      cell.reserve(p.group_size(i));
      for (std::size_t row : p.members(i))
        cell.push_back(detail::sequential_row_sum(m.dense(), row, p.members(j)));
    }
  }
  return out;
}

template <typename Scalar>
bool is_equitable(const NonnegativeMatrix<Scalar>& m, const IndexPartition& p,
                  Scalar tol = Scalar(1e-9)) {
  const auto sums = block_row_sums(m, p);
  for (std::size_t i = 0; i < p.k(); ++i) {
    for (std::size_t j = 0; j < p.k(); ++j) {
      const auto [lo, hi] = std::ranges::minmax(sums(i, j));
      if (hi - lo > tol) return false;
    }
  }
  return true;
}

/// Quotient of an equitable partition: entry (i, j) is the shared row sum of
/// block (i, j), taken from the block's first row.
template <typename Scalar>
NonnegativeMatrix<Scalar> quotient(const NonnegativeMatrix<Scalar>& m, const IndexPartition& p,
                                   Scalar tol = Scalar(1e-9)) {
  const auto sums = block_row_sums(m, p);
  Dense<Scalar> q(detail::ix(p.k()), detail::ix(p.k()));
  for (std::size_t i = 0; i < p.k(); ++i) {
    for (std::size_t j = 0; j < p.k(); ++j) {
      const auto& cell = sums(i, j);
      const auto [lo, hi] = std::ranges::minmax(cell);
      if (hi - lo > tol) {
        throw Error(ErrorKind::NotEquitable,
                    "block (" + std::to_string(i) + "," + std::to_string(j) +
                        ") row sums deviate by " + std::to_string(static_cast<double>(hi - lo)),
                    i, j);
      }
      q(detail::ix(i), detail::ix(j)) = cell.front();
    }
  }
  return trusted<Scalar>(std::move(q));
}

template <typename Scalar>
bool componentwise_le(const NonnegativeMatrix<Scalar>& a, const NonnegativeMatrix<Scalar>& b) {
  if (a.n() != b.n()) {
    throw Error(ErrorKind::DimensionMismatch, "comparing " + std::to_string(a.n()) + "x" +
                                                  std::to_string(a.n()) + " with " +
                                                  std::to_string(b.n()) + "x" + std::to_string(b.n()));
  }
  return (a.dense().array() <= b.dense().array()).all();
}

template <typename Scalar>
std::vector<Scalar> row_sums(const NonnegativeMatrix<Scalar>& m) {
  const auto all = IndexPartition::one_group(m.n());
  std::vector<Scalar> out;
  out.reserve(m.n());
  for (std::size_t r = 0; r < m.n(); ++r)
    out.push_back(detail::sequential_row_sum(m.dense(), r, all.members(0)));
  return out;
}
template <typename Scalar>
Scalar min_row_sum(const NonnegativeMatrix<Scalar>& m) {
  return std::ranges::min(row_sums(m));
}
template <typename Scalar>
Scalar max_row_sum(const NonnegativeMatrix<Scalar>& m) {
  return std::ranges::max(row_sums(m));
}

}  // namespace specbound
