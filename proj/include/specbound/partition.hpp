#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace specbound {

/// Assignment of indices {0..n-1} to k groups, stored as a restricted growth
/// string: label j first appears before label j+1. Blocks are selected by
/// group membership, so diagonal blocks are square by construction.
class IndexPartition {
 public:
  /// Canonicalizes arbitrary labels (any relabelling of the same grouping
  /// yields the same partition). Throws InvalidPartition on an empty input.
  explicit IndexPartition(std::span<const std::size_t> labels);
  IndexPartition(std::initializer_list<std::size_t> labels)
      : IndexPartition(std::span<const std::size_t>(labels.begin(), labels.size())) {}

  /// Builds from explicit groups of indices, e.g. {{0,2,4},{1,3}}.
  static IndexPartition from_groups(const std::vector<std::vector<std::size_t>>& groups,
                                    std::size_t n);
  static IndexPartition singletons(std::size_t n);
  static IndexPartition one_group(std::size_t n);
  /// Parses "0,1,1,2" (labels need not be canonical).
  static IndexPartition parse(const std::string& text);

  std::size_t n() const noexcept { return labels_.size(); }
  std::size_t k() const noexcept { return members_.size(); }
  std::size_t label(std::size_t index) const { return labels_.at(index); }
  std::span<const std::size_t> labels() const noexcept { return labels_; }

  /// Indices of group g, increasing.
  std::span<const std::size_t> members(std::size_t g) const { return members_.at(g); }
  std::size_t group_size(std::size_t g) const { return members_.at(g).size(); }

  bool is_singletons() const noexcept { return k() == n(); }

  /// "0,1,1,2"
  std::string to_string() const;
  /// "{1},{2,3,4},{5,6}" with 1-based or 0-based indices.
  std::string to_group_string(bool one_based = true) const;

  friend bool operator==(const IndexPartition&, const IndexPartition&) = default;
  /// Lexicographic restricted-growth-string order.
  friend auto operator<=>(const IndexPartition& a, const IndexPartition& b) {
    return a.labels_ <=> b.labels_;
  }

 private:
  std::vector<std::size_t> labels_;
  std::vector<std::vector<std::size_t>> members_;
};

/// Bijection on {0..n-1}. Used symmetrically: permute_symmetric(M, p)(i, j) =
/// M(p(i), p(j)).
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> map);
  static Permutation identity(std::size_t n);
  /// From a 1-based image list such as (1,3,5,2,4).
  static Permutation from_one_based(const std::vector<std::size_t>& image);

  std::size_t n() const noexcept { return map_.size(); }
  std::size_t operator()(std::size_t i) const { return map_.at(i); }
  std::span<const std::size_t> map() const noexcept { return map_; }

  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> map_;
};

/// (p ∘ q)(i) = p(q(i)), so permute(permute(M, p), q) = permute(M, compose(p, q)).
Permutation compose(const Permutation& p, const Permutation& q);

}  // namespace specbound
