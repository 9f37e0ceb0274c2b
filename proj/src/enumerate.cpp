#include <limits>

#include "specbound/search.hpp"

namespace specbound {

std::uint64_t count_partitions(std::size_t n, std::size_t min_blocks, std::size_t max_blocks) {
  constexpr auto saturated = std::numeric_limits<std::uint64_t>::max();
  auto add = [](std::uint64_t a, std::uint64_t b) { return a > saturated - b ? saturated : a + b; };
  auto mul = [](std::uint64_t a, std::uint64_t b) {
    return (b != 0 && a > saturated / b) ? saturated : a * b;
  };
  // Stirling numbers of the second kind, S(i, k) = k S(i-1, k) + S(i-1, k-1).
  std::vector<std::uint64_t> row(n + 1, 0);
  row[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t k = i; k >= 1; --k) row[k] = add(mul(k, row[k]), row[k - 1]);
    row[0] = 0;
  }
  std::uint64_t total = 0;
  for (std::size_t k = std::max<std::size_t>(min_blocks, 1); k <= std::min(max_blocks, n); ++k) {
    total = add(total, row[k]);
  }
  return total;
}

PartitionEnumerator::PartitionEnumerator(std::size_t n, std::size_t min_blocks, std::size_t max_blocks)
    : n_(n), min_blocks_(std::max<std::size_t>(min_blocks, 1)), max_blocks_(std::min(max_blocks, n)),
      labels_(n, 0), prefix_max_(n, 0) {
  if (n == 0) throw Error(ErrorKind::InvalidPartition, "cannot enumerate partitions of 0 indices");
  done_ = max_blocks_ == 0 || min_blocks_ > max_blocks_;
}

bool PartitionEnumerator::advance() {
  // Rightmost position that can still grow, then reset the tail to zeros.
  for (std::size_t i = n_; i-- > 1;) {
    const std::size_t limit = std::min(prefix_max_[i - 1] + 1, max_blocks_ - 1);
    if (labels_[i] < limit) {
      ++labels_[i];
      prefix_max_[i] = std::max(prefix_max_[i - 1], labels_[i]);
      for (std::size_t j = i + 1; j < n_; ++j) {
        labels_[j] = 0;
        prefix_max_[j] = prefix_max_[i];
      }
      return true;
    }
  }
  return false;
}

std::optional<IndexPartition> PartitionEnumerator::next() {
  while (!done_) {
    if (!started_) {
      started_ = true;
    } else if (!advance()) {
      done_ = true;
      break;
    }
    const std::size_t k = prefix_max_.back() + 1;
    if (k >= min_blocks_) return IndexPartition(labels_);
  }
  return std::nullopt;
}

std::vector<IndexPartition> enumerate_partitions(std::size_t n, std::optional<std::size_t> max_blocks,
                                                 PartitionLimits limits, std::size_t min_blocks) {
  if (n > limits.max_n) {
    throw Error(ErrorKind::PartitionSpaceTooLarge,
                "n=" + std::to_string(n) + " exceeds the partition guard of " +
                    std::to_string(limits.max_n));
  }
  const std::size_t hi = max_blocks.value_or(n);
  const std::uint64_t count = count_partitions(n, min_blocks, hi);
  if (count > limits.cap) {
    throw Error(ErrorKind::PartitionSpaceTooLarge,
                std::to_string(count) + " partitions exceed the cap of " + std::to_string(limits.cap));
  }
  std::vector<IndexPartition> out;
  out.reserve(count);
  PartitionEnumerator it(n, min_blocks, hi);
  while (auto p = it.next()) out.push_back(std::move(*p));
  return out;
}

}  // namespace specbound
