#include "specbound/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "specbound/error.hpp"

namespace specbound {

IndexPartition::IndexPartition(std::span<const std::size_t> labels) {
  if (labels.empty()) {
    throw Error(ErrorKind::InvalidPartition, "partition of zero indices");
  }
  std::unordered_map<std::size_t, std::size_t> relabel;
  labels_.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, fresh] = relabel.try_emplace(labels[i], relabel.size());
    if (fresh) members_.emplace_back();
    labels_.push_back(it->second);
    members_[it->second].push_back(i);
  }
}

IndexPartition IndexPartition::from_groups(const std::vector<std::vector<std::size_t>>& groups,
                                           std::size_t n) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> labels(n, unset);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (groups[g].empty()) {
      throw Error(ErrorKind::InvalidPartition, "empty group " + std::to_string(g));
    }
    for (std::size_t idx : groups[g]) {
      if (idx >= n) {
        throw Error(ErrorKind::InvalidPartition,
                    "index " + std::to_string(idx) + " out of range for n=" + std::to_string(n));
      }
      if (labels[idx] != unset) {
        throw Error(ErrorKind::InvalidPartition,
                    "index " + std::to_string(idx) + " appears in two groups");
      }
      labels[idx] = g;
    }
  }
  if (std::ranges::find(labels, unset) != labels.end()) {
    throw Error(ErrorKind::InvalidPartition, "groups do not cover every index");
  }
  return IndexPartition(labels);
}

IndexPartition IndexPartition::singletons(std::size_t n) {
  std::vector<std::size_t> labels(n);
  std::iota(labels.begin(), labels.end(), std::size_t{0});
  return IndexPartition(labels);
}

IndexPartition IndexPartition::one_group(std::size_t n) {
  std::vector<std::size_t> labels(n, 0);
  return IndexPartition(labels);
}

IndexPartition IndexPartition::parse(const std::string& text) {
  std::vector<std::size_t> labels;
  const char* p = text.data();
  const char* end = p + text.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == ',' || *p == '\t')) ++p;
    if (p == end) break;
    std::size_t value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc{}) {
      throw Error(ErrorKind::Parse, "bad partition label in '" + text + "'");
    }
    labels.push_back(value);
    p = next;
  }
  if (labels.empty()) throw Error(ErrorKind::Parse, "empty partition string");
  return IndexPartition(labels);
}

std::string IndexPartition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(labels_[i]);
  }
  return out;
}

std::string IndexPartition::to_group_string(bool one_based) const {
  std::string out;
  for (std::size_t g = 0; g < members_.size(); ++g) {
    if (g) out += ',';
    out += '{';
    for (std::size_t m = 0; m < members_[g].size(); ++m) {
      if (m) out += ',';
      out += std::to_string(members_[g][m] + (one_based ? 1 : 0));
    }
    out += '}';
  }
  return out;
}

Permutation::Permutation(std::vector<std::size_t> map) : map_(std::move(map)) {
  std::vector<std::size_t> sorted = map_;
  std::ranges::sort(sorted);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) {
      throw Error(ErrorKind::InvalidPermutation, "map is not a bijection on 0..n-1");
    }
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), std::size_t{0});
  return Permutation(std::move(map));
}

Permutation Permutation::from_one_based(const std::vector<std::size_t>& image) {
  std::vector<std::size_t> map;
  map.reserve(image.size());
  for (std::size_t v : image) {
    if (v == 0) throw Error(ErrorKind::InvalidPermutation, "1-based image contains 0");
    map.push_back(v - 1);
  }
  return Permutation(std::move(map));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.n() != q.n()) {
    throw Error(ErrorKind::DimensionMismatch, "composing permutations of different sizes");
  }
  std::vector<std::size_t> map(p.n());
  for (std::size_t i = 0; i < p.n(); ++i) map[i] = p(q(i));
  return Permutation(std::move(map));
}

}  // namespace specbound
