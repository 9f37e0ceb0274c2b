#include "specbound/fill.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "specbound/error.hpp"
#include "specbound/matrix.hpp"

namespace specbound {

const char* to_string(FillKind kind) {
  switch (kind) {
    case FillKind::Uniform: return "uniform";
    case FillKind::SeededRandom: return "seeded-random";
    case FillKind::Explicit: return "explicit";
  }
  return "unknown";
}

SplitSource::SplitSource(const FillPolicy& policy) : policy_(policy), engine_(policy.seed) {
  if (policy.kind != FillKind::Explicit) return;
  for (std::size_t r = 0; r < policy.weights.size(); ++r) {
    const auto& row = policy.weights[r];
    double total = 0;
    for (double w : row) {
      if (!std::isfinite(w) || w < 0) {
        throw Error(ErrorKind::InvalidFill, "weight row " + std::to_string(r) +
                                                " has a negative or non-finite weight");
      }
      total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) {
      throw Error(ErrorKind::InvalidFill,
                  "weight row " + std::to_string(r) + " sums to " + std::to_string(total));
    }
  }
}

std::size_t SplitSource::remaining_weights() const {
  return policy_.kind == FillKind::Explicit ? policy_.weights.size() - next_row_ : 0;
}

double SplitSource::next_uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

void SplitSource::split(double value, std::span<double> out) {
  const std::size_t t = out.size();
  if (t == 0) throw Error(ErrorKind::InvalidSize, "split into zero parts");
  if (value == 0) {
    std::ranges::fill(out, 0.0);
    return;
  }
  if (t == 1) {
    out[0] = value;
    return;
  }

  switch (policy_.kind) {
    case FillKind::Uniform:
      std::ranges::fill(out, value / static_cast<double>(t));
      break;
    case FillKind::SeededRandom: {
      std::vector<double> cuts(t - 1);
      for (double& c : cuts) c = next_uniform();
      std::ranges::sort(cuts);
      double prev = 0;
      for (std::size_t i = 0; i + 1 < t; ++i) {
        out[i] = value * (cuts[i] - prev);
        prev = cuts[i];
      }
      out[t - 1] = value * (1.0 - prev);
      break;
    }
    case FillKind::Explicit: {
      if (next_row_ >= policy_.weights.size()) {
        throw Error(ErrorKind::InvalidFill, "explicit fill ran out of weight rows after " +
                                                std::to_string(next_row_));
      }
      const auto& w = policy_.weights[next_row_];
      if (w.size() != t) {
        throw Error(ErrorKind::InvalidFill, "weight row " + std::to_string(next_row_) +
                                                " has " + std::to_string(w.size()) +
                                                " entries, split needs " + std::to_string(t));
      }
      ++next_row_;
      for (std::size_t i = 0; i < t; ++i) out[i] = value * w[i];
      break;
    }
  }
  // Settle the last part so the sequential sum is exactly `value`.
  double prefix = 0;
  for (std::size_t i = 0; i + 1 < t; ++i) prefix += out[i];
  out[t - 1] = std::max(0.0, value - prefix);
  for (std::size_t i = t; i-- > 0;)
    if (detail::settle_entry<double>(out, i, value, 0.0, value * 2.0)) break;
}

}  // namespace specbound
