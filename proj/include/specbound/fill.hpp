#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace specbound {

enum class FillKind { Uniform, SeededRandom, Explicit };

/// How an expansion splits a value v into t nonnegative parts summing to v.
///
/// Uniform: v/t each. SeededRandom: a point on the t-simplex scaled by v; the
/// point is the spacing vector of t-1 sorted uniforms, each uniform taken as
/// the top 53 bits of one std::mt19937_64 draw times 2^-53, so draws depend on
/// the seed alone. Explicit: caller-supplied weight rows (nonnegative, each
/// summing to 1 within 1e-12), consumed in order, one per split with t > 1.
/// In every case the last part is settled so the left-to-right sum of the
/// parts equals v exactly. v = 0 always yields zeros without consuming.
struct FillPolicy {
  FillKind kind = FillKind::Uniform;
  std::uint64_t seed = 0;
  std::vector<std::vector<double>> weights;

  static FillPolicy uniform() { return {}; }
  static FillPolicy seeded(std::uint64_t seed) { return {FillKind::SeededRandom, seed, {}}; }
  static FillPolicy explicit_weights(std::vector<std::vector<double>> w) {
    return {FillKind::Explicit, 0, std::move(w)};
  }
};

const char* to_string(FillKind kind);

/// Stateful source of splits for one expansion call. Created fresh from a
/// FillPolicy by each operation; there is no shared generator.
class SplitSource {
 public:
  explicit SplitSource(const FillPolicy& policy);

  /// Writes t = out.size() parts of `value` into out.
  void split(double value, std::span<double> out);

  /// Number of explicit weight rows not consumed yet.
  std::size_t remaining_weights() const;

 private:
  double next_uniform();

  FillPolicy policy_;
  std::mt19937_64 engine_;
  std::size_t next_row_ = 0;
};

}  // namespace specbound
