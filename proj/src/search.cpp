#include "specbound/search.hpp"

#include <map>
#include <tuple>

namespace specbound {

namespace {

/// Tie-break key: fewer stages, then per stage (k, labels, row < column).
auto trail_key(const Trail& t) {
  std::vector<std::tuple<std::size_t, std::vector<std::size_t>, int>> key;
  key.reserve(t.stages.size());
  for (const auto& s : t.stages) {
    key.emplace_back(s.partition.k(),
                     std::vector<std::size_t>(s.partition.labels().begin(), s.partition.labels().end()),
                     s.orientation == Orientation::Row ? 0 : 1);
  }
  return std::make_pair(t.stages.size(), std::move(key));
}

bool better(const Trail& candidate, const Trail& incumbent) {
  const double c = candidate.bound();
  const double i = incumbent.bound();
  if (c != i) return candidate.direction == Direction::Down ? c > i : c < i;
  return trail_key(candidate) < trail_key(incumbent);
}

class TrailSearch {
 public:
  TrailSearch(const SearchOptions& options, Direction direction)
      : options_(options), direction_(direction) {}

  /// Best trail over every admissible chain; `seed` (may be empty) competes too.
  std::optional<Trail> run(const Matrix& m, std::optional<Trail> seed) {
    best_ = std::move(seed);
    std::vector<TrailStage> stages;
    explore(m, stages, options_.depth);
    return best_;
  }

  std::uint64_t evaluated() const { return evaluated_; }

 private:
  const std::vector<IndexPartition>& partitions_for(std::size_t n) {
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    // Only dimension-reducing partitions: k <= n - 1.
    const std::size_t hi = std::min(options_.max_blocks.value_or(n - 1), n - 1);
    const std::size_t lo = options_.min_blocks.value_or(1);
    std::vector<IndexPartition> parts;
    if (hi >= 1 && lo <= hi) parts = enumerate_partitions(n, hi, options_.limits, lo);
    return cache_.emplace(n, std::move(parts)).first->second;
  }

  void explore(const Matrix& current, std::vector<TrailStage>& stages, int remaining) {
    if (remaining == 0 || current.n() < 2) return;
    const auto& parts = partitions_for(current.n());
    for (Orientation o : options_.orientations) {
      for (const auto& p : parts) {
        Matrix result = contract(current, ContractionSpec{p, direction_, o});
        stages.push_back(TrailStage{o, p, result});
        Trail t{direction_, stages, rho(result, options_.tol)};
        ++evaluated_;
        if (!best_ || better(t, *best_)) best_ = t;
        explore(result, stages, remaining - 1);
        stages.pop_back();
      }
    }
  }

  const SearchOptions& options_;
  Direction direction_;
  std::optional<Trail> best_;
  std::map<std::size_t, std::vector<IndexPartition>> cache_;
  std::uint64_t evaluated_ = 0;
};

Trail one_group_trail(const Matrix& m, Direction d, double tol) {
  const IndexPartition all = IndexPartition::one_group(m.n());
  Matrix result = contract(m, ContractionSpec{all, d, Orientation::Row});
  Trail t{d, {TrailStage{Orientation::Row, all, result}}, {}};
  t.estimate = rho(result, tol);
  return t;
}

bool identity_admissible(std::size_t n, const SearchOptions& options) {
  return n <= options.max_blocks.value_or(n) && n >= options.min_blocks.value_or(1);
}

}  // namespace

const char* to_string(Conclusion c) { return c == Conclusion::ALeB ? "A_le_B" : "inconclusive"; }

void validate(const SearchOptions& options) {
  if (options.depth < 1) throw Error(ErrorKind::InvalidOptions, "depth must be >= 1");
  if (options.depth >= 3 && !options.allow_deep) {
    throw Error(ErrorKind::InvalidOptions, "depth >= 3 requires allow_deep");
  }
  if (options.limits.cap == 0) throw Error(ErrorKind::InvalidOptions, "partition cap must be > 0");
  if (options.orientations.empty()) {
    throw Error(ErrorKind::InvalidOptions, "at least one orientation is required");
  }
  if (!(options.tol > 0)) throw Error(ErrorKind::InvalidOptions, "tol must be > 0");
  if (options.min_blocks && options.max_blocks && *options.min_blocks > *options.max_blocks) {
    throw Error(ErrorKind::InvalidOptions, "min_blocks exceeds max_blocks");
  }
}

RowSumBounds row_sum_bounds(const Matrix& m) { return {min_row_sum(m), max_row_sum(m)}; }

RowSumBounds column_sum_bounds(const Matrix& m) { return row_sum_bounds(transpose(m)); }

BoundsReport bounds_search(const Matrix& m, const SearchOptions& options) {
  validate(options);
  BoundsReport report;
  report.options = options;

  TrailSearch down(options, Direction::Down);
  report.lower_certificate = *down.run(m, one_group_trail(m, Direction::Down, options.tol));
  TrailSearch up(options, Direction::Up);
  report.upper_certificate = *up.run(m, one_group_trail(m, Direction::Up, options.tol));

  report.lower = report.lower_certificate.bound();
  report.upper = report.upper_certificate.bound();
  report.contractions_evaluated = down.evaluated() + up.evaluated();
  return report;
}

BoundsReport two_by_two_bounds(const Matrix& m, std::vector<Orientation> orientations) {
  if (m.n() < 2) throw Error(ErrorKind::InvalidSize, "2x2 contraction bounds need n >= 2");
  SearchOptions options;
  options.orientations = std::move(orientations);
  options.min_blocks = 2;
  options.max_blocks = 2;
  options.depth = 1;
  return bounds_search(m, options);
}

ComparisonCertificate compare(const Matrix& a, const Matrix& b, const SearchOptions& options) {
  validate(options);
  auto identity = [&](const Matrix& m, Direction d) -> std::optional<Trail> {
    if (!identity_admissible(m.n(), options)) return std::nullopt;
    return Trail{d, {}, rho(m, options.tol)};
  };

  TrailSearch up(options, Direction::Up);
  auto a_trail = up.run(a, identity(a, Direction::Up));
  TrailSearch down(options, Direction::Down);
  auto b_trail = down.run(b, identity(b, Direction::Down));
  if (!a_trail || !b_trail) {
    throw Error(ErrorKind::InvalidOptions, "block filters admit no contraction of A or B");
  }

  ComparisonCertificate cert{*a_trail, *b_trail, Conclusion::Inconclusive, options};
  const double lhs = cert.a_trail.estimate.upper;
  const double rhs = cert.b_trail.estimate.lower;
  if (lhs <= rhs + options.tol * std::max(1.0, lhs)) cert.conclusion = Conclusion::ALeB;
  return cert;
}

ReplayResult replay(const Matrix& input, const Trail& trail, double tol) {
  ReplayResult out;
  Matrix current = input;
  for (std::size_t s = 0; s < trail.stages.size(); ++s) {
    const auto& stage = trail.stages[s];
    if (stage.partition.n() != current.n()) {
      out.detail = "stage " + std::to_string(s) + " partition does not fit the running matrix";
      return out;
    }
    current = contract(current, ContractionSpec{stage.partition, trail.direction, stage.orientation});
    if (!(current == stage.result)) {
      out.detail = "stage " + std::to_string(s) + " contraction differs from the recorded matrix";
      return out;
    }
  }
  out.estimate = rho(current, tol);
  const double replayed =
      trail.direction == Direction::Down ? out.estimate.lower : out.estimate.upper;
  const double scale = std::max(1.0, std::abs(trail.bound()));
  out.matches = std::abs(replayed - trail.bound()) <= tol * scale;
  if (!out.matches) out.detail = "replayed bound differs from the recorded bound";
  return out;
}

}  // namespace specbound
