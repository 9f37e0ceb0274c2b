#include "specbound/report.hpp"

namespace specbound {

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.n(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.n(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const RhoEstimate<double>& e) {
  return {{"value", e.value},           {"lower", e.lower},
          {"upper", e.upper},           {"iterations", e.iterations},
          {"converged", e.converged},   {"vector", e.vector}};
}

json to_json(const Trail& t) {
  json stages = json::array();
  for (const auto& s : t.stages) {
    stages.push_back({{"orientation", to_string(s.orientation)},
                      {"partition", std::vector<std::size_t>(s.partition.labels().begin(),
                                                             s.partition.labels().end())},
                      {"groups", s.partition.to_group_string(true)},
                      {"matrix", to_json(s.result)}});
  }
  return {{"direction", to_string(t.direction)},
          {"stages", std::move(stages)},
          {"bound", t.bound()},
          {"rho", to_json(t.estimate)}};
}

json to_json(const SearchOptions& o) {
  json orientations = json::array();
  for (auto x : o.orientations) orientations.push_back(to_string(x));
  json j = {{"orientations", std::move(orientations)},
            {"depth", o.depth},
            {"max_blocks", nullptr},
            {"min_blocks", nullptr},
            {"partition_cap", o.limits.cap},
            {"max_n", o.limits.max_n},
            {"tol", o.tol}};
  if (o.max_blocks) j["max_blocks"] = *o.max_blocks;
  if (o.min_blocks) j["min_blocks"] = *o.min_blocks;
  return j;
}

json to_json(const BoundsReport& r, const Matrix& input) {
  const auto rs = row_sum_bounds(input);
  return {{"kind", "bounds"},
          {"n", input.n()},
          {"lower", r.lower},
          {"upper", r.upper},
          {"row_sum_bounds", {{"lower", rs.lower}, {"upper", rs.upper}}},
          {"lower_certificate", to_json(r.lower_certificate)},
          {"upper_certificate", to_json(r.upper_certificate)},
          {"contractions_evaluated", r.contractions_evaluated},
          {"options", to_json(r.options)}};
}

json to_json(const ComparisonCertificate& c) {
  return {{"kind", "comparison"},
          {"conclusion", to_string(c.conclusion)},
          {"rho_a_up", c.a_trail.estimate.upper},
          {"rho_b_down", c.b_trail.estimate.lower},
          {"a_trail", to_json(c.a_trail)},
          {"b_trail", to_json(c.b_trail)},
          {"options", to_json(c.options)}};
}

namespace {

Matrix matrix_from_json(const json& j) {
  std::vector<std::vector<double>> rows;
  for (const auto& r : j) rows.push_back(r.get<std::vector<double>>());
  return Matrix::from_rows(rows);
}

template <typename T>
T field(const json& j, const char* name) {
  if (!j.contains(name)) throw Error(ErrorKind::Parse, std::string("missing field '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("field '") + name + "': " + e.what());
  }
}

}  // namespace

Trail trail_from_json(const json& j) {
  Trail t;
  t.direction = parse_direction(field<std::string>(j, "direction"));
  for (const auto& s : field<json>(j, "stages")) {
    const auto labels = field<std::vector<std::size_t>>(s, "partition");
    t.stages.push_back(TrailStage{parse_orientation(field<std::string>(s, "orientation")),
                                  IndexPartition(labels), matrix_from_json(field<json>(s, "matrix"))});
  }
  const json& r = field<json>(j, "rho");
  t.estimate.value = field<double>(r, "value");
  t.estimate.lower = field<double>(r, "lower");
  t.estimate.upper = field<double>(r, "upper");
  t.estimate.iterations = field<int>(r, "iterations");
  t.estimate.converged = field<bool>(r, "converged");
  t.estimate.vector = field<std::vector<double>>(r, "vector");
  return t;
}

FillPolicy parse_fill(const json& j, std::optional<std::uint64_t> seed_override) {
  if (j.is_null()) return FillPolicy::uniform();
  const auto kind = field<std::string>(j, "kind");
  if (kind == "uniform") return FillPolicy::uniform();
  if (kind == "seeded-random" || kind == "seeded") {
    if (seed_override) return FillPolicy::seeded(*seed_override);
    return FillPolicy::seeded(field<std::uint64_t>(j, "seed"));
  }
  if (kind == "explicit") {
    return FillPolicy::explicit_weights(field<std::vector<std::vector<double>>>(j, "weights"));
  }
  throw Error(ErrorKind::Parse, "unknown fill kind '" + kind + "'");
}

namespace {

ExpansionPlan parse_single_plan(const json& j, std::optional<std::uint64_t> seed_override) {
  ExpansionPlan plan;
  plan.sizes = field<std::vector<std::size_t>>(j, "sizes");
  if (j.contains("orientations")) {
    for (const auto& o : j["orientations"]) plan.orientations.push_back(parse_orientation(o.get<std::string>()));
  } else if (j.contains("orientation")) {
    plan.orientations.assign(plan.sizes.size(), parse_orientation(field<std::string>(j, "orientation")));
  }
  plan.fill = parse_fill(j.value("fill", json()), seed_override);
  return plan;
}

ExpansionStep parse_step(const json& s, std::optional<std::uint64_t> seed_override) {
  const auto op = field<std::string>(s, "op");
  const auto fill = [&] { return parse_fill(s.value("fill", json()), seed_override); };
  if (op == "permute") return step::Permute{Permutation(field<std::vector<std::size_t>>(s, "map"))};
  if (op == "transpose") return step::Transpose{};
  if (op == "row_sum_expand") {
    return step::RowSumExpand{field<std::size_t>(s, "index"), field<std::size_t>(s, "size"), fill()};
  }
  if (op == "column_sum_expand") {
    return step::ColumnSumExpand{field<std::size_t>(s, "index"), field<std::size_t>(s, "size"), fill()};
  }
  if (op == "equitable_expand") return step::Equitable{parse_single_plan(s, seed_override)};
  if (op == "mixed_expand") {
    return step::Mixed{field<std::size_t>(s, "s1"), field<std::size_t>(s, "s2"), fill()};
  }
  throw Error(ErrorKind::Parse, "unknown step op '" + op + "'");
}

}  // namespace

std::vector<ExpansionStep> parse_plan(const json& doc, std::optional<std::uint64_t> seed_override) {
  if (!doc.is_object()) throw Error(ErrorKind::Parse, "plan must be a JSON object");
  std::vector<ExpansionStep> steps;
  if (doc.contains("steps")) {
    for (const auto& s : doc["steps"]) steps.push_back(parse_step(s, seed_override));
  } else {
    steps.push_back(step::Equitable{parse_single_plan(doc, seed_override)});
  }
  return steps;
}

}  // namespace specbound
