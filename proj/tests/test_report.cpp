#include <doctest.h>

#include "oracle.hpp"
#include "specbound/report.hpp"

using namespace specbound;

namespace {

Matrix five_by_five() {
  return Matrix::from_rows({{1, 3, 2, 1, 2},
                            {7, 1, 1, 3, 3},
                            {2, 4, 3, 1, 0},
                            {1, 1, 5, 2, 2},
                            {4, 3, 0, 2, 1}});
}

}  // namespace

TEST_CASE("trail JSON round trip replays") {
  const auto m = five_by_five();
  SearchOptions o;
  o.depth = 2;
  o.max_blocks = 3;
  const auto r = bounds_search(m, o);
  const json doc = json::parse(to_json(r, m).dump());
  CHECK(doc["kind"] == "bounds");
  CHECK(doc["n"] == 5);
  CHECK(doc["row_sum_bounds"]["upper"] == 15.0);
  CHECK(doc["options"]["max_blocks"] == 3);
  CHECK(doc["options"]["min_blocks"].is_null());
  for (const char* key : {"lower_certificate", "upper_certificate"}) {
    const Trail t = trail_from_json(doc[key]);
    const auto& original = std::string(key) == "lower_certificate" ? r.lower_certificate : r.upper_certificate;
    CHECK(t.direction == original.direction);
    REQUIRE(t.stages.size() == original.stages.size());
    for (std::size_t s = 0; s < t.stages.size(); ++s) {
      CHECK(t.stages[s].partition == original.stages[s].partition);
      CHECK(t.stages[s].result == original.stages[s].result);
    }
    CHECK(t.bound() == original.bound());
    CHECK(replay(m, t, o.tol).matches);
  }
  CHECK(doc["lower"].get<double>() == r.lower);
}

TEST_CASE("trail stages carry 1-based group strings") {
  const auto r = two_by_two_bounds(five_by_five());
  const json j = to_json(r.upper_certificate);
  CHECK(j["direction"] == "up");
  CHECK(j["stages"][0]["groups"] == "{1,3,5},{2,4}");
  CHECK(j["stages"][0]["partition"] == json::array({0, 1, 0, 1, 0}));
  CHECK(j["stages"][0]["matrix"] == json::parse("[[5,5],[11,4]]"));
}

TEST_CASE("comparison JSON") {
  const auto a = Matrix::from_rows({{2, 1, 1, 2}, {1, 1, 3, 0}, {0, 0, 2, 1}, {1, 2, 0, 4}});
  const auto b = Matrix::from_rows({{1, 2, 2}, {3, 1, 3}, {1, 1, 5}});
  SearchOptions o;
  o.orientations = {Orientation::Row};
  o.max_blocks = 2;
  const json j = to_json(compare(a, b, o));
  CHECK(j["kind"] == "comparison");
  CHECK(j["conclusion"] == "A_le_B");
  CHECK(j["rho_a_up"].get<double>() == doctest::Approx(6));
  CHECK(replay(a, trail_from_json(j["a_trail"]), 1e-10).matches);
  CHECK(replay(b, trail_from_json(j["b_trail"]), 1e-10).matches);
}

TEST_CASE("trail_from_json rejects malformed input") {
  CHECK_THROWS_AS(trail_from_json(json::parse(R"({"stages": []})")), Error);
  CHECK_THROWS_AS(trail_from_json(json::parse(R"({"direction": "sideways", "stages": []})")), Error);
  CHECK_THROWS_AS(trail_from_json(json::parse(R"({"direction": "up", "stages": 3})")), Error);
}

TEST_CASE("parse_plan: single plan") {
  const auto steps = parse_plan(json::parse(R"({"sizes": [2, 3], "orientation": "row", "fill": {"kind": "uniform"}})"));
  REQUIRE(steps.size() == 1);
  const auto r = apply_sequence(Matrix::from_rows({{5, 7}, {2, 4}}), steps);
  CHECK(r.matrix.n() == 5);
  CHECK(r.dimensions == std::vector<std::size_t>{2, 5});
  CHECK(oracle::spectral_radius(r.matrix) ==
        doctest::Approx(oracle::spectral_radius(Matrix::from_rows({{5, 7}, {2, 4}}))).epsilon(1e-10));

  const auto mixed =
      parse_plan(json::parse(R"({"sizes": [2, 2], "orientations": ["column", "row"]})"));
  CHECK(apply_sequence(Matrix::from_rows({{5, 8}, {7, 3}}), mixed).matrix.n() == 4);
}

TEST_CASE("parse_plan: steps and seed override") {
  const json doc = json::parse(R"({"steps": [
      {"op": "row_sum_expand", "index": 0, "size": 3, "fill": {"kind": "seeded-random", "seed": 7}},
      {"op": "transpose"},
      {"op": "permute", "map": [2, 0, 1, 3]},
      {"op": "column_sum_expand", "index": 1, "size": 2, "fill": {"kind": "explicit", "weights": [[0.5, 0.5], [1, 0], [0.25, 0.75], [0.5, 0.5], [0.125, 0.875]]}},
      {"op": "equitable_expand", "sizes": [1, 1, 1, 1, 2], "orientation": "row", "fill": {"kind": "seeded-random", "seed": 9}}
  ]})");
  const auto m = Matrix::from_rows({{1, 2}, {3, 4}});
  const auto a = apply_sequence(m, parse_plan(doc));
  const auto b = apply_sequence(m, parse_plan(doc));
  CHECK(a.matrix == b.matrix);
  CHECK(a.dimensions == std::vector<std::size_t>{2, 4, 4, 4, 5, 6});
  CHECK(oracle::spectral_radius(a.matrix) == doctest::Approx(oracle::spectral_radius(m)).epsilon(1e-9));

  const auto c = apply_sequence(m, parse_plan(doc, 12345));
  const auto d = apply_sequence(m, parse_plan(doc, 12345));
  CHECK(c.matrix == d.matrix);
  CHECK_FALSE(c.matrix == a.matrix);
}

TEST_CASE("parse_plan: errors") {
  CHECK_THROWS_AS(parse_plan(json::parse("[1, 2]")), Error);
  CHECK_THROWS_AS(parse_plan(json::parse(R"({"steps": [{"op": "rotate"}]})")), Error);
  CHECK_THROWS_AS(parse_plan(json::parse(R"({"steps": [{"op": "row_sum_expand", "size": 2}]})")), Error);
  CHECK_THROWS_AS(parse_fill(json::parse(R"({"kind": "gaussian"})")), Error);
  CHECK_THROWS_AS(row_sum_expand(Matrix::identity(2), 0, 2,
                                 parse_fill(json::parse(R"({"kind": "explicit", "weights": [[0.5, 0.6]]})"))),
                  Error);

  const auto bad_index = parse_plan(json::parse(R"({"steps": [{"op": "transpose"}, {"op": "row_sum_expand", "index": 5, "size": 2}]})"));
  try {
    apply_sequence(Matrix::identity(2), bad_index);
    FAIL("expected IndexOutOfRange");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IndexOutOfRange);
    CHECK(std::string(e.what()).find("step 1") != std::string::npos);
  }
}
