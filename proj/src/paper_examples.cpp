#include <cmath>
#include <functional>
#include <sstream>

#include "specbound/contraction.hpp"
#include "specbound/expansion.hpp"
#include "specbound/matrix_io.hpp"
#include "specbound/search.hpp"
#include "specbound/worked_examples.hpp"

namespace specbound::examples {

Matrix six_by_six() {
  return Matrix::from_rows({{1, 2, 0, 3, 7, 1},
                            {4, 1, 0, 5, 1, 0},
                            {0, 2, 3, 0, 0, 5},
                            {5, 2, 0, 1, 3, 1},
                            {0, 0, 3, 5, 0, 2},
                            {4, 1, 3, 0, 1, 3}});
}

Matrix three_by_three() { return Matrix::from_rows({{1, 3, 2}, {5, 1, 1}, {2, 4, 3}}); }

Matrix five_by_five() {
  return Matrix::from_rows({{1, 3, 2, 1, 2},
                            {7, 1, 1, 3, 3},
                            {2, 4, 3, 1, 0},
                            {1, 1, 5, 2, 2},
                            {4, 3, 0, 2, 1}});
}

Matrix compare_a() {
  return Matrix::from_rows({{2, 1, 1, 2}, {1, 1, 3, 0}, {0, 0, 2, 1}, {1, 2, 0, 4}});
}

Matrix compare_b() { return Matrix::from_rows({{1, 2, 2}, {3, 1, 3}, {1, 1, 5}}); }

namespace {

constexpr double kTol = 1e-9;

class Checker {
 public:
  Checker(bool exact) : exact_(exact) {}

  void near(double got, double want, const std::string& what) {
    const bool integral = exact_ && want == std::round(want) && got == std::round(got);
    const bool ok = integral ? got == want : std::abs(got - want) <= kTol * std::max(1.0, std::abs(want));
    if (!ok) fail(what + ": got " + format_number(got) + ", want " + format_number(want));
  }
  void same(const Matrix& got, const Matrix& want, const std::string& what) {
    bool ok = got.n() == want.n();
    for (std::size_t i = 0; ok && i < got.n(); ++i)
      for (std::size_t j = 0; ok && j < got.n(); ++j) {
        const double g = got(i, j), w = want(i, j);
        ok = (exact_ && w == std::round(w)) ? g == w : std::abs(g - w) <= kTol * std::max(1.0, std::abs(w));
      }
    if (!ok) fail(what + ": got\n" + format_matrix_text(got) + "want\n" + format_matrix_text(want));
  }
  void truth(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }

  ExampleResult finish(std::string name) {
    return {std::move(name), failures_.empty(), failures_};
  }

 private:
  void fail(const std::string& msg) {
    if (!failures_.empty()) failures_ += "; ";
    failures_ += msg;
  }
  bool exact_;
  std::string failures_;
};

double rho_of(const Matrix& m) { return rho(m).value; }

void expansion_chain(Checker& c) {
  const Matrix one = Matrix::from_rows({{5}});
  const auto result = apply_sequence(
      one, {step::RowSumExpand{0, 2, FillPolicy::explicit_weights({{0.4, 0.6}, {0.8, 0.2}})},
            step::Transpose{},
            step::RowSumExpand{0, 2, FillPolicy::explicit_weights({{0.5, 0.5}, {1, 0}, {1.0 / 3, 2.0 / 3}})}});
  c.same(result.matrix, Matrix::from_rows({{1, 1, 4}, {2, 0, 4}, {1, 2, 1}}), "3x3 end of chain");
  c.truth(result.dimensions == std::vector<std::size_t>{1, 2, 2, 3}, "dimension trail 1,2,2,3");
  const Matrix two = row_sum_expand(one, 0, 2, FillPolicy::explicit_weights({{0.4, 0.6}, {0.8, 0.2}}));
  c.same(two, Matrix::from_rows({{2, 3}, {4, 1}}), "[5] expanded");
  c.near(rho_of(one), 5, "rho([5])");
  c.near(rho_of(two), 5, "rho([[2,3],[4,1]])");
  c.near(rho_of(transpose(two)), 5, "rho of transpose");
  c.near(rho_of(result.matrix), 5, "rho of 3x3");
}

void simultaneous_expansion(Checker& c) {
  const Matrix m = Matrix::from_rows({{5, 7}, {2, 4}});
  const std::vector<std::size_t> sizes{2, 3};
  const auto fill = FillPolicy::explicit_weights({{0.6, 0.4}, {1.0 / 7, 4.0 / 7, 2.0 / 7},
                                                  {0, 1}, {3.0 / 7, 1.5 / 7, 2.5 / 7},
                                                  {0.5, 0.5}, {0.75, 0.125, 0.125},
                                                  {0, 1}, {0.25, 0.25, 0.5},
                                                  {0.75, 0.25}, {0, 1, 0}});
  const Matrix big = equitable_expand(m, sizes, fill);
  c.same(big, Matrix::from_rows({{3, 2, 1, 4, 2},
                                 {0, 5, 3, 1.5, 2.5},
                                 {1, 1, 3, 0.5, 0.5},
                                 {0, 2, 1, 1, 2},
                                 {1.5, 0.5, 0, 4, 0}}),
         "5x5 expansion");
  const auto part = expansion_partition(sizes);
  c.truth(quotient(big, part, 0.0) == m, "quotient recovers [[5,7],[2,4]] exactly");
  const double closed = (9 + std::sqrt(57.0)) / 2;
  c.near(rho_of(m), closed, "rho 2x2");
  c.near(rho_of(big), closed, "rho 5x5");
}

void mixed_expansion(Checker& c) {
  const Matrix m = Matrix::from_rows({{5, 8}, {7, 3}});
  const auto fill = FillPolicy::explicit_weights(
      {{0.8, 0.2}, {0.4, 0.6}, {0, 0.125, 0.25, 0.625}, {1, 0}, {2.0 / 3, 1.0 / 3}});
  const Matrix big = mixed_expand(m, 2, 2, fill);
  c.same(big, Matrix::from_rows({{4, 2, 0, 1}, {1, 3, 2, 5}, {7, 7, 3, 0}, {7, 7, 2, 1}}),
         "4x4 mixed expansion");
  const double closed = 4 + std::sqrt(57.0);
  c.near(rho_of(m), closed, "rho 2x2");
  c.near(rho_of(big), closed, "rho 4x4");
}

void block_contraction(Checker& c) {
  const Matrix m = six_by_six();
  const IndexPartition p{0, 1, 1, 1, 2, 2};
  const ContractionSpec down{p, Direction::Down, Orientation::Row};
  const ContractionSpec up{p, Direction::Up, Orientation::Row};
  c.same(contract(m, down), Matrix::from_rows({{1, 5, 8}, {0, 3, 1}, {0, 4, 2}}), "M down");
  c.same(contract(m, up), Matrix::from_rows({{1, 5, 8}, {5, 6, 5}, {4, 8, 4}}), "M up");
  const Matrix lo = adjust(m, down);
  const Matrix hi = adjust(m, up);
  c.truth(componentwise_le(lo, m) && componentwise_le(m, hi), "adjusted ordering");
  c.truth(is_equitable(lo, p, 0.0) && is_equitable(hi, p, 0.0), "adjusted equitable");
  c.truth(quotient(lo, p, 0.0) == contract(m, down) && quotient(hi, p, 0.0) == contract(m, up),
          "quotient of adjusted equals contraction");
  // The alternative adjustments printed with the example satisfy the same contracts.
  const Matrix printed_lo = Matrix::from_rows({{1, 2, 0, 3, 7, 1},
                                               {0, 1, 0, 2, 1, 0},
                                               {0, 2, 1, 0, 0, 1},
                                               {0, 2, 0, 1, 0, 1},
                                               {0, 0, 3, 1, 0, 2},
                                               {0, 1, 3, 0, 1, 1}});
  const Matrix printed_hi = Matrix::from_rows({{1, 2, 0, 3, 7, 1},
                                               {5, 1, 0, 5, 5, 0},
                                               {5, 2, 3, 1, 0, 5},
                                               {5, 2, 3, 1, 3, 2},
                                               {4, 0, 3, 5, 0, 4},
                                               {4, 1, 3, 4, 1, 3}});
  c.truth(componentwise_le(printed_lo, m) && componentwise_le(m, printed_hi), "printed ordering");
  c.truth(quotient(printed_lo, p, 0.0) == contract(m, down), "printed down quotient");
  c.truth(quotient(printed_hi, p, 0.0) == contract(m, up), "printed up quotient");
}

void three_by_three_bounds(Checker& c) {
  const Matrix m = three_by_three();
  const auto rs = row_sum_bounds(m);
  c.near(rs.lower, 6, "row sum lower");
  c.near(rs.upper, 9, "row sum upper");
  const auto cs = column_sum_bounds(m);
  c.near(cs.lower, 6, "column sum lower");
  c.near(cs.upper, 8, "column sum upper");
  const auto row = two_by_two_bounds(m, {Orientation::Row});
  c.near(row.lower, 2 + std::sqrt(19.0), "row 2x2 lower");
  c.near(row.upper, (9 + std::sqrt(57.0)) / 2, "row 2x2 upper");
  const auto col = two_by_two_bounds(m, {Orientation::Column});
  c.near(col.lower, (5 + std::sqrt(65.0)) / 2, "column 2x2 lower");
  c.near(col.upper, 8, "column 2x2 upper");
  const auto single = contract(m, {IndexPartition{0, 0, 1}, Direction::Down, Orientation::Row});
  c.same(single, Matrix::from_rows({{4, 1}, {6, 3}}), "upper-left block down");
  c.same(contract(m, {IndexPartition{0, 0, 1}, Direction::Up, Orientation::Row}),
         Matrix::from_rows({{6, 2}, {6, 3}}), "upper-left block up");
  c.near(rho_of(single), 6, "rho of down contraction");
}

void five_by_five_bounds(Checker& c) {
  const Matrix m = five_by_five();
  const auto rs = row_sum_bounds(m);
  c.near(rs.lower, 9, "row sum lower");
  c.near(rs.upper, 15, "row sum upper");
  const auto cs = column_sum_bounds(m);
  c.near(cs.lower, 8, "column sum lower");
  c.near(cs.upper, 15, "column sum upper");
  const auto r = two_by_two_bounds(m, {Orientation::Row});
  const IndexPartition best = IndexPartition::from_groups({{0, 2, 4}, {1, 3}}, 5);
  c.near(r.lower, 4 + std::sqrt(33.0), "row 2x2 lower");
  // Closed form of the upward contraction [[5,5],[11,4]].
  c.near(r.upper, (9 + std::sqrt(221.0)) / 2, "row 2x2 upper");
  c.truth(r.lower_certificate.stages.size() == 1 && r.lower_certificate.stages[0].partition == best,
          "lower achieved by {1,3,5},{2,4}");
  c.truth(r.upper_certificate.stages.size() == 1 && r.upper_certificate.stages[0].partition == best,
          "upper achieved by {1,3,5},{2,4}");
  const double actual = rho_of(m);
  c.truth(std::abs(actual - 10.995) <= 0.01, "rho(M) ~ 10.995, got " + format_number(actual));
  c.truth(r.lower < actual && actual < r.upper, "rho(M) strictly inside the bounds");
}

void comparison(Checker& c) {
  SearchOptions options;
  options.orientations = {Orientation::Row};
  options.max_blocks = 2;
  const auto cert = compare(compare_a(), compare_b(), options);
  c.truth(cert.conclusion == Conclusion::ALeB, "conclusion A_le_B");
  c.near(cert.a_trail.estimate.upper, 6, "rho(A up)");
  c.near(cert.b_trail.estimate.lower, 4 + std::sqrt(5.0), "rho(B down)");
  c.truth(cert.a_trail.stages.size() == 1 &&
              cert.a_trail.stages[0].partition == IndexPartition::from_groups({{1, 2}, {0, 3}}, 4),
          "A partition {2,3},{1,4}");
  c.truth(cert.b_trail.stages.size() == 1 &&
              cert.b_trail.stages[0].partition == IndexPartition::from_groups({{0, 1}, {2}}, 3),
          "B partition {1,2},{3}");
}

}  // namespace

std::vector<ExampleResult> run_all(bool exact_check) {
  const std::vector<std::pair<std::string, std::function<void(Checker&)>>> cases = {
      {"expansion chain [5] ~ 2x2 ~ transpose ~ 3x3", expansion_chain},
      {"simultaneous 5x5 expansion of [[5,7],[2,4]]", simultaneous_expansion},
      {"mixed 4x4 expansion of [[5,8],[7,3]]", mixed_expansion},
      {"6x6 block contraction and adjustment", block_contraction},
      {"3x3 row/column and 2x2 bounds", three_by_three_bounds},
      {"5x5 row-sum and 2x2 bounds", five_by_five_bounds},
      {"comparison of 4x4 A with 3x3 B", comparison},
  };
  std::vector<ExampleResult> out;
  for (const auto& [name, body] : cases) {
    Checker c(exact_check);
    try {
      body(c);
      out.push_back(c.finish(name));
    } catch (const std::exception& e) {
      out.push_back({name, false, std::string("error: ") + e.what()});
    }
  }
  return out;
}

}  // namespace specbound::examples
