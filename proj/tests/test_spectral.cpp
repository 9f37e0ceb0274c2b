#include <doctest.h>

#include "oracle.hpp"
#include "specbound/spectral.hpp"

using namespace specbound;

namespace {

constexpr double kTol = 1e-10;

bool contains(const RhoEstimate<double>& e, double v, double slack = 1e-12) {
  const double s = slack * std::max(1.0, std::abs(v));
  return e.lower - s <= v && v <= e.upper + s;
}

void check_invariants(const RhoEstimate<double>& e, double tol = kTol) {
  CHECK(0 <= e.lower);
  CHECK(e.lower <= e.value);
  CHECK(e.value <= e.upper);
  for (double x : e.vector) CHECK(x > 0);
  if (e.converged) CHECK(e.width() <= tol * std::max(1.0, e.upper));
}

}  // namespace

TEST_CASE("rho_power") {
  const auto e = rho_power(Matrix::from_rows({{2, 3}, {4, 1}}), kTol);
  CHECK(e.converged);
  CHECK(e.width() < 1e-9);
  CHECK(e.value == doctest::Approx(5).epsilon(1e-12));
  check_invariants(e);

  const auto zero = rho_power(Matrix::zero(3), kTol);
  CHECK(zero.value == 0);
  CHECK(zero.converged);
  CHECK(zero.iterations == 1);

  // Period two; the shift by I is what lets this converge.
  const auto swap = rho_power(Matrix::from_rows({{0, 1}, {1, 0}}), kTol);
  CHECK(swap.converged);
  CHECK(swap.value == doctest::Approx(1).epsilon(1e-10));
}

TEST_CASE("rho_power reports the cap instead of throwing") {
  // Jordan-like block: power iteration converges like 1/k.
  const auto m = Matrix::from_rows({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
  const auto e = rho_power(m, kTol, 50);
  CHECK_FALSE(e.converged);
  CHECK(e.iterations == 50);
  CHECK(contains(e, 1.0));
  check_invariants(e);
}

TEST_CASE("rho_gelfand") {
  const auto nil = rho_gelfand(Matrix::from_rows({{0, 1}, {0, 0}}), kTol);
  CHECK(nil.value == 0);
  CHECK(nil.lower == 0);
  CHECK(nil.upper == 0);
  CHECK(nil.iterations == 1);

  for (double c : {0.0, 0.25, 3.0, 1e6}) {
    const auto e = rho_gelfand(Matrix::from_rows({{c}}), kTol);
    CHECK(e.value == c);
  }

  const auto six = Matrix::from_rows({{1, 2, 0, 3, 7, 1},
                                      {4, 1, 0, 5, 1, 0},
                                      {0, 2, 3, 0, 0, 5},
                                      {5, 2, 0, 1, 3, 1},
                                      {0, 0, 3, 5, 0, 2},
                                      {4, 1, 3, 0, 1, 3}});
  const auto g = rho_gelfand(six, kTol);
  const auto p = rho_power(six, kTol);
  CHECK(contains(g, p.value, 1e-9));
  CHECK(contains(g, oracle::spectral_radius(six), 1e-9));

  // Jordan block: Gelfand converges where plain power iteration is slow.
  const auto jordan = rho_gelfand(Matrix::from_rows({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}), kTol);
  CHECK(contains(jordan, 1.0));
  CHECK(jordan.width() < 1e-9);
}

TEST_CASE("rho dispatch") {
  CHECK(rho(Matrix::from_rows({{4, 1}, {6, 3}})).value == 6);
  CHECK(rho(Matrix::from_rows({{6, 2}, {6, 3}})).value == doctest::Approx((9 + std::sqrt(57.0)) / 2).epsilon(1e-15));
  CHECK(rho(Matrix::from_rows({{5, 4}, {8, 3}})).value == doctest::Approx(4 + std::sqrt(33.0)).epsilon(1e-15));
  const auto one = rho(Matrix::from_rows({{7.5}}));
  CHECK(one.value == 7.5);
  CHECK(one.width() == 0);

  // Reducible, power iteration stalls; dispatch falls back to Gelfand.
  const auto m = Matrix::from_rows({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
  const auto e = rho(m, kTol);
  CHECK(contains(e, 1.0));
  CHECK(e.converged);
  check_invariants(e);
}

TEST_CASE("2x2 closed form yields a positive Perron vector") {
  const auto m = Matrix::from_rows({{4, 1}, {6, 3}});
  const auto e = rho(m);
  Eigen::Vector2d v(e.vector[0], e.vector[1]);
  CHECK(((m.dense() * v) - e.value * v).norm() < 1e-12);
  // Triangular: no positive eigenvector exists, fall back to uniform.
  const auto t = rho(Matrix::from_rows({{2, 0}, {1, 1}}));
  CHECK(t.value == 2);
  for (double x : t.vector) CHECK(x > 0);
}

TEST_CASE("enclosure soundness against an eigensolver") {
  oracle::Rng rng(31);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = rng.index(1, 6);
    const auto m = rng.matrix(n, t % 3 == 0 ? 0.6 : 0.15);
    const auto e = rho(m, kTol);
    const double truth = oracle::spectral_radius(m);
    CHECK(contains(e, truth, 1e-9));
    check_invariants(e);
  }
}

TEST_CASE("properties: monotone, scale and transpose invariant, row-sum sandwich") {
  oracle::Rng rng(32);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = rng.index(1, 6);
    const auto a = rng.matrix(n);
    Eigen::MatrixXd bump = a.dense();
    for (Eigen::Index i = 0; i < bump.size(); ++i) bump.data()[i] += rng.coin(0.5) ? rng.real(0, 2) : 0;
    const auto b = Matrix::validate(bump);
    const auto ra = rho(a, kTol);
    CHECK(ra.value <= rho(b, kTol).value + 2 * kTol * oracle::scale_of(ra.value));

    const double c = rng.real(0.1, 10);
    const auto scaled = Matrix::validate(a.dense() * c);
    CHECK(std::abs(rho(scaled, kTol).value - c * ra.value) <= 2 * kTol * c * oracle::scale_of(ra.value));

    CHECK(std::abs(rho(transpose(a), kTol).value - ra.value) <= 2 * kTol * oracle::scale_of(ra.value));

    CHECK(min_row_sum(a) - kTol <= ra.value);
    CHECK(ra.value <= max_row_sum(a) + kTol * oracle::scale_of(ra.value));
  }
}

TEST_CASE("engines agree; at n = 2 both contain the closed form") {
  oracle::Rng rng(33);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = rng.index(2, 6);
    const auto m = rng.matrix(n, 0.3);
    const auto p = rho_power(m, kTol);
    const auto g = rho_gelfand(m, kTol);
    const double slack = 1e-12 * std::max(1.0, p.upper);
    CHECK(std::max(p.lower, g.lower) <= std::min(p.upper, g.upper) + slack);
    if (n == 2) {
      const double closed = rho_2x2(m);
      CHECK(contains(p, closed));
      CHECK(contains(g, closed));
    }
  }
}

TEST_CASE("spectral engine is generic over the scalar type") {
  using M = NonnegativeMatrix<long double>;
  const auto m = M::from_rows({{1, 3, 2}, {5, 1, 1}, {2, 4, 3}});
  const auto e = rho(m, 1e-14L);
  CHECK(e.converged);
  CHECK(static_cast<double>(e.value) == doctest::Approx(oracle::spectral_radius(Matrix::from_rows({{1, 3, 2}, {5, 1, 1}, {2, 4, 3}}))).epsilon(1e-12));
}
