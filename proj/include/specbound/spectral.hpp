#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "specbound/matrix.hpp"

namespace specbound {

/// Enclosure lower <= rho <= upper with a point value at its midpoint.
/// `vector` is the positive test vector behind the enclosure (the Perron
/// vector for closed-form results when it is strictly positive).
template <typename Scalar>
struct RhoEstimate {
  Scalar value{0};
  Scalar lower{0};
  Scalar upper{0};
  int iterations = 0;
  std::vector<Scalar> vector;
  bool converged = false;

  Scalar width() const { return upper - lower; }
};

template <typename Scalar>
struct SpectralDefaults {
  static constexpr Scalar tol = Scalar(1e-10);
  static constexpr int max_iters = 100000;
  static constexpr int max_squarings = 40;
};

namespace detail {

template <typename Scalar>
bool within(Scalar lower, Scalar upper, Scalar tol) {
  return upper - lower <= tol * std::max(Scalar(1), upper);
}

template <typename Scalar>
std::vector<Scalar> uniform_vector(std::size_t n) {
  return std::vector<Scalar>(n, Scalar(1) / static_cast<Scalar>(n));
}

}  // namespace detail

/// Power iteration on M + I from the uniform start. Each step produces the
/// Collatz-Wielandt enclosure of rho(M + I), shifted back by one. The lower
/// end is also taken over the leading support of the iterate (components
/// within a relative threshold of the largest, the rest zeroed), which is
/// still a valid bound for nonnegative vectors and lets reducible matrices
/// converge.
template <typename Scalar>
RhoEstimate<Scalar> rho_power(const NonnegativeMatrix<Scalar>& m,
                              Scalar tol = SpectralDefaults<Scalar>::tol,
                              int max_iters = SpectralDefaults<Scalar>::max_iters) {
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  const auto n = m.dense().rows();
  const Dense<Scalar> shifted = m.dense() + Dense<Scalar>::Identity(n, n);
  // Floor keeps the iterate strictly positive once slow components underflow.
  const Scalar floor = std::numeric_limits<Scalar>::min() * Scalar(1e16);
  static constexpr std::array<double, 4> thresholds{0.0, 1e-4, 1e-8, 1e-12};

  auto support_lower = [&](const Vec& x, const Vec& y) {
    Scalar best = 0;
    const Scalar top = x.maxCoeff();
    for (double theta : thresholds) {
      const Scalar cut = static_cast<Scalar>(theta) * top;
      Vec z = x;
      for (Eigen::Index i = 0; i < n; ++i)
        if (z(i) < cut) z(i) = 0;
      const Vec w = theta == 0.0 ? y : Vec(shifted * z);
      Scalar low = std::numeric_limits<Scalar>::infinity();
      for (Eigen::Index i = 0; i < n; ++i)
        if (z(i) > 0) low = std::min(low, w(i) / z(i));
      best = std::max(best, low - Scalar(1));
    }
    return best;
  };

  Vec x = Vec::Constant(n, Scalar(1) / static_cast<Scalar>(n));
  RhoEstimate<Scalar> est;
  Scalar best_lower = 0;
  Scalar best_upper = std::numeric_limits<Scalar>::infinity();
  for (int it = 1; it <= max_iters; ++it) {
    const Vec y = shifted * x;
    const Vec ratio = y.cwiseQuotient(x);
    // Every positive x gives a valid enclosure, so keep the tightest seen.
    best_lower = std::max(best_lower, support_lower(x, y));
    best_upper = std::min(best_upper, ratio.maxCoeff() - Scalar(1));
    est.iterations = it;
    x = y / y.sum();
    x = x.cwiseMax(floor);
    if (detail::within(best_lower, best_upper, tol)) {
      est.converged = true;
      break;
    }
  }
  est.lower = std::min(best_lower, best_upper);
  est.upper = std::max(best_upper, best_lower);
  est.value = std::max(Scalar(0), (est.lower + est.upper) / Scalar(2));
  est.vector.assign(x.data(), x.data() + n);
  return est;
}

/// Gelfand-formula engine. Squares a rescaled copy of M, tracking the scale
/// in log space; after m squarings (k = 2^m) the min/max row sums of M^k
/// give (min)^(1/k) <= rho <= (max)^(1/k); the largest diagonal entry of
/// M^k is a second lower bound. Independent of rho_power.
template <typename Scalar>
RhoEstimate<Scalar> rho_gelfand(const NonnegativeMatrix<Scalar>& m,
                                Scalar tol = SpectralDefaults<Scalar>::tol,
                                int max_squarings = SpectralDefaults<Scalar>::max_squarings) {
  RhoEstimate<Scalar> est;
  const auto n = m.dense().rows();
  est.vector = detail::uniform_vector<Scalar>(static_cast<std::size_t>(n));

  auto zero_result = [&](int iterations) {
    est.value = est.lower = est.upper = Scalar(0);
    est.iterations = iterations;
    est.converged = true;
    return est;
  };

  const auto raw = m.dense().rowwise().sum().eval();
  const Scalar top = raw.maxCoeff();
  if (top == Scalar(0)) return zero_result(0);
  if (raw.minCoeff() == top) {
    // Constant row sums: the row sum is rho exactly.
    est.value = est.lower = est.upper = top;
    est.converged = true;
    return est;
  }
  Dense<Scalar> scaled = m.dense() / top;
  Scalar log_scale = std::log(top);  // log of the factor removed from M^k
  Scalar k = 1;

  // Relative error of M^k from floating-point squaring is about k*n*eps
  // componentwise (no cancellation); its k-th root inflates the bounds by
  // about n*eps per squaring.
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  for (int step = 0;; ++step) {
    const auto sums = scaled.rowwise().sum().eval();
    const Scalar lo_sum = sums.minCoeff();
    const Scalar hi_sum = sums.maxCoeff();
    const Scalar slack = Scalar(4) * static_cast<Scalar>(n) * eps * static_cast<Scalar>(step + 1);
    est.upper = std::exp((log_scale + std::log(hi_sum)) / k) * (Scalar(1) + slack);
    const Scalar lo_term = std::max(lo_sum, scaled.diagonal().maxCoeff());
    est.lower = lo_term > Scalar(0)
                    ? std::exp((log_scale + std::log(lo_term)) / k) * (Scalar(1) - slack)
                    : Scalar(0);
    est.iterations = step;
    if (step > 0 && detail::within(est.lower, est.upper, tol)) {
      est.converged = true;
      break;
    }
    if (step == max_squarings) break;

    Dense<Scalar> squared = scaled * scaled;
    const Scalar r = squared.rowwise().sum().maxCoeff();
    if (r == Scalar(0)) return zero_result(step + 1);
    scaled = squared / r;
    log_scale = Scalar(2) * log_scale + std::log(r);
    k *= Scalar(2);
  }
  est.value = std::max(Scalar(0), (est.lower + est.upper) / Scalar(2));
  return est;
}

/// rho of a nonnegative 2x2, tr/2 + sqrt((tr/2)^2 - det), written with the
/// nonnegative discriminant ((a-d)/2)^2 + bc.
template <typename Scalar>
Scalar rho_2x2(Scalar a, Scalar b, Scalar c, Scalar d) {
  const Scalar half_gap = (a - d) / Scalar(2);
  return (a + d) / Scalar(2) + std::sqrt(half_gap * half_gap + b * c);
}

template <typename Scalar>
Scalar rho_2x2(const NonnegativeMatrix<Scalar>& m) {
  return rho_2x2(m(0, 0), m(0, 1), m(1, 0), m(1, 1));
}

/// Dispatch: exact for n = 1, closed form for n = 2, otherwise power
/// iteration, intersecting with the Gelfand enclosure when power iteration
/// hits its cap. Throws EnclosureDisagreement if the two enclosures are
/// disjoint.
template <typename Scalar>
RhoEstimate<Scalar> rho(const NonnegativeMatrix<Scalar>& m,
                        Scalar tol = SpectralDefaults<Scalar>::tol) {
  RhoEstimate<Scalar> est;
  if (m.n() <= 2) {
    const Scalar r = m.n() == 1 ? m(0, 0) : rho_2x2(m);
    est.value = est.lower = est.upper = r;
    est.converged = true;
    est.vector = detail::uniform_vector<Scalar>(m.n());
    if (m.n() == 2) {
      Scalar v0 = m(0, 1);
      Scalar v1 = r - m(0, 0);
      if (v0 <= Scalar(0) || v1 <= Scalar(0)) {
        v0 = r - m(1, 1);
        v1 = m(1, 0);
      }
      if (v0 > Scalar(0) && v1 > Scalar(0)) est.vector = {v0 / (v0 + v1), v1 / (v0 + v1)};
    }
    return est;
  }

  // A short power run settles most inputs; reducible ones whose upper end
  // stalls get the Gelfand enclosure, and a full power run if still wide.
  est = rho_power(m, tol, 2000);
  if (est.converged) return est;

  const auto oracle = rho_gelfand(m, tol);
  auto intersect = [&](const RhoEstimate<Scalar>& a, const RhoEstimate<Scalar>& b) {
    const Scalar lower = std::max(a.lower, b.lower);
    const Scalar upper = std::min(a.upper, b.upper);
    if (lower > upper + tol * std::max(Scalar(1), upper)) {
      throw Error(ErrorKind::EnclosureDisagreement,
                  "power enclosure [" + std::to_string(static_cast<double>(a.lower)) + ", " +
                      std::to_string(static_cast<double>(a.upper)) + "] and Gelfand enclosure [" +
                      std::to_string(static_cast<double>(b.lower)) + ", " +
                      std::to_string(static_cast<double>(b.upper)) + "] are disjoint");
    }
    RhoEstimate<Scalar> out = a;
    out.lower = std::min(lower, upper);
    out.upper = std::max(lower, upper);
    out.value = (out.lower + out.upper) / Scalar(2);
    out.iterations = a.iterations + b.iterations;
    out.converged = detail::within(out.lower, out.upper, tol);
    return out;
  };
  est = intersect(est, oracle);
  if (!est.converged) est = intersect(rho_power(m, tol), oracle);
  return est;
}

}  // namespace specbound
