#pragma once

// Explicit extremal families of the Bloch class and the boundary
// parametrization of its (b1, b2) coefficient region.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "bloch/constants.hpp"
#include "bloch/errors.hpp"
#include "bloch/numerics.hpp"
#include "bloch/series.hpp"

namespace bloch {

/// Boundary point of the coefficient region: |b1| = a(x), maximal |b2| = b2max(x).
struct ExtremalParameter {
  double x;
  double a;
  double b2max;
};

inline double a_of_x(double x) {
  detail::require(x >= 0.0 && x <= constants::inv_sqrt3 + constants::interval_eps,
                  "a_of_x: x must lie in [0, 1/sqrt3]");
  return 1.5 * constants::sqrt3 * x * (1.0 - x * x);
}

inline double b2max_of_x(double x) {
  detail::require(x >= 0.0 && x <= constants::inv_sqrt3 + constants::interval_eps,
                  "b2max_of_x: x must lie in [0, 1/sqrt3]");
  return 0.75 * constants::sqrt3 * (1.0 - 3.0 * x * x) * (1.0 - x * x);
}

inline ExtremalParameter extremal_parameter(double x) { return {x, a_of_x(x), b2max_of_x(x)}; }

/// Inverse of a_of_x on (0, 1/sqrt3), by bisection (a_of_x is increasing).
inline double x_of_a(double a, double tol = 1e-14) {
  detail::require(a > 0.0 && a < 1.0, "x_of_a: a must lie in (0, 1)");
  auto res = numerics::bisect([a](double x) { return a_of_x(x) - a; }, 0.0, constants::inv_sqrt3,
                              1e-17, 400, tol);
  return res.root;
}

namespace detail {

inline void require_guarded_x(double x, const char* who) {
  require(x >= constants::x_guard && x <= constants::inv_sqrt3 - constants::x_guard,
          std::string(who) + ": x must lie in [1e-6, 1/sqrt3 - 1e-6]");
}

}  // namespace detail

/// G'_x(z) = -(a/x)(z-x)/(1-zx)^3 = sum_k k A_k z^{k-1}, through order N.
///
/// A_1 = a, A_2 = (a/2)(3x^2-1)/x and A_k = (a/2) x^{k-3} (2x^2 + (k-1)(x^2-1)).
inline CoefficientSeries g_prime_coeffs(double x, std::size_t N) {
  detail::require_guarded_x(x, "g_prime_coeffs");
  const double a = a_of_x(x);
  std::vector<complex> out(N + 1);
  out[0] = a;
  if (N >= 1) out[1] = 2.0 * (0.5 * a * (3.0 * x * x - 1.0) / x);
  double xp = 1.0;  // x^{k-3}
  for (std::size_t k = 3; k <= N + 1; ++k) {
    const double kk = static_cast<double>(k);
    const double A_k = 0.5 * a * xp * (2.0 * x * x + (kk - 1.0) * (x * x - 1.0));
    out[k - 1] = kk * A_k;
    xp *= x;
  }
  return CoefficientSeries(std::move(out), SeriesKind::derivative);
}

/// Same series by multiplying -(a/x)(z - x) into the binomial expansion
/// (1 - xz)^{-3} = sum_m C(m+2, 2) x^m z^m.
inline CoefficientSeries rational_expand_g(double x, std::size_t N) {
  detail::require_guarded_x(x, "rational_expand_g");
  const double a = a_of_x(x);
  auto binom_term = [x](std::size_t m) {
    const double mm = static_cast<double>(m);
    return 0.5 * (mm + 1.0) * (mm + 2.0) * std::pow(x, mm);
  };
  std::vector<complex> out(N + 1);
  for (std::size_t j = 0; j <= N; ++j) {
    double c = a * binom_term(j);               // (a) * z^0 part
    if (j >= 1) c -= (a / x) * binom_term(j - 1);  // -(a/x) * z part
    out[j] = c;
  }
  return CoefficientSeries(std::move(out), SeriesKind::derivative);
}

/// F'_n(z) = ((n+2)/2) ((n+2)/n)^{n/2} z^n, extremal for the tail bound.
inline CoefficientSeries f_n_prime(int n) {
  detail::require(n >= 1, "f_n_prime: n must be >= 1");
  const double nn = n;
  std::vector<complex> out(static_cast<std::size_t>(n) + 1);
  out[static_cast<std::size_t>(n)] = 0.5 * (nn + 2.0) * std::pow((nn + 2.0) / nn, 0.5 * nn);
  return CoefficientSeries(std::move(out), SeriesKind::derivative);
}

/// H(z) = (3/2)(z + 2a/3)/(1 + (2a/3) z), the disc automorphism majorant
/// of F'(z/sqrt3) when F'(0) = a.
inline CoefficientSeries h_series(double a, std::size_t N) {
  detail::require(a > 0.0 && a < 1.0, "h_series: a must lie in (0, 1)");
  std::vector<complex> out(N + 1);
  out[0] = a;
  const double lead = 1.5 * (9.0 - 4.0 * a * a) / 9.0;
  const double ratio = -2.0 * a / 3.0;
  double pw = 1.0;
  for (std::size_t k = 2; k <= N + 1; ++k) {
    out[k - 1] = lead * pw;
    pw *= ratio;
  }
  return CoefficientSeries(std::move(out), SeriesKind::derivative);
}

/// max over a polar grid of (1 - r^2)|F'(r e^{i theta})|.
///
/// Radii are i / r_nodes for i = 0..r_nodes-1. Only a necessary condition for
/// membership: a truncated series can understate the function near |z| = 1.
inline double bloch_membership_scan(const CoefficientSeries& s, std::size_t r_nodes,
                                    std::size_t theta_nodes) {
  detail::require(s.kind() == SeriesKind::derivative, "bloch_membership_scan: expects a derivative series");
  detail::require(r_nodes >= 8 && theta_nodes >= 8, "bloch_membership_scan: need at least 8 nodes per axis");
  double worst = 0.0;
  for (std::size_t i = 0; i < r_nodes; ++i) {
    const double r = static_cast<double>(i) / static_cast<double>(r_nodes);
    for (std::size_t j = 0; j < theta_nodes; ++j) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(theta_nodes);
      worst = std::max(worst, (1.0 - r * r) * std::abs(s(std::polar(r, theta))));
    }
  }
  return worst;
}

inline bool membership_consistent(const CoefficientSeries& s, std::size_t r_nodes, std::size_t theta_nodes,
                                  double tol) {
  return bloch_membership_scan(s, r_nodes, theta_nodes) <= 1.0 + tol;
}

}  // namespace bloch
