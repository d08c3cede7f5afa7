#pragma once

// Truncated complex power series and the weighted coefficient sums built on
// them. A series stores c_0..c_N; `kind` records whether c_k is the Taylor
// coefficient b_k of F or the z^k coefficient of F'.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "bloch/constants.hpp"
#include "bloch/errors.hpp"

namespace bloch {

using complex = std::complex<double>;

enum class SeriesKind { function, derivative };

enum class RadialWeight {
  r2k,          ///< k^p |b_k|^2 r^{2k}
  r2k_minus_2,  ///< k^p |b_k|^2 r^{2k-2}
};

class CoefficientSeries {
 public:
  CoefficientSeries(std::vector<complex> coeffs, SeriesKind kind)
      : coeffs_(std::move(coeffs)), kind_(kind) {
    detail::require(!coeffs_.empty(), "CoefficientSeries: at least one coefficient required");
    for (const auto& c : coeffs_) {
      detail::require(std::isfinite(c.real()) && std::isfinite(c.imag()),
                      "CoefficientSeries: non-finite coefficient");
    }
  }

  /// Zero series of the given order.
  static CoefficientSeries zeros(std::size_t order, SeriesKind kind) {
    return CoefficientSeries(std::vector<complex>(order + 1), kind);
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  SeriesKind kind() const noexcept { return kind_; }
  const std::vector<complex>& coeffs() const noexcept { return coeffs_; }
  const complex& operator[](std::size_t k) const { return coeffs_[k]; }

  /// Horner evaluation at z.
  complex operator()(complex z) const {
    complex acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

 private:
  std::vector<complex> coeffs_;
  SeriesKind kind_;
};

/// Coefficients of F' from those of F: entry k is (k+1) c_{k+1}.
inline CoefficientSeries derivative_series(const CoefficientSeries& f) {
  detail::require(f.kind() == SeriesKind::function, "derivative_series: expects a function series");
  if (f.order() == 0) return CoefficientSeries::zeros(0, SeriesKind::derivative);
  std::vector<complex> out(f.order());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = static_cast<double>(k + 1) * f[k + 1];
  return CoefficientSeries(std::move(out), SeriesKind::derivative);
}

/// Antiderivative with prescribed constant term: entry k = g_{k-1} / k.
inline CoefficientSeries integrate_series(const CoefficientSeries& g, complex c0) {
  std::vector<complex> out(g.order() + 2);
  out[0] = c0;
  for (std::size_t k = 1; k < out.size(); ++k) out[k] = g[k - 1] / static_cast<double>(k);
  return CoefficientSeries(std::move(out), SeriesKind::function);
}

/// sum_{k=k_min}^{N} k^p |b_k|^2 r^{2k} (or r^{2k-2}).
inline double weighted_power_sum(const CoefficientSeries& s, int p, double r, RadialWeight weight,
                                 std::size_t k_min = 1) {
  detail::require(s.kind() == SeriesKind::function, "weighted_power_sum: expects b_k (function series)");
  detail::require(p == 1 || p == 2, "weighted_power_sum: p must be 1 or 2");
  detail::require(r >= 0.0 && r < 1.0, "weighted_power_sum: r must lie in [0, 1)");
  detail::require(k_min >= 1, "weighted_power_sum: k_min must be >= 1");
  const double r2 = r * r;
  double w = std::pow(r2, static_cast<double>(weight == RadialWeight::r2k ? k_min : k_min - 1));
  double sum = 0.0;
  for (std::size_t k = k_min; k <= s.order() && w > 0.0; ++k, w *= r2) {
    const double kk = static_cast<double>(k);
    sum += (p == 2 ? kk * kk : kk) * std::norm(s[k]) * w;
  }
  return sum;
}

/// Mean of |s(r e^{i theta})|^2 over M equispaced angles.
///
/// |s|^2 on the circle is a trigonometric polynomial of degree <= order, so
/// the periodic trapezoid rule is exact once M exceeds twice the order.
inline double circle_mean_square(const CoefficientSeries& s, double r, std::size_t M) {
  detail::require(s.kind() == SeriesKind::derivative, "circle_mean_square: expects a derivative series");
  detail::require(M >= 2 * s.order() + 2,
                  "circle_mean_square: M=" + std::to_string(M) + " below exactness threshold " +
                      std::to_string(2 * s.order() + 2));
  double acc = 0.0;
  for (std::size_t j = 0; j < M; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(M);
    acc += std::norm(s(std::polar(r, theta)));
  }
  return acc / static_cast<double>(M);
}

namespace detail {

// sum_{j>=0} j^i q^j for i = 0..4 (Eulerian-polynomial closed forms).
inline std::array<double, 5> power_geometric_sums(double q) {
  const double d = 1.0 - q;
  return {1.0 / d,
          q / (d * d),
          q * (1.0 + q) / (d * d * d),
          q * (1.0 + 4.0 * q + q * q) / (d * d * d * d),
          q * (1.0 + 11.0 * q + 11.0 * q * q + q * q * q) / (d * d * d * d * d)};
}

}  // namespace detail

/// Upper bound for sum_{k>N} k^p |A_k|^2 r^{2k}, A_k the coefficients of the
/// boundary family at parameter x.
///
/// For k >= 3, |A_k| <= (a/2) k x^{k-3}, so each term is at most
/// (a^2 / 4x^6) k^{p+2} q^k with q = (xr)^2, and the tail of sum k^m q^k is
/// q^{N+1} sum_i C(m,i) (N+1)^{m-i} sum_j j^i q^j in closed form.
inline double tail_majorant_extremal(double x, double r, int p, std::size_t N) {
  detail::require(x > 0.0 && x < constants::inv_sqrt3, "tail_majorant_extremal: x must lie in (0, 1/sqrt3)");
  detail::require(r >= 0.0 && r < 1.0, "tail_majorant_extremal: r must lie in [0, 1)");
  detail::require(p == 1 || p == 2, "tail_majorant_extremal: p must be 1 or 2");
  detail::require(N >= 2, "tail_majorant_extremal: N must be >= 2");
  const double q = (x * r) * (x * r);
  detail::require(q < 1.0, "tail_majorant_extremal: (xr)^2 must be < 1");
  if (q == 0.0) return 0.0;

  const double a = 1.5 * constants::sqrt3 * x * (1.0 - x * x);
  const int m = p + 2;
  const auto li = detail::power_geometric_sums(q);
  const double n1 = static_cast<double>(N + 1);
  constexpr std::array<std::array<double, 5>, 5> binom{{{1, 0, 0, 0, 0},
                                                         {1, 1, 0, 0, 0},
                                                         {1, 2, 1, 0, 0},
                                                         {1, 3, 3, 1, 0},
                                                         {1, 4, 6, 4, 1}}};
  double shifted = 0.0;
  for (int i = 0; i <= m; ++i) shifted += binom[m][i] * std::pow(n1, m - i) * li[i];

  // q^{N+1} / x^6 = x^{2N-4} r^{2N+2}, computed in log space to avoid 0/0.
  const double log_scale = (2.0 * static_cast<double>(N) - 4.0) * std::log(x) +
                           (2.0 * static_cast<double>(N) + 2.0) * std::log(r);
  return 0.25 * a * a * std::exp(log_scale) * shifted;
}

}  // namespace bloch
