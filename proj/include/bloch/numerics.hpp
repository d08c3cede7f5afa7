#pragma once

// Scalar kernel: bisection, sign-change scanning, golden-section maximization
// and composite trapezoid quadrature.

#include <cmath>
#include <concepts>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bloch/errors.hpp"

namespace bloch::numerics {

template <typename F>
concept ScalarFunction = requires(F f, double x) {
  { f(x) } -> std::convertible_to<double>;
};

struct RootResult {
  double root = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Bisection on [lo, hi]. Stops once the bracket is narrower than `tol`, or
/// as soon as |f(mid)| <= ftol when ftol > 0.
template <ScalarFunction F>
RootResult bisect(F&& f, double lo, double hi, double tol, int max_iter = 200, double ftol = 0.0) {
  detail::require(tol > 0.0, "bisect: tol must be positive");
  detail::require(lo < hi, "bisect: need lo < hi");
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return {lo, lo, lo, 0.0, 0, true};
  if (fhi == 0.0) return {hi, hi, hi, 0.0, 0, true};
  if ((flo < 0.0) == (fhi < 0.0)) {
    throw NotBracketed("bisect: no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }

  RootResult res;
  res.lo = lo;
  res.hi = hi;
  double mid = 0.5 * (lo + hi);
  double fmid = f(mid);
  while (res.iterations < max_iter) {
    ++res.iterations;
    if (fmid == 0.0 || (ftol > 0.0 && std::abs(fmid) <= ftol)) {
      res.converged = true;
      break;
    }
    if ((fmid < 0.0) == (flo < 0.0)) {
      res.lo = mid;
      flo = fmid;
    } else {
      res.hi = mid;
    }
    if (res.hi - res.lo <= tol) {
      res.converged = true;
      mid = 0.5 * (res.lo + res.hi);
      fmid = f(mid);
      break;
    }
    const double next = 0.5 * (res.lo + res.hi);
    if (next == res.lo || next == res.hi) {
      // bracket at machine resolution
      res.converged = true;
      break;
    }
    mid = next;
    fmid = f(mid);
  }
  res.root = mid;
  res.residual = fmid;
  return res;
}

struct Bracket {
  double lo;
  double hi;
};

/// Every adjacent pair of an equispaced `steps`-point grid on [lo, hi] where f
/// changes sign. A grid point where f vanishes exactly is returned as a
/// degenerate bracket. Finding no further bracket only rules out extra sign
/// changes at this resolution.
template <ScalarFunction F>
std::vector<Bracket> sign_changes(F&& f, double lo, double hi, std::size_t steps) {
  detail::require(steps >= 2, "sign_changes: steps must be >= 2");
  std::vector<Bracket> out;
  const double h = (hi - lo) / static_cast<double>(steps - 1);
  double x_prev = lo;
  double f_prev = f(lo);
  for (std::size_t i = 1; i < steps; ++i) {
    const double x = (i + 1 == steps) ? hi : lo + h * static_cast<double>(i);
    const double fx = f(x);
    if (f_prev * fx < 0.0) {
      out.push_back({x_prev, x});
    } else if (fx == 0.0 && f_prev != 0.0 && i + 1 < steps) {
      out.push_back({x, x});
    }
    x_prev = x;
    f_prev = fx;
  }
  return out;
}

/// Golden-section maximizer. Correct for unimodal f; otherwise returns some
/// local maximum, so callers pair it with a grid pre-scan.
template <ScalarFunction F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, double tol) {
  detail::require(lo <= hi, "golden_max: need lo <= hi");
  detail::require(tol > 0.0, "golden_max: tol must be positive");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  double arg = 0.5 * (a + b);
  double val = f(arg);
  // the interior estimate cannot see a maximum sitting exactly on an endpoint
  for (const double e : {lo, hi}) {
    const double fe = f(e);
    if (fe > val && std::abs(e - arg) <= 2.0 * tol) {
      arg = e;
      val = fe;
    }
  }
  return {arg, val};
}

/// Composite trapezoid rule with M subintervals.
template <ScalarFunction F>
double trapezoid(F&& f, double lo, double hi, std::size_t M) {
  detail::require(M >= 2, "trapezoid: M must be >= 2");
  const double h = (hi - lo) / static_cast<double>(M);
  double acc = 0.5 * (f(lo) + f(hi));
  for (std::size_t i = 1; i < M; ++i) acc += f(lo + h * static_cast<double>(i));
  return acc * h;
}

}  // namespace bloch::numerics
