#pragma once

// Closed-form right-hand sides of the coefficient inequalities and the named
// constants that delimit their radius intervals. Every bound refuses
// arguments outside the interval on which it is claimed.

#include <cmath>
#include <string>
#include <string_view>
#include <utility>

#include "bloch/constants.hpp"
#include "bloch/errors.hpp"
#include "bloch/families.hpp"

namespace bloch {

enum class BoundId { basic, prop1, thm1_B, thm1_B2, thm2, thm3, cor1, cor2, thm5 };

inline std::string_view to_string(BoundId id) {
  switch (id) {
    case BoundId::basic: return "basic";
    case BoundId::prop1: return "prop1";
    case BoundId::thm1_B: return "thm1_B";
    case BoundId::thm1_B2: return "thm1_B2";
    case BoundId::thm2: return "thm2";
    case BoundId::thm3: return "thm3";
    case BoundId::cor1: return "cor1";
    case BoundId::cor2: return "cor2";
    case BoundId::thm5: return "thm5";
  }
  return "?";
}

inline BoundId bound_id_from_string(std::string_view s) {
  for (auto id : {BoundId::basic, BoundId::prop1, BoundId::thm1_B, BoundId::thm1_B2, BoundId::thm2,
                  BoundId::thm3, BoundId::cor1, BoundId::cor2, BoundId::thm5}) {
    if (to_string(id) == s) return id;
  }
  throw InvalidArgument("unknown bound id '" + std::string(s) + "'");
}

namespace detail {

inline bool within(double v, double lo, double hi) {
  return v >= lo - constants::interval_eps && v <= hi + constants::interval_eps;
}

inline std::string interval_text(double lo, double hi) {
  return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

}  // namespace detail

/// Parseval majorant 1/(1-r^2)^2.
inline double bound_basic(double r) {
  detail::require(r >= 0.0 && r < 1.0, "bound_basic: r must lie in [0, 1)");
  const double d = 1.0 - r * r;
  return 1.0 / (d * d);
}

/// r_n = sqrt(n/(n+2)).
inline double r_star(int n) {
  detail::require(n >= 1, "r_star: n must be >= 1");
  return std::sqrt(static_cast<double>(n) / static_cast<double>(n + 2));
}

/// ((n+2)^{n+2} / (4 n^n)) r^{2n}, valid for 0 <= r <= r_n.
inline double bound_prop1(int n, double r) {
  detail::require(n >= 1, "bound_prop1: n must be >= 1");
  detail::require(detail::within(r, 0.0, r_star(n)),
                  "bound_prop1: r outside " + detail::interval_text(0.0, r_star(n)));
  const double nn = n;
  // (n+2)^{n+2} / (4 n^n) = ((n+2)^2 / 4) ((n+2)/n)^n
  const double c = 0.25 * (nn + 2.0) * (nn + 2.0) * std::pow((nn + 2.0) / nn, nn);
  return c * std::pow(r * r, nn);
}

/// Largest radius at which the boundary-family bounds are claimed:
/// (1/sqrt3 - x) / (1 - x/sqrt3).
inline double r_admissible(double x) {
  detail::require(detail::within(x, 0.0, constants::inv_sqrt3), "r_admissible: x must lie in [0, 1/sqrt3]");
  return std::max(0.0, (constants::inv_sqrt3 - x) / (1.0 - x * constants::inv_sqrt3));
}

namespace detail {

inline void require_thm1_domain(double x, double r, const char* who) {
  require(x > 0.0 && x < constants::inv_sqrt3, std::string(who) + ": x must lie in (0, 1/sqrt3)");
  require(r >= 0.0 && r <= r_admissible(x) + constants::interval_eps,
          std::string(who) + ": r outside admissible radius " + interval_text(0.0, r_admissible(x)));
}

// Closed forms without domain checks; the sharpness scans evaluate the
// family's own sums beyond the admissible radius, where these identities
// still hold for G_x.
inline double thm1_B_raw(double x, double r) {
  const double x2 = x * x, r2 = r * r;
  const double d = 1.0 - r2 * x2;
  const double num = (r2 + x2) * d * d - 6.0 * r2 * x2 * (1.0 - x2) * (1.0 - r2);
  return 27.0 * r2 * (1.0 - x2) * (1.0 - x2) * num / (4.0 * std::pow(d, 5));
}

inline double thm1_B2_raw(double x, double r) {
  const double x2 = x * x, r2 = r * r;
  const double d = 1.0 - r2 * x2;
  const double num = 3.0 * x2 * (1.0 - r2) * (1.0 - r2) + d * (r2 - x2);
  return 27.0 * r2 * (1.0 - x2) * (1.0 - x2) * num / (8.0 * std::pow(d, 4));
}

}  // namespace detail

/// Sharp majorant of sum k^2 |b_k|^2 r^{2k} for |b1| = a(x).
inline double bound_thm1_B(double x, double r) {
  detail::require_thm1_domain(x, r, "bound_thm1_B");
  return detail::thm1_B_raw(x, r);
}

/// Sharp majorant of the area functional sum k |b_k|^2 r^{2k} for |b1| = a(x).
inline double bound_thm1_B2(double x, double r) {
  detail::require_thm1_domain(x, r, "bound_thm1_B2");
  return detail::thm1_B2_raw(x, r);
}

/// B_a(r) = (3 (9-4a^2)^2 / (64 a^4)) (-log(1-w) - w), w = 4a^2 r^2 / 3.
inline double bound_cor1(double a, double r) {
  detail::require(a > 0.0 && a < 1.0, "bound_cor1: a must lie in (0, 1)");
  detail::require(detail::within(r, 0.0, constants::inv_sqrt3),
                  "bound_cor1: r outside " + detail::interval_text(0.0, constants::inv_sqrt3));
  const double w = 4.0 * a * a * r * r / 3.0;
  detail::require(w < 1.0, "bound_cor1: 4a^2r^2/3 must be < 1");
  const double c = 9.0 - 4.0 * a * a;
  return 3.0 * c * c / (64.0 * std::pow(a, 4)) * (-std::log1p(-w) - w);
}

/// Radius interval on which thm_rhs(id, .) is claimed.
inline std::pair<double, double> validity_interval(BoundId id) {
  switch (id) {
    case BoundId::thm2: return {constants::thm2_lower, constants::inv_sqrt3};
    case BoundId::thm3: return {constants::thm3_lower, constants::inv_sqrt3};
    case BoundId::cor2: return {0.0, constants::inv_sqrt3};
    case BoundId::thm5: return {constants::sharp_R, constants::inv_sqrt3};
    default: throw InvalidArgument("validity_interval: '" + std::string(to_string(id)) + "' has no r^4 form");
  }
}

/// 27/4 r^4 (thm2, thm3) or 27/8 r^4 (cor2, thm5).
inline double thm_rhs(BoundId id, double r) {
  const auto [lo, hi] = validity_interval(id);
  detail::require(detail::within(r, lo, hi),
                  "thm_rhs(" + std::string(to_string(id)) + "): r outside " + detail::interval_text(lo, hi));
  const double c = (id == BoundId::thm2 || id == BoundId::thm3) ? 27.0 / 4.0 : 27.0 / 8.0;
  return c * std::pow(r, 4);
}

/// -4 - y + 81y^2 + 642y^3 - 564y^4 + 1188y^5 - 82y^6 - 5809y^7 + 4581y^8.
inline double critical_poly(double y) {
  constexpr double c[] = {-4, -1, 81, 642, -564, 1188, -82, -5809, 4581};
  double acc = 0.0;
  for (int i = 8; i >= 0; --i) acc = acc * y + c[i];
  return acc;
}

}  // namespace bloch
