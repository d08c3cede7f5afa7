#pragma once

#include <cmath>

namespace bloch::constants {

inline const double sqrt3 = std::sqrt(3.0);
inline const double sqrt65 = std::sqrt(65.0);
inline const double sqrt2713 = std::sqrt(2713.0);

/// Right end of every interval in the coefficient inequalities, 1/sqrt(3).
inline const double inv_sqrt3 = 1.0 / sqrt3;

/// Lower end of the radius interval for the 27/4 r^4 bound on the full class.
inline const double thm2_lower = std::sqrt(4.0 / 15.0);

/// Lower end for the restricted class (extra condition at |z| = 1/sqrt(3)).
inline const double thm3_lower = std::sqrt((9.0 - sqrt65) / 6.0);

/// Sharp radius for (1-|b1|^2) * area functional <= 27/8 r^4.
inline const double sharp_R = std::sqrt(59.0 - sqrt2713) / (4.0 * sqrt3);

/// Slack admitted on interval endpoints so that constants computed through
/// different expressions (sqrt(1/3) vs 1/sqrt(3)) are not rejected.
inline constexpr double interval_eps = 1e-14;

/// Default noise floor for "<=" checks: slack >= -default_tol * (1 + |rhs|).
inline constexpr double default_tol = 1e-10;

inline constexpr int default_truncation = 256;

/// Guard band keeping the boundary parameter away from 0 and 1/sqrt(3).
inline constexpr double x_guard = 1e-6;

}  // namespace bloch::constants
