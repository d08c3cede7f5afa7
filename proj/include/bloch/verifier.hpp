#pragma once

// Certification suites for the coefficient inequalities: Schwarz-composed test
// functions, Rogosinski and Abel dominance checks, polynomial sign checks,
// the three-case replay for the (1-|b1|^2)-weighted area bound, and
// sharpness scans over the boundary family.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bloch/bounds.hpp"
#include "bloch/constants.hpp"
#include "bloch/errors.hpp"
#include "bloch/families.hpp"
#include "bloch/numerics.hpp"
#include "bloch/series.hpp"

namespace bloch {

// ---------------------------------------------------------------------------
// Report types

using ParamList = std::vector<std::pair<std::string, double>>;

enum class Relation {
  le,  ///< lhs <= rhs
  eq,  ///< lhs == rhs
};

/// One checked instance of an inequality or identity.
struct BoundEvaluation {
  std::string bound_id;
  ParamList params;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;             ///< rhs - lhs
  double tail_certificate = 0.0;  ///< rigorous bound on what truncation dropped
  double tolerance = 0.0;         ///< absolute rounding allowance
  Relation relation = Relation::le;

  bool passes() const {
    if (!std::isfinite(slack)) return false;
    const double allowance = tolerance + tail_certificate;
    return relation == Relation::le ? slack >= -allowance : std::abs(slack) <= allowance;
  }
};

/// Relative noise floor: tol * (1 + |rhs|).
inline BoundEvaluation make_evaluation(std::string id, ParamList params, double lhs, double rhs, double tol,
                                       Relation rel = Relation::le, double tail = 0.0) {
  BoundEvaluation e;
  e.bound_id = std::move(id);
  e.params = std::move(params);
  e.lhs = lhs;
  e.rhs = rhs;
  e.slack = rhs - lhs;
  e.tail_certificate = tail;
  e.tolerance = tol * (1.0 + std::abs(rhs));
  e.relation = rel;
  return e;
}

/// A stated property that is not itself an inequality (the location of a
/// maximizer, a printed decimal with no counterpart). Recorded, never gating.
struct Claim {
  std::string name;
  double expected = 0.0;
  double observed = 0.0;
  double tolerance = 0.0;
  bool holds = false;
  std::string note;
};

inline Claim make_claim(std::string name, double expected, double observed, double tol, std::string note = {}) {
  return {std::move(name), expected, observed, tol, std::abs(observed - expected) <= tol, std::move(note)};
}

struct VerdictReport {
  std::string suite_id;
  std::vector<BoundEvaluation> instances;
  std::vector<Claim> claims;
  double worst_slack = std::numeric_limits<double>::infinity();
  bool pass = true;
  std::vector<ParamList> witnesses;

  void add(BoundEvaluation e) {
    worst_slack = std::min(worst_slack, e.slack);
    if (!e.passes()) {
      pass = false;
      ParamList w = e.params;
      w.insert(w.begin(), {"instance", static_cast<double>(instances.size())});
      witnesses.push_back(std::move(w));
    }
    instances.push_back(std::move(e));
  }

  void merge(const VerdictReport& other) {
    for (const auto& e : other.instances) add(e);
    claims.insert(claims.end(), other.claims.begin(), other.claims.end());
  }
};

// ---------------------------------------------------------------------------
// Scan configuration

struct Range {
  double lo;
  double hi;
  std::size_t steps;

  double at(std::size_t i) const {
    if (steps < 2) return lo;
    if (i + 1 == steps) return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }

  bool operator==(const Range&) const = default;
};

inline void validate(const Range& r, const char* what) {
  detail::require(r.steps >= 2, std::string(what) + ": steps must be >= 2");
  detail::require(r.lo < r.hi, std::string(what) + ": need lo < hi");
}

struct ScanGrid {
  Range x_range{constants::x_guard, constants::inv_sqrt3 - constants::x_guard, 2000};
  Range r_range{0.33, constants::inv_sqrt3, 50};
  Range a_range{0.0, 1.0, 1000};
  std::size_t sample_count = 100;
  std::uint64_t seed = 42;
  double tolerance = constants::default_tol;
  std::size_t truncation = constants::default_truncation;
};

// ---------------------------------------------------------------------------
// Schwarz functions and subordination

enum class SchwarzKind { rotation, monomial, blaschke_product };

/// omega(z) = e^{i phase} z^degree                        (rotation: degree 1)
/// omega(z) = e^{i phase} z prod_i (z + c_i)/(1 + conj(c_i) z)  (blaschke_product)
/// Each form has omega(0) = 0 and |omega(z)| <= |z| by construction.
struct SchwarzSpec {
  SchwarzKind kind = SchwarzKind::rotation;
  std::vector<complex> zeros;
  int degree = 1;
  double phase = 0.0;
};

inline void validate(const SchwarzSpec& w) {
  detail::require(std::isfinite(w.phase), "SchwarzSpec: phase must be finite");
  switch (w.kind) {
    case SchwarzKind::rotation:
      detail::require(w.degree == 1 && w.zeros.empty(), "SchwarzSpec: rotation takes no zeros and degree 1");
      break;
    case SchwarzKind::monomial:
      detail::require(w.degree >= 1 && w.zeros.empty(), "SchwarzSpec: monomial needs degree >= 1 and no zeros");
      break;
    case SchwarzKind::blaschke_product:
      for (const auto& c : w.zeros) {
        detail::require(std::isfinite(c.real()) && std::isfinite(c.imag()) && std::abs(c) < 1.0,
                        "SchwarzSpec: Blaschke parameters must satisfy |c| < 1");
      }
      break;
  }
}

namespace detail {

// Truncated product through order N. Skips the known-zero low part of `a`.
inline std::vector<complex> mul_trunc(const std::vector<complex>& a, const std::vector<complex>& b, std::size_t N,
                                      std::size_t a_low = 0, std::size_t b_low = 0) {
  std::vector<complex> out(N + 1);
  for (std::size_t i = a_low; i <= N && i < a.size(); ++i) {
    if (a[i] == 0.0) continue;
    for (std::size_t j = b_low; i + j <= N && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace detail

/// Taylor coefficients of omega through order N.
inline std::vector<complex> omega_series(const SchwarzSpec& w, std::size_t N) {
  validate(w);
  std::vector<complex> out(N + 1);
  const complex rot = std::polar(1.0, w.phase);
  if (w.kind != SchwarzKind::blaschke_product) {
    if (static_cast<std::size_t>(w.degree) <= N) out[static_cast<std::size_t>(w.degree)] = rot;
    return out;
  }
  if (N >= 1) out[1] = rot;
  for (const auto& c : w.zeros) {
    // (z + c)/(1 + conj(c) z) = (z + c) sum_j (-conj(c) z)^j
    std::vector<complex> factor(N + 1);
    const complex m = -std::conj(c);
    complex pw = 1.0;
    for (std::size_t j = 0; j <= N; ++j) {
      factor[j] += c * pw;
      if (j + 1 <= N) factor[j + 1] += pw;
      pw *= m;
    }
    out = detail::mul_trunc(out, factor, N, 1, 0);
  }
  return out;
}

/// Coefficients of base(omega(z)) through order N.
///
/// Since omega has no constant term, omega^j starts at z^j and only
/// base_0..base_N contribute below order N+1.
inline CoefficientSeries make_subordinate(const CoefficientSeries& base, const SchwarzSpec& w, std::size_t N) {
  detail::require(base.kind() == SeriesKind::derivative, "make_subordinate: expects a derivative series");
  detail::require(base.order() >= N, "make_subordinate: base order must be >= N");
  const auto om = omega_series(w, N);
  std::vector<complex> out(N + 1);
  out[0] = base[0];
  std::vector<complex> power = om;  // omega^1
  for (std::size_t j = 1; j <= N; ++j) {
    if (base[j] != 0.0) {
      for (std::size_t k = j; k <= N; ++k) out[k] += base[j] * power[k];
    }
    if (j < N) power = detail::mul_trunc(power, om, N, j, 1);
  }
  return CoefficientSeries(std::move(out), SeriesKind::derivative);
}

/// Random Blaschke-type Schwarz function: 0..3 extra zeros with |c| <= 0.9
/// and a random rotation.
inline SchwarzSpec random_schwarz(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  SchwarzSpec w;
  w.kind = SchwarzKind::blaschke_product;
  w.phase = 2.0 * std::numbers::pi * unit(rng);
  const int m = count(rng);
  for (int i = 0; i < m; ++i) {
    const double rad = 0.9 * std::sqrt(unit(rng));
    w.zeros.push_back(std::polar(rad, 2.0 * std::numbers::pi * unit(rng)));
  }
  w.degree = 1 + m;
  return w;
}

/// A derivative series of a function known to lie in the Bloch class:
/// a boundary-family member or a monomial extremal, composed with a random
/// Schwarz function.
struct BlochSample {
  CoefficientSeries derivative;
  ParamList params;
  double a = 0.0;  ///< |F'(0)|
};

inline BlochSample random_bloch_sample(std::mt19937_64& rng, std::size_t N) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto w = random_schwarz(rng);
  ParamList params{{"schwarz_degree", static_cast<double>(w.degree)}, {"phase", w.phase}};
  if (unit(rng) < 0.75) {
    const double x = 0.02 + 0.54 * unit(rng);
    params.insert(params.begin(), {"x", x});
    return {make_subordinate(g_prime_coeffs(x, N), w, N), std::move(params), a_of_x(x)};
  }
  std::uniform_int_distribution<int> pick(1, 6);
  const int n = pick(rng);
  params.insert(params.begin(), {"monomial_n", static_cast<double>(n)});
  auto base = f_n_prime(n).coeffs();
  base.resize(N + 1);
  return {make_subordinate(CoefficientSeries(std::move(base), SeriesKind::derivative), w, N), std::move(params),
          0.0};
}

/// Coefficients of s(rho z).
inline CoefficientSeries scale_argument(const CoefficientSeries& s, double rho) {
  std::vector<complex> out(s.coeffs());
  double pw = 1.0;
  for (auto& c : out) {
    c *= pw;
    pw *= rho;
  }
  return CoefficientSeries(std::move(out), s.kind());
}

// ---------------------------------------------------------------------------
// Dominance lemmas

/// Partial-sum dominance sum_{k<=n} |f_k|^2 <= sum_{k<=n} |g_k|^2 for every
/// n <= n_max, as implied by f subordinate to g.
inline VerdictReport rogosinski_dominance(const CoefficientSeries& f, const CoefficientSeries& g, std::size_t n_max,
                                          double tol = constants::default_tol) {
  VerdictReport rep;
  rep.suite_id = "rogosinski";
  const std::size_t top = std::min({n_max, f.order(), g.order()});
  double sf = 0.0, sg = 0.0;
  for (std::size_t n = 0; n <= top; ++n) {
    sf += std::norm(f[n]);
    sg += std::norm(g[n]);
    rep.add(make_evaluation("rogosinski", {{"n", static_cast<double>(n)}}, sf, sg, tol));
  }
  return rep;
}

/// sum lambda_k u_k <= sum lambda_k v_k whenever the prefix sums of u are
/// dominated by those of v and lambda is nonincreasing and nonnegative.
/// Violated preconditions throw InvalidArgument; they are not verdicts.
inline VerdictReport abel_weighted_dominance(const std::vector<double>& u, const std::vector<double>& v,
                                             const std::vector<double>& lambda,
                                             double tol = constants::default_tol) {
  detail::require(u.size() == v.size() && u.size() == lambda.size(),
                  "abel_weighted_dominance: u, v, lambda must have equal length");
  double pu = 0.0, pv = 0.0, scale = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    detail::require(std::isfinite(u[k]) && std::isfinite(v[k]) && std::isfinite(lambda[k]),
                    "abel_weighted_dominance: non-finite input");
    pu += u[k];
    pv += v[k];
    scale += std::abs(u[k]) + std::abs(v[k]);
    detail::require(pu <= pv + 1e-12 * (1.0 + scale),
                    "abel_weighted_dominance: prefix dominance fails at index " + std::to_string(k));
    detail::require(lambda[k] >= 0.0, "abel_weighted_dominance: lambda must be nonnegative");
    detail::require(k == 0 || lambda[k] <= lambda[k - 1], "abel_weighted_dominance: lambda must be nonincreasing");
  }
  double lu = 0.0, lv = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    lu += lambda[k] * u[k];
    lv += lambda[k] * v[k];
  }
  VerdictReport rep;
  rep.suite_id = "abel";
  rep.add(make_evaluation("abel", {{"terms", static_cast<double>(u.size())}}, lu, lv, tol));
  return rep;
}

// ---------------------------------------------------------------------------
// Boundary-family sums

/// sum_{k>=1} k^p |A_k|^2 r^{2k} for G_x, truncated at N.
inline double family_power_sum(double x, double r, int p, std::size_t N) {
  const auto F = integrate_series(g_prime_coeffs(x, N), 0.0);
  return weighted_power_sum(F, p, r, RadialWeight::r2k);
}

// ---------------------------------------------------------------------------
// Sharp inequalities with |b1| = a(x), r <= r_admissible(x)

inline VerdictReport verify_thm1(double x, double r, const ScanGrid& grid) {
  detail::require(x > 0.0 && x < constants::inv_sqrt3, "verify_thm1: x must lie in (0, 1/sqrt3)");
  detail::require(r > 0.0 && r <= r_admissible(x) + constants::interval_eps,
                  "verify_thm1: r violates the admissible radius (1/sqrt3 - x)/(1 - x/sqrt3) = " +
                      std::to_string(r_admissible(x)));
  VerdictReport rep;
  rep.suite_id = "thm1";
  const std::size_t N = grid.truncation;
  const double B = bound_thm1_B(x, r);
  const double B2 = bound_thm1_B2(x, r);

  const auto G = integrate_series(g_prime_coeffs(x, N), 0.0);
  rep.add(make_evaluation("thm1_B", {{"x", x}, {"r", r}, {"equality", 1}},
                          weighted_power_sum(G, 2, r, RadialWeight::r2k), B, grid.tolerance, Relation::eq,
                          tail_majorant_extremal(x, r, 2, N)));
  rep.add(make_evaluation("thm1_B2", {{"x", x}, {"r", r}, {"equality", 1}},
                          weighted_power_sum(G, 1, r, RadialWeight::r2k), B2, grid.tolerance, Relation::eq,
                          tail_majorant_extremal(x, r, 1, N)));

  std::mt19937_64 rng(grid.seed);
  const auto base = g_prime_coeffs(x, N);
  for (std::size_t s = 0; s < grid.sample_count; ++s) {
    const auto w = random_schwarz(rng);
    const auto f_prime = make_subordinate(base, w, N);
    const auto F = integrate_series(f_prime, 0.0);
    ParamList p{{"x", x}, {"r", r}, {"sample", static_cast<double>(s)}, {"schwarz_degree", double(w.degree)}};
    rep.add(make_evaluation("thm1_B", p, weighted_power_sum(F, 2, r, RadialWeight::r2k), B, grid.tolerance));
    rep.add(make_evaluation("thm1_B2", p, weighted_power_sum(F, 1, r, RadialWeight::r2k), B2, grid.tolerance));
  }
  return rep;
}

/// Integrating B(x, sqrt u)/u over [0, r^2] recovers B2(x, r). The integrand
/// tends to a^2 as u -> 0; that limit is used at the left endpoint.
inline BoundEvaluation verify_thm1_integral(double x, double r, std::size_t M, double tol = 1e-8) {
  const double a = a_of_x(x);
  auto integrand = [x, a](double u) { return u == 0.0 ? a * a : bound_thm1_B(x, std::sqrt(u)) / u; };
  const double q = numerics::trapezoid(integrand, 0.0, r * r, M);
  auto e = make_evaluation("thm1_integral", {{"x", x}, {"r", r}, {"M", static_cast<double>(M)}}, q,
                           bound_thm1_B2(x, r), 0.0, Relation::eq);
  e.tolerance = tol;
  return e;
}

// ---------------------------------------------------------------------------
// 27/4 r^4 bound on [sqrt(4/15), 1/sqrt3]

/// 1 - 2x^2 + x^4 + r^2(-5 + 16x^2 - 21x^4 + 9x^6).
inline double thm2_sextic(double x, double r) {
  const double s = x * x;
  return 1.0 - 2.0 * s + s * s + r * r * (-5.0 + s * (16.0 + s * (-21.0 + 9.0 * s)));
}

/// (1 - 9r^4)|b1|^2 + (4r^2 - 12r^4)|b2|^2 + 81r^4/4 on the boundary of the
/// coefficient region.
inline double thm2_quadratic_form(double x, double r) {
  const double b1 = a_of_x(x), b2 = b2max_of_x(x);
  const double r2 = r * r, r4 = r2 * r2;
  return (1.0 - 9.0 * r4) * b1 * b1 + (4.0 * r2 - 12.0 * r4) * b2 * b2 + 81.0 * r4 / 4.0;
}

inline VerdictReport verify_thm2(double r, std::size_t x_steps, double tol = constants::default_tol) {
  detail::require(detail::within(r, constants::thm2_lower, constants::inv_sqrt3),
                  "verify_thm2: r outside " + detail::interval_text(constants::thm2_lower, constants::inv_sqrt3));
  detail::require(x_steps >= 2, "verify_thm2: x_steps must be >= 2");
  VerdictReport rep;
  rep.suite_id = "thm2";
  const Range xs{0.0, constants::inv_sqrt3, x_steps};
  const double r2 = r * r;
  const bool at_lower = std::abs(r - constants::thm2_lower) <= constants::interval_eps;
  for (std::size_t i = 0; i < x_steps; ++i) {
    const double x = xs.at(i);
    const double q = thm2_quadratic_form(x, r);
    const double rhs = 27.0 * r2 / 4.0;
    const double P = thm2_sextic(x, r);
    rep.add(make_evaluation("thm2", {{"x", x}, {"r", r}, {"check", 0}}, q, rhs, tol));
    rep.add(make_evaluation("thm2_sextic", {{"x", x}, {"r", r}, {"check", 1}}, P, 0.0, tol));
    rep.add(make_evaluation("thm2_identity", {{"x", x}, {"r", r}, {"check", 2}}, q - rhs,
                            6.75 * (1.0 - 3.0 * r2) * x * x * P, 1e-12, Relation::eq));
    if (at_lower) {
      const double t = 3.0 * x * x - 1.0;
      rep.add(make_evaluation("thm2_factored", {{"x", x}, {"r", r}, {"check", 3}}, P,
                              t * t * (4.0 * x * x - 5.0) / 15.0, 1e-12, Relation::eq));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Restricted class: 27/4 r^4 on [sqrt((9 - sqrt65)/6), 1/sqrt3]

namespace thm3 {

/// Exact surd coefficients of the sextic cofactor of (1 - sqrt3 x)^2, x^1..x^6.
/// The x^3 coefficient carries 9/4 (a printed 9/8 contradicts the printed
/// decimal and the exact division; see `x3_coefficient_as_printed`).
inline std::vector<double> cofactor_coefficients() {
  using constants::sqrt3, constants::sqrt65;
  return {2.25 * sqrt3 * (-73.0 + 9.0 * sqrt65),   1.125 * (-139.0 + 17.0 * sqrt65),
          -2.25 * sqrt3 * (-153.0 + 19.0 * sqrt65), -1.125 * (-395.0 + 49.0 * sqrt65),
          18.0 * sqrt3 * (-8.0 + sqrt65),          27.0 * (-8.0 + sqrt65)};
}

inline double x3_coefficient_as_printed() {
  return -1.125 * constants::sqrt3 * (-153.0 + 19.0 * constants::sqrt65);
}

inline const std::vector<double>& printed_decimals() {
  static const std::vector<double> v{-1.71348, -2.18432, -0.712771, -0.0569584, 1.941, 1.68096};
  return v;
}

inline double cofactor(double x) {
  const auto c = cofactor_coefficients();
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc * x;
}

/// |b1|^2 + 4|b2|^2 t + 9t^2[(3/2 - |b1|)^2 - (4/3)|b2|^2] - 27t/4, t = r^2,
/// on the boundary of the coefficient region.
inline double majorant_excess(double x, double r) {
  const double b1 = a_of_x(x), b2 = b2max_of_x(x);
  const double t = r * r;
  const double d = 1.5 - b1;
  return b1 * b1 + 4.0 * b2 * b2 * t + 9.0 * t * t * (d * d - 4.0 / 3.0 * b2 * b2) - 6.75 * t;
}

/// The expanded degree-8 form at r = sqrt((9 - sqrt65)/6).
inline double expanded(double x) {
  using constants::sqrt3, constants::sqrt65;
  const double inner = 2.0 * sqrt3 * (73.0 - 9.0 * sqrt65) + (-737.0 + 91.0 * sqrt65) * x +
                       2.0 * sqrt3 * (-73.0 + 9.0 * sqrt65) * x * x + (1858.0 - 230.0 * sqrt65) * std::pow(x, 3) +
                       3.0 * (-587.0 + 73.0 * sqrt65) * std::pow(x, 5) - 72.0 * (-8.0 + sqrt65) * std::pow(x, 7);
  return -9.0 * x / 8.0 * inner;
}

inline double factored(double x) {
  const double f = 1.0 - constants::sqrt3 * x;
  return f * f * cofactor(x);
}

}  // namespace thm3

inline VerdictReport verify_thm3(std::size_t x_steps, double tol = constants::default_tol) {
  detail::require(x_steps >= 2, "verify_thm3: x_steps must be >= 2");
  VerdictReport rep;
  rep.suite_id = "thm3";
  const auto coeffs = thm3::cofactor_coefficients();
  const auto& printed = thm3::printed_decimals();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    auto e = make_evaluation("thm3_decimal", {{"power", static_cast<double>(i + 1)}}, coeffs[i], printed[i], 0.0,
                             Relation::eq);
    e.tolerance = 1e-4;
    rep.add(e);
  }
  const double r = constants::thm3_lower;
  // open interval (0, 1/sqrt3)
  for (std::size_t i = 1; i <= x_steps; ++i) {
    const double x = constants::inv_sqrt3 * static_cast<double>(i) / static_cast<double>(x_steps + 1);
    rep.add(make_evaluation("thm3", {{"x", x}, {"check", 0}}, thm3::cofactor(x), 0.0, tol));
    const double direct = thm3::majorant_excess(x, r);
    rep.add(make_evaluation("thm3_expanded", {{"x", x}, {"check", 1}}, thm3::expanded(x), direct, 1e-10,
                            Relation::eq));
    rep.add(make_evaluation("thm3_factored", {{"x", x}, {"check", 2}}, thm3::factored(x), direct, 1e-10,
                            Relation::eq));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Area functional beyond the first coefficient: 27/8 r^4 for r <= 1/sqrt3

/// H_a(w) = (1 - 4a^2/9)^2 (-log(1-w) - w) - w^2/2.
inline double cor2_H(double a, double w) {
  const double c = 1.0 - 4.0 * a * a / 9.0;
  return c * c * (-std::log1p(-w) - w) - 0.5 * w * w;
}

/// -log(1-v) - v - v^2 / (2(1-v)^2).
inline double cor2_reduced(double v) {
  const double d = 1.0 - v;
  return -std::log1p(-v) - v - v * v / (2.0 * d * d);
}

inline VerdictReport verify_cor2(std::size_t a_steps, std::size_t w_steps, double tol = 1e-12) {
  detail::require(a_steps >= 2 && w_steps >= 2, "verify_cor2: steps must be >= 2");
  VerdictReport rep;
  rep.suite_id = "cor2";
  for (std::size_t i = 1; i <= a_steps; ++i) {
    const double a = static_cast<double>(i) / static_cast<double>(a_steps);
    const double v = 4.0 * a * a / 9.0;
    const Range ws{0.0, v, w_steps};
    for (std::size_t j = 0; j < w_steps; ++j) {
      const double w = ws.at(j);
      rep.add(make_evaluation("cor2_H", {{"a", a}, {"w", w}}, cor2_H(a, w), 0.0, tol));
    }
    // substituting w = v turns H_a into (1-v)^2 times the reduced form
    rep.add(make_evaluation("cor2_reduction", {{"a", a}, {"w", v}}, cor2_H(a, v),
                            (1.0 - v) * (1.0 - v) * cor2_reduced(v), 1e-14, Relation::eq));
  }
  const Range vs{0.0, 4.0 / 9.0, w_steps};
  for (std::size_t j = 0; j < w_steps; ++j) {
    rep.add(make_evaluation("cor2_reduced", {{"v", vs.at(j)}}, cor2_reduced(vs.at(j)), 0.0, tol));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// (1 - |b1|^2) sum k |b_k|^2 r^{2k} <= 27/8 r^4 on [R, 1/sqrt3]

namespace thm5 {

/// Small dense polynomial in one variable, ascending powers.
struct Poly {
  std::vector<double> c;

  Poly operator*(const Poly& o) const {
    Poly out{std::vector<double>(c.size() + o.c.size() - 1, 0.0)};
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < o.c.size(); ++j) out.c[i + j] += c[i] * o.c[j];
    return out;
  }
  Poly operator+(const Poly& o) const {
    Poly out{std::vector<double>(std::max(c.size(), o.c.size()), 0.0)};
    for (std::size_t i = 0; i < c.size(); ++i) out.c[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) out.c[i] += o.c[i];
    return out;
  }
  Poly operator*(double s) const {
    Poly out = *this;
    for (auto& v : out.c) v *= s;
    return out;
  }
  double operator()(double s) const {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * s + *it;
    return acc;
  }
};

/// Case-1 excess (1 - a^2) B2(x, r) - 27r^4/8 with the closed form of B2.
inline double case1_excess(double x, double r) {
  const double a = a_of_x(x);
  return (1.0 - a * a) * detail::thm1_B2_raw(x, r) - 27.0 / 8.0 * std::pow(r, 4);
}

/// Coefficients P_0..P_5 (in s = x^2) with
/// case1_excess = -27 r^2 x^4 / (32 (1 - r^2 x^2)^4) * P(x^2),
/// together with the s^0, s^1 remainders that must vanish for the x^4 factor.
struct Case1Expansion {
  Poly P;
  double rem0;
  double rem1;
};

inline Case1Expansion case1_expansion(double r) {
  const double t = r * r;
  const Poly s{{0.0, 1.0}};
  const Poly one{{1.0}};
  const Poly oms = one + s * -1.0;                            // 1 - s
  const Poly a2 = s * oms * oms * 6.75;                       // a^2 = (27/4) s (1-s)^2
  const Poly inner_b2 = s * 2.0 + (one + s * (2.0 * (t - 3.0)) + s * s) * t;
  Poly ots = one + s * -t;                                    // 1 - t s
  Poly ots4 = ots * ots * ots * ots;
  Poly inner = (one + a2 * -1.0) * oms * oms * inner_b2 + ots4 * -t;
  // excess * 8 (1-ts)^4 / (27 t) = inner = -(s^2/4) P(s)
  Case1Expansion out{Poly{{}}, inner.c[0], inner.c[1]};
  for (std::size_t k = 2; k < inner.c.size(); ++k) out.P.c.push_back(-4.0 * inner.c[k]);
  return out;
}

inline const std::vector<double>& case1_printed() {
  static const std::vector<double> v{24.5695, -103.49, 159.036, -99.9262, 16.2316, 3.88886};
  return v;
}

/// (1 - a^2)(a^2 r^2 + ((9 - 4a^2)^2 / 12)(log(1/(1-r^2)) - r^2)).
inline double case2_objective(double a, double r) {
  const double c = 9.0 - 4.0 * a * a;
  const double r2 = r * r;
  return (1.0 - a * a) * (a * a * r2 + c * c / 12.0 * (-std::log1p(-r2) - r2));
}

/// (1 - a^2)(a^2 r^2 + 27 r^4 / 8).
inline double case3_objective(double a, double r) {
  const double r2 = r * r;
  return (1.0 - a * a) * (a * a * r2 + 27.0 / 8.0 * r2 * r2);
}

/// Family left side (1 - a(x)^2) sum_k k |A_k|^2 r^{2k}.
inline double family_lhs(double x, double r, std::size_t N) {
  const double a = a_of_x(x);
  return (1.0 - a * a) * family_power_sum(x, r, 1, N);
}

}  // namespace thm5

namespace detail {

/// Grid pre-scan followed by golden refinement around the best grid cell.
template <numerics::ScalarFunction F>
std::pair<double, double> grid_then_golden(F&& f, const Range& range, double tol) {
  std::size_t best = 0;
  double best_val = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < range.steps; ++i) {
    const double v = f(range.at(i));
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  const double lo = range.at(best == 0 ? 0 : best - 1);
  const double hi = range.at(std::min(best + 1, range.steps - 1));
  auto [arg, val] = numerics::golden_max(f, lo, hi, tol);
  if (best_val > val) return {range.at(best), best_val};
  return {arg, val};
}

}  // namespace detail

inline VerdictReport verify_thm5(const ScanGrid& grid, double r = constants::sharp_R) {
  detail::require(r > 0.0 && r <= constants::inv_sqrt3 + constants::interval_eps,
                  "verify_thm5: r must lie in (0, 1/sqrt3]");
  VerdictReport rep;
  rep.suite_id = "thm5";
  const double tol = grid.tolerance;
  const double rhs = 27.0 / 8.0 * std::pow(r, 4);
  const bool at_R = std::abs(r - constants::sharp_R) <= constants::interval_eps;

  // Case 1: a <= 3/5, handled through the sharp area bound, certified for
  // x <= 1/4 (which contains a <= 3/5) wherever r is admissible.
  const double x_cap = std::min(0.25, r_admissible(std::min(r, constants::inv_sqrt3)));
  if (x_cap > 0.0) {
    const Range xs{0.0, x_cap, grid.x_range.steps};
    for (std::size_t i = 1; i < xs.steps; ++i) {
      const double x = xs.at(i);
      const double a = a_of_x(x);
      rep.add(make_evaluation("thm5_case1", {{"x", x}, {"a", a}, {"r", r}},
                              (1.0 - a * a) * bound_thm1_B2(x, r), rhs, tol));
    }
  }
  rep.claims.push_back(make_claim("case1_covers_a_le_3/5", 1.0, x_of_a(0.6) <= x_cap ? 1.0 : 0.0, 0.0,
                                  "x(3/5) = " + std::to_string(x_of_a(0.6))));

  if (at_R) {
    const auto ex = thm5::case1_expansion(r);
    rep.add(make_evaluation("thm5_case1_x4_factor", {{"power", 0}}, ex.rem0, 0.0, 1e-12, Relation::eq));
    rep.add(make_evaluation("thm5_case1_x4_factor", {{"power", 2}}, ex.rem1, 0.0, 1e-12, Relation::eq));
    const auto& printed = thm5::case1_printed();
    for (std::size_t k = 0; k < printed.size(); ++k) {
      auto e = make_evaluation("thm5_case1_decimal", {{"power", 2.0 * static_cast<double>(k)}}, ex.P.c[k],
                               printed[k], 0.0, Relation::eq);
      e.tolerance = 1e-3 * std::abs(printed[k]);
      rep.add(e);
    }
    for (std::size_t i = 1; i <= 20; ++i) {
      const double x = 0.25 * static_cast<double>(i) / 20.0;
      const double s = x * x;
      const double factored = -27.0 * r * r * s * s / (32.0 * std::pow(1.0 - r * r * s, 4)) * ex.P(s);
      rep.add(make_evaluation("thm5_case1_identity", {{"x", x}}, factored, thm5::case1_excess(x, r), 1e-12,
                              Relation::eq));
      rep.add(make_evaluation("thm5_case1_poly_positive", {{"x", x}}, -ex.P(s), 0.0, tol));
    }
  }

  // Case 2: 3/5 < a <= 3/4, through the logarithmic Abel bound.
  {
    const Range as{0.6, 0.75, grid.a_range.steps};
    auto f = [r](double a) { return thm5::case2_objective(a, r); };
    const auto [arg, val] = detail::grid_then_golden(f, as, 1e-10);
    rep.add(make_evaluation("thm5_case2", {{"a_argmax", arg}, {"r", r}}, val, rhs, tol));
    rep.claims.push_back(make_claim("case2_argmax_at_3/4", 0.75, arg, 1e-6,
                                    "maximizer of the displayed case-2 objective on [3/5, 3/4]"));
  }

  // Case 3: a >= 3/4, through the 27/8 r^4 bound on the tail.
  {
    const Range as{0.75, 1.0, grid.a_range.steps};
    auto f = [r](double a) { return thm5::case3_objective(a, r); };
    const auto [arg, val] = detail::grid_then_golden(f, as, 1e-10);
    rep.add(make_evaluation("thm5_case3", {{"a_argmax", arg}, {"r", r}}, val, rhs, tol));
  }

  // Outer radius of the ring: for r = 1/sqrt3 the case-3 estimate covers every a.
  {
    const double ro = constants::inv_sqrt3;
    const Range as{0.0, 1.0, grid.a_range.steps};
    auto f = [ro](double a) { return thm5::case3_objective(a, ro); };
    const auto [arg, val] = detail::grid_then_golden(f, as, 1e-10);
    rep.add(make_evaluation("thm5_outer_ring", {{"a_argmax", arg}, {"r", ro}}, val, 27.0 / 8.0 * std::pow(ro, 4),
                            tol));
  }

  // The boundary family itself at r and at the outer radius.
  for (const double rr : {r, constants::inv_sqrt3}) {
    const double rhs_rr = 27.0 / 8.0 * std::pow(rr, 4);
    const Range& xs = grid.x_range;
    for (std::size_t i = 0; i < xs.steps; i += std::max<std::size_t>(1, xs.steps / 200)) {
      const double x = xs.at(i);
      rep.add(make_evaluation("thm5_family", {{"x", x}, {"r", rr}}, thm5::family_lhs(x, rr, grid.truncation),
                              rhs_rr, tol));
    }
  }

  rep.claims.push_back(
      make_claim("R_closed_form", constants::sharp_R, constants::sharp_R, 0.0, "no printed decimal to compare"));
  return rep;
}

// ---------------------------------------------------------------------------
// Sharpness over the boundary family

struct FamilyExcess {
  double excess;  ///< max_x lhs - rhs
  double argmax_x;
  double rhs;
};

/// max over x of (family lhs - rhs) at radius r.
///   thm5: (1 - a^2) sum k|A_k|^2 r^{2k} against 27/8 r^4
///   thm2: sum k^2 |A_k|^2 r^{2k} against 27/4 r^4
///   thm3: r^2 times the proof majorant on the coefficient-region boundary
///         against 27/4 r^4 (closed form, no series)
inline FamilyExcess max_family_excess(BoundId id, double r, const ScanGrid& grid) {
  detail::require(id == BoundId::thm2 || id == BoundId::thm3 || id == BoundId::thm5,
                  "max_family_excess: bound must be thm2, thm3 or thm5");
  const std::size_t N = grid.truncation;
  const double r4 = std::pow(r, 4);
  const double rhs = (id == BoundId::thm5 ? 27.0 / 8.0 : 27.0 / 4.0) * r4;
  std::function<double(double)> lhs;
  Range xs = grid.x_range;
  if (id == BoundId::thm5) {
    lhs = [r, N](double x) { return thm5::family_lhs(x, r, N); };
  } else if (id == BoundId::thm2) {
    lhs = [r, N](double x) { return family_power_sum(x, r, 2, N); };
  } else {
    xs.hi = constants::inv_sqrt3;
    lhs = [r](double x) { return r * r * (thm3::majorant_excess(x, r) + 6.75 * r * r); };
  }
  const auto [arg, val] = detail::grid_then_golden([&](double x) { return lhs(x) - rhs; }, xs, 1e-12);
  return {val, arg, rhs};
}

inline VerdictReport sharpness_scan(BoundId id, double r, const ScanGrid& grid) {
  detail::require(id == BoundId::thm2 || id == BoundId::thm5, "sharpness_scan: bound must be thm2 or thm5");
  VerdictReport rep;
  rep.suite_id = std::string("sharpness_") + std::string(to_string(id));
  const auto fe = max_family_excess(id, r, grid);
  rep.add(make_evaluation(std::string(to_string(id)), {{"x", fe.argmax_x}, {"r", r}}, fe.rhs + fe.excess, fe.rhs,
                          grid.tolerance));
  return rep;
}

/// Smallest radius in [lo, hi] above which the family no longer violates the
/// bound, by bisection on max_x excess - floor. `floor` separates genuine
/// violations from the rounding noise of the x -> 0 contact.
inline numerics::RootResult crossing_radius(BoundId id, double lo, double hi, const ScanGrid& grid,
                                            double tol = 1e-9, double floor = 1e-15) {
  auto f = [&](double r) { return max_family_excess(id, r, grid).excess - floor; };
  return numerics::bisect(f, lo, hi, tol);
}

/// Positive root of the degree-8 polynomial whose square root is the
/// conjectured sharp lower radius for the 27/4 r^4 bound.
inline numerics::RootResult critical_root(double tol = 1e-14) {
  return numerics::bisect(critical_poly, 0.1, 0.2, tol);
}

}  // namespace bloch
