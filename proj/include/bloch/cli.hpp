#pragma once

// Command-line front end: `verify`, `root`, `table` and `scan`.
// Exit codes: 0 pass, 1 verdict failure, 2 usage or I/O error.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bloch/bounds.hpp"
#include "bloch/constants.hpp"
#include "bloch/report.hpp"
#include "bloch/suites.hpp"
#include "bloch/verifier.hpp"

namespace bloch::cli {

inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_usage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// lo:hi:steps
inline Range parse_range(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() != 3) throw UsageError("grid must be lo:hi:steps, got '" + text + "'");
  try {
    std::size_t used = 0;
    Range r{std::stod(parts[0]), std::stod(parts[1]), 0};
    const long steps = std::stol(parts[2], &used);
    if (used != parts[2].size() || steps < 2) throw UsageError("grid steps must be an integer >= 2");
    r.steps = static_cast<std::size_t>(steps);
    if (!(r.lo < r.hi)) throw UsageError("grid needs lo < hi");
    return r;
  } catch (const std::logic_error&) {
    throw UsageError("grid must be lo:hi:steps, got '" + text + "'");
  }
}

inline std::string range_text(const Range& r) {
  return report::num(r.lo) + ":" + report::num(r.hi) + ":" + std::to_string(r.steps);
}

/// Options of the `verify` command; mirrored one-to-one by the config file.
struct RunConfig {
  std::vector<std::string> suites;  ///< empty = all
  std::string out = "reports";
  std::string format = "csv";
  std::uint64_t seed = 42;
  double tol = constants::default_tol;
  std::optional<Range> grid;  ///< x grid override
  std::size_t truncation = constants::default_truncation;
  std::optional<double> r;
  std::size_t samples = 100;

  bool operator==(const RunConfig&) const = default;
};

inline std::string to_config_text(const RunConfig& c) {
  std::ostringstream os;
  std::string joined;
  for (const auto& s : c.suites) joined += (joined.empty() ? "" : ",") + s;
  os << "suite=" << joined << '\n'
     << "out=" << c.out << '\n'
     << "format=" << c.format << '\n'
     << "seed=" << c.seed << '\n'
     << "tol=" << report::num(c.tol) << '\n';
  if (c.grid) os << "grid=" << range_text(*c.grid) << '\n';
  os << "truncation=" << c.truncation << '\n';
  if (c.r) os << "r=" << report::num(*c.r) << '\n';
  os << "samples=" << c.samples << '\n';
  return os.str();
}

namespace detail {

inline std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string p; std::getline(ss, p, ',');) {
    p = trim(p);
    if (!p.empty()) out.push_back(p);
  }
  return out;
}

template <typename T>
T parse_number(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    T out{};
    if constexpr (std::is_floating_point_v<T>) {
      out = static_cast<T>(std::stod(v, &used));
    } else {
      if (!v.empty() && v[0] == '-') throw UsageError(key + " must be nonnegative");
      out = static_cast<T>(std::stoull(v, &used));
    }
    if (used != v.size()) throw UsageError("bad value for " + key + ": '" + v + "'");
    return out;
  } catch (const std::logic_error&) {
    throw UsageError("bad value for " + key + ": '" + v + "'");
  }
}

}  // namespace detail

/// Applies one key=value setting. Unknown keys are usage errors.
inline void apply_setting(RunConfig& c, const std::string& key, const std::string& value) {
  if (key == "suite") {
    c.suites = detail::split_list(value);
  } else if (key == "out") {
    c.out = value;
  } else if (key == "format") {
    c.format = value;
  } else if (key == "seed") {
    c.seed = detail::parse_number<std::uint64_t>(key, value);
  } else if (key == "tol") {
    c.tol = detail::parse_number<double>(key, value);
  } else if (key == "grid") {
    c.grid = parse_range(value);
  } else if (key == "truncation") {
    c.truncation = detail::parse_number<std::size_t>(key, value);
  } else if (key == "r") {
    c.r = detail::parse_number<double>(key, value);
  } else if (key == "samples") {
    c.samples = detail::parse_number<std::size_t>(key, value);
  } else {
    throw UsageError("unknown config key '" + key + "'");
  }
}

inline RunConfig parse_config_text(const std::string& text, RunConfig c = {}) {
  std::istringstream is(text);
  int lineno = 0;
  for (std::string line; std::getline(is, line);) {
    ++lineno;
    line = detail::trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line " + std::to_string(lineno) + ": expected key=value");
    apply_setting(c, detail::trim(line.substr(0, eq)), detail::trim(line.substr(eq + 1)));
  }
  return c;
}

inline void validate(const RunConfig& c) {
  for (const auto& s : c.suites) {
    if (!suites::is_known(s)) throw UsageError("unknown suite '" + s + "'");
  }
  if (c.format != "csv" && c.format != "json") throw UsageError("format must be csv or json");
  if (!(c.tol > 0.0)) throw UsageError("tol must be positive");
  if (c.truncation < 8) throw UsageError("truncation must be >= 8");
  if (c.samples < 1) throw UsageError("samples must be >= 1");
  if (c.r && !(*c.r > 0.0 && *c.r <= constants::inv_sqrt3 + constants::interval_eps)) {
    throw UsageError("r must lie in (0, 1/sqrt3]");
  }
  if (c.grid && !(c.grid->lo >= constants::x_guard && c.grid->hi <= constants::inv_sqrt3 - constants::x_guard)) {
    throw UsageError("verify grid is an x grid and must lie within [1e-6, 1/sqrt3 - 1e-6]");
  }
}

inline suites::SuiteOptions suite_options(const RunConfig& c) {
  suites::SuiteOptions o;
  o.grid.seed = c.seed;
  o.grid.tolerance = c.tol;
  o.grid.truncation = c.truncation;
  o.grid.sample_count = c.samples;
  if (c.grid) o.grid.x_range = *c.grid;
  o.r = c.r;
  return o;
}

inline std::vector<std::string> selected_suites(const RunConfig& c) {
  if (c.suites.empty()) return suites::names();
  std::vector<std::string> out;
  for (const auto& n : suites::names()) {
    if (std::find(c.suites.begin(), c.suites.end(), n) != c.suites.end()) out.push_back(n);
  }
  return out;
}

/// Runs the selected suites and returns their reports in canonical order.
inline std::vector<VerdictReport> run_suites(const RunConfig& c) {
  const auto opts = suite_options(c);
  std::vector<std::future<VerdictReport>> jobs;
  for (const auto& name : selected_suites(c)) {
    jobs.push_back(std::async(std::launch::async, [name, opts] { return suites::run(name, opts); }));
  }
  std::vector<VerdictReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

inline std::string serialize(const VerdictReport& rep, const std::string& format) {
  return format == "json" ? report::to_json(rep).dump(2) + "\n" : report::to_csv(rep);
}

inline int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  validate(c);
  const auto reports = run_suites(c);
  std::error_code ec;
  std::filesystem::create_directories(c.out, ec);
  if (ec) {
    err << "error: cannot create output directory " << c.out << ": " << ec.message() << '\n';
    return exit_usage;
  }
  bool all = true;
  for (const auto& rep : reports) {
    const auto path = std::filesystem::path(c.out) / (rep.suite_id + "." + c.format);
    std::ofstream f(path, std::ios::binary);
    if (!(f << serialize(rep, c.format))) {
      err << "error: cannot write " << path.string() << '\n';
      return exit_usage;
    }
    out << report::summary_line(rep) << '\n';
    for (const auto& cl : rep.claims) {
      out << "  claim " << cl.name << (cl.holds ? " holds" : " does not hold") << " expected=" << report::num(cl.expected)
          << " observed=" << report::num(cl.observed) << (cl.note.empty() ? "" : " (" + cl.note + ")") << '\n';
    }
    for (std::size_t i = 0; i < std::min<std::size_t>(rep.witnesses.size(), 5); ++i) {
      out << "  witness";
      for (const auto& [k, v] : rep.witnesses[i]) out << ' ' << k << '=' << report::num(v);
      out << '\n';
    }
    all = all && rep.pass;
  }
  return all ? exit_pass : exit_fail;
}

inline int cmd_root(std::ostream& out) {
  const auto res = critical_root();
  const double s = std::sqrt(res.root);
  out << "rho=" << report::num(res.root) << '\n'
      << "sqrt_rho=" << report::num(s) << '\n'
      << "residual=" << report::num(res.residual) << '\n'
      << "bracket=" << report::num(res.lo) << ":" << report::num(res.hi) << '\n'
      << "iterations=" << res.iterations << '\n';
  const bool ok = res.converged && std::abs(s - 0.39466) <= 5e-5 && std::abs(res.residual) <= 1e-12;
  out << "check=" << (ok ? "pass" : "fail") << '\n';
  return ok ? exit_pass : exit_fail;
}

inline constexpr const char* table_header = "bound_id,x,r,value";

/// One row per (bound, r); rows outside a bound's validity interval carry
/// `out_of_range` instead of a value.
inline std::string table_csv(const std::vector<BoundId>& ids, const Range& rs, double x, int n) {
  std::ostringstream os;
  os << table_header << '\n';
  for (const auto id : ids) {
    const bool uses_x = id == BoundId::thm1_B || id == BoundId::thm1_B2 || id == BoundId::cor1;
    for (std::size_t i = 0; i < rs.steps; ++i) {
      const double r = rs.at(i);
      std::string value;
      try {
        double v = 0.0;
        switch (id) {
          case BoundId::basic: v = bound_basic(r); break;
          case BoundId::prop1: v = bound_prop1(n, r); break;
          case BoundId::thm1_B: v = bound_thm1_B(x, r); break;
          case BoundId::thm1_B2: v = bound_thm1_B2(x, r); break;
          case BoundId::cor1: v = bound_cor1(a_of_x(x), r); break;
          default: v = thm_rhs(id, r); break;
        }
        value = report::num(v);
      } catch (const InvalidArgument&) {
        value = "out_of_range";
      }
      os << to_string(id) << ',' << (uses_x ? report::num(x) : "") << ',' << report::num(r) << ',' << value << '\n';
    }
  }
  return os.str();
}

struct ScanResult {
  std::string csv;
  std::string summary;
  std::optional<double> crossing;
};

inline BoundId scan_bound(const std::string& target) {
  if (target == "problem1") return BoundId::thm2;
  if (target == "problem2") return BoundId::thm3;
  if (target == "thm5_sharpness") return BoundId::thm5;
  throw UsageError("unknown scan target '" + target + "'");
}

inline Range default_scan_range(const std::string& target) {
  if (target == "thm5_sharpness") return {constants::sharp_R - 0.05, constants::inv_sqrt3, 41};
  return {0.35, 0.45, 21};
}

inline std::string scan_label(const std::string& target) {
  if (target == "problem1") return "exploratory: open problem; conjecture-consistent value, not certified";
  if (target == "problem2") return "exploratory: open problem; crossing of the proof majorant, not certified";
  return "sharpness replay over the boundary family";
}

/// Max family excess along an r grid and the empirical zero crossing.
inline ScanResult scan(const std::string& target, const Range& rs, const ScanGrid& grid) {
  const BoundId id = scan_bound(target);
  constexpr double floor = 1e-15;
  std::ostringstream os;
  os << "target,r,max_excess,argmax_x,rhs\n";
  std::vector<double> excess;
  for (std::size_t i = 0; i < rs.steps; ++i) {
    const double r = rs.at(i);
    const auto fe = max_family_excess(id, r, grid);
    excess.push_back(fe.excess);
    os << target << ',' << report::num(r) << ',' << report::num(fe.excess) << ',' << report::num(fe.argmax_x) << ','
       << report::num(fe.rhs) << '\n';
  }
  ScanResult res;
  res.csv = os.str();
  for (std::size_t i = 0; i + 1 < excess.size(); ++i) {
    if (excess[i] > floor && excess[i + 1] <= floor) {
      res.crossing = crossing_radius(id, rs.at(i), rs.at(i + 1), grid, 1e-9, floor).root;
    }
  }
  res.summary = "target=" + target + " crossing_radius=" + (res.crossing ? report::num(*res.crossing) : "none") +
                " label=\"" + scan_label(target) + "\"";
  return res;
}

inline int write_or_print(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return exit_pass;
  }
  std::ofstream f(path, std::ios::binary);
  if (!(f << text)) {
    err << "error: cannot write " << path << '\n';
    return exit_usage;
  }
  return exit_pass;
}

/// Full command-line entry point; never throws.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical verification of coefficient inequalities for Bloch functions"};
  app.require_subcommand(1);

  RunConfig flags;
  std::vector<std::string> suite_list;
  std::string config_path, grid_text, format, out_path;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol, r_override;
  std::optional<std::size_t> truncation, samples;

  auto* verify = app.add_subcommand("verify", "Run verification suites and write one report per suite");
  verify->add_option("--suite", suite_list, "Suites to run (default: all)")->delimiter(',');
  verify->add_option("--config", config_path, "Flat key=value config file mirroring the flags");
  verify->add_option("--out", out_path, "Output directory (default: reports)");
  verify->add_option("--format", format, "csv or json");
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--tol", tol, "Noise floor for <= checks");
  verify->add_option("--grid", grid_text, "x grid lo:hi:steps");
  verify->add_option("--truncation", truncation, "Series truncation order");
  verify->add_option("--r", r_override, "Radius override for thm2, thm5, sharpness");
  verify->add_option("--samples", samples, "Schwarz-composed samples per suite");

  app.add_subcommand("root", "Solve the degree-8 polynomial for rho and sqrt(rho)");

  auto* table = app.add_subcommand("table", "Tabulate bound formulas over an r grid");
  std::vector<std::string> bound_list;
  std::string table_grid = "0:0.57:20", table_out;
  double table_x = 0.2;
  int table_n = 1;
  table->add_option("--bounds", bound_list, "Bound ids (default: all)")->delimiter(',');
  table->add_option("--grid", table_grid, "r grid lo:hi:steps");
  table->add_option("--x", table_x, "Boundary parameter for thm1_B, thm1_B2, cor1");
  table->add_option("--n", table_n, "Index for prop1");
  table->add_option("--out", table_out, "CSV path (default: stdout)");

  auto* scan_cmd = app.add_subcommand("scan", "Sharpness / open-problem scans over the boundary family");
  std::string target = "thm5_sharpness", scan_grid, scan_out;
  std::optional<std::size_t> scan_trunc;
  scan_cmd->add_option("--target", target, "problem1, problem2 or thm5_sharpness");
  scan_cmd->add_option("--grid", scan_grid, "r grid lo:hi:steps");
  scan_cmd->add_option("--truncation", scan_trunc, "Series truncation order");
  scan_cmd->add_option("--out", scan_out, "CSV path (default: stdout, summary to stderr)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }

  try {
    if (*verify) {
      RunConfig c;
      if (!config_path.empty()) {
        std::ifstream f(config_path);
        if (!f) throw UsageError("cannot read config " + config_path);
        std::stringstream ss;
        ss << f.rdbuf();
        c = parse_config_text(ss.str());
      }
      if (!suite_list.empty()) c.suites = suite_list;
      if (!out_path.empty()) c.out = out_path;
      if (!format.empty()) c.format = format;
      if (seed) c.seed = *seed;
      if (tol) c.tol = *tol;
      if (!grid_text.empty()) c.grid = parse_range(grid_text);
      if (truncation) c.truncation = *truncation;
      if (r_override) c.r = *r_override;
      if (samples) c.samples = *samples;
      return cmd_verify(c, out, err);
    }
    if (app.got_subcommand("root")) return cmd_root(out);
    if (*table) {
      std::vector<BoundId> ids;
      if (bound_list.empty()) {
        ids = {BoundId::basic, BoundId::prop1, BoundId::thm1_B, BoundId::thm1_B2, BoundId::thm2,
               BoundId::thm3,  BoundId::cor1,  BoundId::cor2,   BoundId::thm5};
      } else {
        for (const auto& b : bound_list) {
          try {
            ids.push_back(bound_id_from_string(b));
          } catch (const InvalidArgument& e) {
            throw UsageError(e.what());
          }
        }
      }
      if (table_n < 1) throw UsageError("--n must be >= 1");
      if (!(table_x > 0.0 && table_x < constants::inv_sqrt3)) throw UsageError("--x must lie in (0, 1/sqrt3)");
      return write_or_print(table_out, table_csv(ids, parse_range(table_grid), table_x, table_n), out, err);
    }
    if (*scan_cmd) {
      scan_bound(target);
      const Range rs = scan_grid.empty() ? default_scan_range(target) : parse_range(scan_grid);
      ScanGrid g;
      if (scan_trunc) g.truncation = *scan_trunc;
      const auto res = scan(target, rs, g);
      const int rc = write_or_print(scan_out, res.csv, out, err);
      (scan_out.empty() ? err : out) << res.summary << '\n';
      return rc;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace bloch::cli
