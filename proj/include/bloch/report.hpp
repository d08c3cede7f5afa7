#pragma once

// CSV / JSON serialization of verdict reports.
//
// CSV columns: suite_id,instance_id,params,lhs,rhs,slack,tail_cert,pass
// where params is `bound=<id>;name=value;...`. Claims follow the instances as
// rows with instance_id `claim:<name>`; they never affect the suite verdict.

#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "bloch/verifier.hpp"

namespace bloch::report {

/// Shortest round-trip representation (%.17g).
inline std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string params_text(const BoundEvaluation& e) {
  std::string s = "bound=" + e.bound_id;
  for (const auto& [k, v] : e.params) s += ";" + k + "=" + num(v);
  return s;
}

inline std::string claim_params_text(const Claim& c) {
  std::string s = "expected=" + num(c.expected) + ";observed=" + num(c.observed) + ";tolerance=" + num(c.tolerance);
  if (!c.note.empty()) s += ";note=" + c.note;
  return s;
}

inline constexpr const char* csv_header = "suite_id,instance_id,params,lhs,rhs,slack,tail_cert,pass";

inline std::string to_csv(const VerdictReport& rep, bool with_header = true) {
  std::ostringstream os;
  if (with_header) os << csv_header << '\n';
  for (std::size_t i = 0; i < rep.instances.size(); ++i) {
    const auto& e = rep.instances[i];
    os << rep.suite_id << ',' << i << ',' << params_text(e) << ',' << num(e.lhs) << ',' << num(e.rhs) << ','
       << num(e.slack) << ',' << num(e.tail_certificate) << ',' << (e.passes() ? 1 : 0) << '\n';
  }
  for (const auto& c : rep.claims) {
    os << rep.suite_id << ",claim:" << c.name << ',' << claim_params_text(c) << ',' << num(c.observed) << ','
       << num(c.expected) << ',' << num(c.expected - c.observed) << ",0," << (c.holds ? 1 : 0) << '\n';
  }
  return os.str();
}

inline nlohmann::ordered_json to_json(const VerdictReport& rep) {
  auto arr = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < rep.instances.size(); ++i) {
    const auto& e = rep.instances[i];
    arr.push_back({{"suite_id", rep.suite_id},
                   {"instance_id", std::to_string(i)},
                   {"params", params_text(e)},
                   {"lhs", e.lhs},
                   {"rhs", e.rhs},
                   {"slack", e.slack},
                   {"tail_cert", e.tail_certificate},
                   {"pass", e.passes()}});
  }
  for (const auto& c : rep.claims) {
    arr.push_back({{"suite_id", rep.suite_id},
                   {"instance_id", "claim:" + c.name},
                   {"params", claim_params_text(c)},
                   {"lhs", c.observed},
                   {"rhs", c.expected},
                   {"slack", c.expected - c.observed},
                   {"tail_cert", 0.0},
                   {"pass", c.holds}});
  }
  return arr;
}

inline std::string summary_line(const VerdictReport& rep) {
  std::string s = rep.suite_id + (rep.pass ? " PASS" : " FAIL") + " instances=" + std::to_string(rep.instances.size()) +
                  " worst_slack=" + num(rep.worst_slack) + " witnesses=" + std::to_string(rep.witnesses.size());
  return s;
}

}  // namespace bloch::report
