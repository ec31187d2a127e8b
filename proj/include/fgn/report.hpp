#pragma once

// Machine-readable verification reports. Key order is fixed (ordered_json)
// and all content is derived deterministically from the inputs and seed, so
// identical invocations produce byte-identical dumps.

#include <json.hpp>
#include <string>
#include <vector>

#include "fgn/fockrep.hpp"

namespace fgn {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchemaVersion = "fgn-report/1";

struct Assertion {
  std::string name;
  std::string proposition;  // e.g. "Prop 8", "Eq (4)"
  bool pass = false;
  double lhs = 0.0;
  double rhs = 0.0;
  double tolerance = 0.0;
  Json detail;  // optional extras

  Json to_json() const {
    Json j;
    j["name"] = name;
    j["proposition"] = proposition;
    j["pass"] = pass;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    j["tolerance"] = tolerance;
    if (!detail.is_null()) j["detail"] = detail;
    return j;
  }
};

struct Report {
  std::string command;
  std::string suite;
  std::string proposition;
  Json inputs = Json::object();
  Json outputs = Json::object();
  std::vector<Assertion> assertions;

  bool pass() const {
    for (const Assertion& a : assertions)
      if (!a.pass) return false;
    return true;
  }

  Json to_json() const {
    Json j;
    j["schema"] = kReportSchemaVersion;
    j["command"] = command;
    if (!suite.empty()) j["suite"] = suite;
    if (!proposition.empty()) j["proposition"] = proposition;
    j["inputs"] = inputs;
    j["outputs"] = outputs;
    Json as = Json::array();
    for (const Assertion& a : assertions) as.push_back(a.to_json());
    j["assertions"] = as;
    j["pass"] = pass();
    return j;
  }

  std::string dump(int indent = 2) const { return to_json().dump(indent) + "\n"; }
};

inline const char* to_string(EstimateKind k) {
  return k == EstimateKind::exact ? "exact" : "lower-bound";
}

inline Json estimate_json(const NormEstimate& est, bool with_trace = false) {
  Json j;
  j["value"] = est.value;
  j["radius"] = est.radius;
  j["kind"] = to_string(est.kind);
  j["converged"] = est.converged;
  j["iterations"] = est.iterations;
  j["last_rel_change"] = est.last_rel_change;
  j["triangle_bound"] = est.triangle;
  if (with_trace && !est.trace.empty()) j["trace"] = est.trace;
  return j;
}

}  // namespace fgn
