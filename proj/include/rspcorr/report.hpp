#pragma once

// Machine-readable form of verification reports.

#include <string>

#include "json.hpp"
#include "rspcorr/format.hpp"
#include "rspcorr/verify.hpp"

namespace rspcorr {

inline nlohmann::ordered_json to_json(const CheckReport& r, bool with_runtime = true) {
  auto nums = [](const std::vector<double>& v) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (double x : v) a.push_back(round_significant(x));
    return a;
  };
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["passed"] = r.passed;
  j["informational"] = r.informational;
  j["observed"] = nums(r.observed);
  j["expected"] = nums(r.expected);
  j["tolerance"] = r.tolerance;
  if (with_runtime) j["runtime"] = round_significant(r.runtime_s);
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

inline nlohmann::ordered_json to_json(const SuiteResult& s, std::uint64_t seed, const std::string& level) {
  nlohmann::ordered_json j;
  j["convention"] = kConvention;
  j["seed"] = seed;
  j["level"] = level;
  j["passed"] = s.ok;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& r : s.checks) j["checks"].push_back(to_json(r));
  return j;
}

/// One line per check, no timings, so identical runs print identical text.
inline std::string summary_text(const SuiteResult& s) {
  std::string out;
  std::size_t failed = 0, info = 0;
  for (const auto& r : s.checks) {
    const char* tag = r.informational ? "[INFO]" : (r.passed ? "[PASS]" : "[FAIL]");
    if (r.informational) ++info;
    else if (!r.passed) ++failed;
    out += std::string(tag) + " " + r.name + "  observed=";
    for (std::size_t i = 0; i < r.observed.size(); ++i) out += (i ? "," : "") + format_number(r.observed[i]);
    out += " expected=";
    for (std::size_t i = 0; i < r.expected.size(); ++i) out += (i ? "," : "") + format_number(r.expected[i]);
    out += " tol=" + format_number(r.tolerance);
    if (!r.detail.empty()) out += "  (" + r.detail + ")";
    out += "\n";
  }
  out += std::to_string(s.checks.size()) + " checks, " + std::to_string(failed) + " failed, " + std::to_string(info) +
         " informational\n";
  return out;
}

}  // namespace rspcorr
