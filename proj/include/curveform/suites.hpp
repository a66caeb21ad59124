#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curveform/report.hpp"

namespace curveform {

struct RunConfig {
  // Point selection: either t, or both q and p (expressions over Q(r)).
  std::optional<std::string> t;
  std::optional<std::string> q;
  std::optional<std::string> p;
  std::size_t fuel = RuleSystem::kDefaultFuel;
  std::uint64_t seed = 42;
  // Override the default bound of the named suite; ignored by `all`.
  std::optional<std::size_t> max_len;
  std::optional<std::size_t> max_deg;
};

// CURVEFORM_FUEL if set to a positive integer, else the built-in default.
std::size_t default_fuel();

// t defaults to 2, i.e. (q, p) = (3, 6).
CurvePoint resolve_point(const RunConfig& cfg);

struct SuiteResult {
  std::string name;
  CurvePoint point;
  std::vector<Report> reports;

  bool pass() const;
};

const std::vector<std::string>& suite_names();  // without "all"

SuiteResult run_suite(const std::string& name, const NodalAlgebra& alg, const RunConfig& cfg);
// Builds the algebra at the configured point first. A completion or diamond
// failure is reported as a failed "diamond" check rather than thrown.
std::vector<SuiteResult> run_suites(const std::string& name, const RunConfig& cfg);

json to_json(const SuiteResult& result);
json suites_to_json(const std::vector<SuiteResult>& results);
std::string to_text(const std::vector<SuiteResult>& results);

}  // namespace curveform
