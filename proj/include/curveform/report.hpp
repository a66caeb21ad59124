#pragma once

#include <string>
#include <vector>

#include "curveform/json_io.hpp"

namespace curveform {

struct CheckItem {
  std::string label;
  bool pass = true;
  json residual = nullptr;  // NcPoly or TensorPoly JSON when the check failed
};

// Outcome of one verification: a named list of individually labelled checks
// plus free-form details.
struct Report {
  Report(std::string name, CurvePoint at) : check(std::move(name)), point(std::move(at)) {}

  std::string check;
  CurvePoint point;
  std::vector<CheckItem> items;
  json details = json::object();

  bool pass() const;
  std::size_t failures() const;
  const CheckItem* first_failure() const;

  void add(std::string label, bool ok, json residual = nullptr) {
    items.push_back(CheckItem{std::move(label), ok, ok ? json(nullptr) : std::move(residual)});
  }
  // Passes iff `residual` is zero.
  void add_zero(std::string label, const NcPoly& residual) {
    add(std::move(label), residual.is_zero(), to_json(residual));
  }
  void add_zero(std::string label, const TensorPoly& residual) {
    add(std::move(label), residual.is_zero(), to_json(residual));
  }
};

// {"check", "point", "status", "residual", "items", "details"}
json to_json(const Report& report);

}  // namespace curveform
