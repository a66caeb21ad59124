#include "curveform/report.hpp"

#include <algorithm>

namespace curveform {

bool Report::pass() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(items.begin(), items.end(), [](const CheckItem& i) { return !i.pass; }));
}

const CheckItem* Report::first_failure() const {
  for (const CheckItem& i : items)
    if (!i.pass) return &i;
  return nullptr;
}

json to_json(const Report& report) {
  json items = json::array();
  for (const CheckItem& i : report.items) {
    json item{{"label", i.label}, {"status", i.pass ? "pass" : "fail"}};
    if (!i.pass) item["residual"] = i.residual;
    items.push_back(std::move(item));
  }
  const CheckItem* failure = report.first_failure();
  return json{{"check", report.check},
              {"point", to_json(report.point)},
              {"status", report.pass() ? "pass" : "fail"},
              {"residual", failure ? failure->residual : json(nullptr)},
              {"checked", report.items.size()},
              {"items", std::move(items)},
              {"details", report.details}};
}

}  // namespace curveform
