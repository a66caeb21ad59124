#pragma once

#include <json.hpp>

#include "curveform/nodal.hpp"

namespace curveform {

using json = nlohmann::ordered_json;

json to_json(const Rational& v);
json to_json(const Scalar& v);
json to_json(const NcPoly& f);
json to_json(const TensorPoly& f);
json to_json(const CurvePoint& point);
json to_json(const Rule& rule);
json to_json(const RuleSystem& rs);
json to_json(const DiamondReport& report, const RuleSystem& rs);
json to_json(const CensusReport& report);
json to_json(const GrowthReport& report);
json to_json(const FreenessReport& report);
json to_json(const BDecomposition& d);

Scalar scalar_from_json(const json& j);
NcPoly poly_from_json(const json& j);
RuleSystem rules_from_json(const json& j, std::size_t fuel = RuleSystem::kDefaultFuel);

}  // namespace curveform
