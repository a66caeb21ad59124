#include "curveform/json_io.hpp"

namespace curveform {

namespace {

json word_list(const std::vector<Word>& words) {
  json out = json::array();
  for (const Word& w : words) out.push_back(w.str());
  return out;
}

}  // namespace

json to_json(const Rational& v) { return v.fraction_str(); }

json to_json(const Scalar& v) { return json{{"c0", v.c0().fraction_str()}, {"c1", v.c1().fraction_str()}}; }

json to_json(const NcPoly& f) {
  json out = json::array();
  for (const auto& [w, c] : f.terms()) out.push_back(json{{"coeff", to_json(c)}, {"word", w.str()}});
  return out;
}

json to_json(const TensorPoly& f) {
  json out = json::array();
  for (const auto& [legs, c] : f.terms()) out.push_back(json{{"coeff", to_json(c)}, {"legs", word_list(legs)}});
  return out;
}

json to_json(const CurvePoint& point) { return json{{"q", to_json(point.q())}, {"p", to_json(point.p())}}; }

json to_json(const Rule& rule) {
  return json{{"lhs", rule.lhs.str()}, {"rhs", to_json(rule.rhs)}, {"origin", std::string(to_string(rule.origin))}};
}

json to_json(const RuleSystem& rs) {
  json out = json::array();
  for (const Rule& r : rs.rules()) out.push_back(to_json(r));
  return out;
}

json to_json(const DiamondReport& report, const RuleSystem& rs) {
  json items = json::array();
  for (const AmbiguityResult& r : report.results) {
    items.push_back(json{{"kind", std::string(to_string(r.ambiguity.kind))},
                         {"rule_left", rs[r.ambiguity.rule_left].lhs.str()},
                         {"rule_right", rs[r.ambiguity.rule_right].lhs.str()},
                         {"witness", r.ambiguity.witness.str()},
                         {"status", std::string(to_string(r.status))}});
  }
  return json{{"ambiguities", report.results.size()},
              {"failures", report.failures()},
              {"items", std::move(items)}};
}

json to_json(const CensusReport& report) {
  return json{{"max_len", report.max_len},
              {"words", report.words},
              {"irreducible", report.irreducible},
              {"pattern", report.pattern},
              {"cumulative", report.cumulative},
              {"mismatches", word_list(report.mismatches)},
              {"off_basis", word_list(report.off_basis)},
              {"fuel_failures", word_list(report.fuel_failures)}};
}

json to_json(const GrowthReport& report) {
  return json{{"max_len", report.max_len},
              {"exact", report.exact},
              {"cumulative", report.cumulative},
              {"fit_length", report.fit_length},
              {"exponent", report.exponent},
              {"min_ratio", report.min_ratio},
              {"max_ratio", report.max_ratio},
              {"strictly_increasing", report.strictly_increasing}};
}

json to_json(const FreenessReport& report) {
  json right = nullptr;
  if (report.right_counterexample)
    right = json{{"tail", report.right_counterexample->first.str()},
                 {"b_word", report.right_counterexample->second.str()}};
  return json{{"max_len", report.max_len},
              {"products_checked", report.products_checked},
              {"product_failures", word_list(report.product_failures)},
              {"round_trips", report.round_trips},
              {"round_trip_failures", report.round_trip_failures},
              {"right_tail_pure", report.right_tail_pure},
              {"right_counterexample", std::move(right)}};
}

json to_json(const BDecomposition& d) {
  json out = json::array();
  for (const auto& [tail, coeff] : d) out.push_back(json{{"tail", tail.str()}, {"coeff", to_json(coeff)}});
  return out;
}

Scalar scalar_from_json(const json& j) {
  return Scalar(Rational::parse(j.at("c0").get<std::string>()),
                Rational::parse(j.at("c1").get<std::string>()));
}

NcPoly poly_from_json(const json& j) {
  NcPoly out;
  for (const json& term : j) out.add_term(Word(term.at("word").get<std::string>()), scalar_from_json(term.at("coeff")));
  return out;
}

RuleSystem rules_from_json(const json& j, std::size_t fuel) {
  std::vector<Rule> rules;
  for (const json& r : j)
    rules.push_back(Rule{Word(r.at("lhs").get<std::string>()), poly_from_json(r.at("rhs")),
                         parse_rule_origin(r.at("origin").get<std::string>())});
  return RuleSystem(std::move(rules), fuel);
}

}  // namespace curveform
