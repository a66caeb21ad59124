#include "curveform/galois.hpp"

#include "curveform/expr.hpp"

namespace curveform {

CPoly project_pi(const NcPoly& f, const NodalAlgebra& alg) {
  CPoly out;
  const NcPoly normal = alg.nf(f);
  for (const auto& [w, c] : normal.terms()) {
    auto [prefix, tail] = split_tail(w);
    out.add_term(tail, c * counit_b(prefix, alg.point()));
  }
  return out;
}

bool in_bplus_a(const NcPoly& f, const NodalAlgebra& alg) { return project_pi(f, alg).is_zero(); }

CPoly c_act(const CPoly& c, const NcPoly& h, const NodalAlgebra& alg) {
  return project_pi(alg.mul(c, h), alg);
}

CoactionValue coaction(const NcPoly& f, HopfEngine& engine) {
  const NodalAlgebra& alg = engine.algebra();
  CoactionValue out(2);
  const TensorPoly d = engine.delta(f);
  for (const auto& [legs, c] : d.terms()) {
    const CPoly left = project_pi(NcPoly(legs[0]), alg);
    for (const auto& [t, ct] : left.terms()) out.add_term({t, legs[1]}, c * ct);
  }
  return out;
}

Report check_recovery(const NodalAlgebra& alg, const StructureMaps& maps, std::size_t max_deg) {
  Report report{"galois_recovery", alg.point()};
  HopfEngine engine(alg, maps);
  std::size_t b_words = 0, other_words = 0;
  for (std::size_t L = 0; L <= max_deg; ++L)
    for (const Word& w : basis_words_of_length(L)) {
      TensorPoly diff = coaction(NcPoly(w), engine) - TensorPoly::pure({Word(), w});
      if (is_b_word(w)) {
        ++b_words;
        report.add_zero("coinvariant " + w.pretty(), diff);
      } else {
        ++other_words;
        report.add("not coinvariant " + w.pretty(), !diff.is_zero(), to_json(diff));
      }
    }
  report.details["max_deg"] = max_deg;
  report.details["b_words"] = b_words;
  report.details["other_words"] = other_words;
  return report;
}

Report check_witness(const NodalAlgebra& alg) {
  Report report{"galois_witness", alg.point()};
  const CurvePoint& pt = alg.point();
  NcPoly x_minus_q = parse_expr("x - q", pt);
  NcPoly witness = alg.mul(NcPoly(Word("aa")), x_minus_q);
  NcPoly displayed = alg.nf(parse_expr("-x*a^2 - a*x*a - (1+q)*a^2 + (1+3*q)*a^3", pt));
  report.add_zero("normal form of a^2*(x - q)", witness - displayed);

  // x - q is in B with counit zero.
  bool right_factor_in_bplus = is_b_word(Word("x")) && apply_counit(x_minus_q, StructureMaps::for_point(pt)).is_zero();
  report.add("a^2*(x - q) in AB+", right_factor_in_bplus);

  CPoly pi = project_pi(witness, alg);
  report.add("a^2*(x - q) not in B+A", !pi.is_zero(), to_json(pi));
  report.details["normal_form"] = format_poly(witness);
  report.details["pi"] = format_poly(pi);
  return report;
}

}  // namespace curveform
