#include "curveform/hopf.hpp"

#include "curveform/expr.hpp"
#include "curveform/sampling.hpp"

#include <map>
#include <optional>
#include <set>

namespace curveform {

std::size_t StructureMaps::index(Letter l) {
  switch (l) {
    case Letter::x: return 0;
    case Letter::y: return 1;
    case Letter::a: return 2;
    case Letter::g: return 3;
    case Letter::b: return 4;
  }
  return 0;
}

StructureMaps StructureMaps::for_point(const CurvePoint& point) {
  const Scalar& q = point.q();
  const Scalar& p = point.p();
  const Word one, x("x"), y("y"), a("a"), g("g"), b("b");
  StructureMaps maps;

  TensorPoly dx(2);
  dx.add_term({one, x}, 1);
  dx.add_term({one, a}, -q);
  dx.add_term({x, a}, 1);
  TensorPoly dy(2);
  dy.add_term({one, y}, 1);
  dy.add_term({one, b}, -p);
  dy.add_term({y, b}, 1);
  maps.delta_[index(Letter::x)] = dx;
  maps.delta_[index(Letter::y)] = dy;
  maps.delta_[index(Letter::a)] = TensorPoly::pure({a, a});
  maps.delta_[index(Letter::g)] = TensorPoly::pure({g, g});
  maps.delta_[index(Letter::b)] = TensorPoly::pure({b, b});

  maps.counit_[index(Letter::x)] = q;
  maps.counit_[index(Letter::y)] = p;
  maps.counit_[index(Letter::a)] = 1;
  maps.counit_[index(Letter::g)] = 1;
  maps.counit_[index(Letter::b)] = 1;

  const Word b_inverse("gggb");
  NcPoly sx(q);
  sx.add_term(Word("xg"), -1);
  sx.add_term(g, q);
  NcPoly sy(p);
  sy.add_term(Word("y") * b_inverse, -1);
  sy.add_term(b_inverse, p);
  maps.antipode_[index(Letter::x)] = sx;
  maps.antipode_[index(Letter::y)] = sy;
  maps.antipode_[index(Letter::a)] = NcPoly(g);
  maps.antipode_[index(Letter::g)] = NcPoly(a);
  maps.antipode_[index(Letter::b)] = NcPoly(b_inverse);
  return maps;
}

TensorPoly HopfEngine::mul(const TensorPoly& f, const TensorPoly& h) const {
  if (f.arity() != h.arity()) throw ArityMismatch(f.arity(), h.arity());
  TensorPoly out(f.arity());
  std::vector<NcPoly> legs(f.arity());
  for (const auto& [u, cu] : f.terms())
    for (const auto& [v, cv] : h.terms()) {
      for (std::size_t k = 0; k < f.arity(); ++k) legs[k] = alg_.mul(NcPoly(u[k]), NcPoly(v[k]));
      out.add_scaled(TensorPoly::product_of(legs), cu * cv);
    }
  return out;
}

TensorPoly HopfEngine::reduce_legs(const TensorPoly& t) const {
  TensorPoly out(t.arity());
  std::vector<NcPoly> legs(t.arity());
  for (const auto& [u, c] : t.terms()) {
    for (std::size_t k = 0; k < t.arity(); ++k) legs[k] = alg_.nf(u[k]);
    out.add_scaled(TensorPoly::product_of(legs), c);
  }
  return out;
}

const TensorPoly& HopfEngine::delta_word(const Word& w) {
  if (auto it = delta_cache_.find(w); it != delta_cache_.end()) return it->second;
  TensorPoly value = w.empty() ? TensorPoly::pure({Word(), Word()})
                               : mul(delta_word(w.substr(0, w.size() - 1)), maps_.delta(w[w.size() - 1]));
  return delta_cache_.emplace(w, std::move(value)).first->second;
}

const NcPoly& HopfEngine::antipode_word(const Word& w) {
  if (auto it = antipode_cache_.find(w); it != antipode_cache_.end()) return it->second;
  // S(u z) = S(z) S(u)
  NcPoly value = w.empty() ? NcPoly(Scalar(1))
                           : alg_.mul(maps_.antipode(w[w.size() - 1]), antipode_word(w.substr(0, w.size() - 1)));
  return antipode_cache_.emplace(w, std::move(value)).first->second;
}

TensorPoly HopfEngine::delta(const NcPoly& f) {
  TensorPoly out(2);
  for (const auto& [w, c] : f.terms()) out.add_scaled(delta_word(w), c);
  return out;
}

Scalar HopfEngine::counit(const NcPoly& f) const {
  Scalar out;
  for (const auto& [w, c] : f.terms()) {
    Scalar v = c;
    for (std::size_t k = 0; k < w.size(); ++k) v *= maps_.counit(w[k]);
    out += v;
  }
  return out;
}

NcPoly HopfEngine::antipode(const NcPoly& f) {
  NcPoly out;
  for (const auto& [w, c] : f.terms()) out.add_scaled(antipode_word(w), c);
  return out;
}

TensorPoly HopfEngine::delta_left(const TensorPoly& t) {
  if (t.arity() != 2) throw ArityMismatch(2, t.arity());
  TensorPoly out(3);
  for (const auto& [legs, c] : t.terms())
    for (const auto& [d, cd] : delta_word(legs[0]).terms()) out.add_term({d[0], d[1], legs[1]}, c * cd);
  return out;
}

TensorPoly HopfEngine::delta_right(const TensorPoly& t) {
  if (t.arity() != 2) throw ArityMismatch(2, t.arity());
  TensorPoly out(3);
  for (const auto& [legs, c] : t.terms())
    for (const auto& [d, cd] : delta_word(legs[1]).terms()) out.add_term({legs[0], d[0], d[1]}, c * cd);
  return out;
}

NcPoly HopfEngine::counit_left(const TensorPoly& t) const {
  NcPoly out;
  for (const auto& [legs, c] : t.terms()) out.add_term(legs[1], c * counit(NcPoly(legs[0])));
  return out;
}

NcPoly HopfEngine::counit_right(const TensorPoly& t) const {
  NcPoly out;
  for (const auto& [legs, c] : t.terms()) out.add_term(legs[0], c * counit(NcPoly(legs[1])));
  return out;
}

NcPoly HopfEngine::antipode_left(const TensorPoly& t) {
  NcPoly out;
  for (const auto& [legs, c] : t.terms()) out.add_scaled(alg_.mul(antipode_word(legs[0]), NcPoly(legs[1])), c);
  return out;
}

NcPoly HopfEngine::antipode_right(const TensorPoly& t) {
  NcPoly out;
  for (const auto& [legs, c] : t.terms()) out.add_scaled(alg_.mul(NcPoly(legs[0]), antipode_word(legs[1])), c);
  return out;
}

TensorPoly apply_delta(const NcPoly& f, const NodalAlgebra& alg, const StructureMaps& maps) {
  return HopfEngine(alg, maps).delta(f);
}

Scalar apply_counit(const NcPoly& f, const StructureMaps& maps) {
  Scalar out;
  for (const auto& [w, c] : f.terms()) {
    Scalar v = c;
    for (std::size_t k = 0; k < w.size(); ++k) v *= maps.counit(w[k]);
    out += v;
  }
  return out;
}

NcPoly apply_antipode(const NcPoly& f, const NodalAlgebra& alg, const StructureMaps& maps) {
  return HopfEngine(alg, maps).antipode(f);
}

Report check_welldefined(const NodalAlgebra& alg, const StructureMaps& maps) {
  Report report{"welldefined", alg.point()};
  HopfEngine engine(alg, maps);
  for (const Rule& rule : alg.seed().rules()) {
    NcPoly relation = NcPoly(rule.lhs) - rule.rhs;
    const std::string name = rule.lhs.str();
    report.add_zero("delta " + name, engine.delta(relation));
    report.add_zero("counit " + name, NcPoly(engine.counit(relation)));
    report.add_zero("antipode " + name, alg.nf(engine.antipode(relation)));
  }
  report.details["relations"] = alg.seed().size();
  return report;
}

namespace {

struct AxiomResiduals {
  TensorPoly coassociativity{3};
  NcPoly counit_left, counit_right, antipode_left, antipode_right;
};

AxiomResiduals axiom_residuals(HopfEngine& engine, const NcPoly& f) {
  const NodalAlgebra& alg = engine.algebra();
  NcPoly normal = alg.nf(f);
  NcPoly eps(engine.counit(f));
  TensorPoly d = engine.delta(f);
  AxiomResiduals r;
  r.coassociativity = engine.delta_left(d) - engine.delta_right(d);
  r.counit_left = engine.counit_left(d) - normal;
  r.counit_right = engine.counit_right(d) - normal;
  r.antipode_left = engine.antipode_left(d) - eps;
  r.antipode_right = engine.antipode_right(d) - eps;
  return r;
}

void record(Report& report, const std::string& suffix, const AxiomResiduals& r) {
  report.add_zero("coassociativity " + suffix, r.coassociativity);
  report.add_zero("counit left " + suffix, r.counit_left);
  report.add_zero("counit right " + suffix, r.counit_right);
  report.add_zero("antipode left " + suffix, r.antipode_left);
  report.add_zero("antipode right " + suffix, r.antipode_right);
}

}  // namespace

Report check_hopf_axioms(const NodalAlgebra& alg, const StructureMaps& maps, std::size_t samples,
                         std::uint64_t seed) {
  Report report{"hopf_axioms", alg.point()};
  HopfEngine engine(alg, maps);
  for (Letter l : kAlphabet) record(report, Word(l).str(), axiom_residuals(engine, NcPoly(l)));

  // Random elements are aggregated per law; the first failing residual is kept.
  Sampler sampler(seed);
  const std::vector<Scalar> coeffs = {1, -1, 2, -2, alg.point().q(), alg.point().p()};
  std::optional<AxiomResiduals> failing;
  std::size_t failed_samples = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    NcPoly f = sampler.element(6, coeffs);
    AxiomResiduals r = axiom_residuals(engine, f);
    bool ok = r.coassociativity.is_zero() && r.counit_left.is_zero() && r.counit_right.is_zero() &&
              r.antipode_left.is_zero() && r.antipode_right.is_zero();
    if (!ok) {
      ++failed_samples;
      if (!failing) failing = std::move(r);
    }
  }
  record(report, "random", failing.value_or(AxiomResiduals{}));

  report.details["samples"] = samples;
  report.details["seed"] = seed;
  report.details["failed_samples"] = failed_samples;
  NcPoly s2x = engine.antipode(engine.antipode(NcPoly(Letter::x)));
  NcPoly s2y = engine.antipode(engine.antipode(NcPoly(Letter::y)));
  report.details["S^2(x)"] = format_poly(s2x);
  report.details["S^2(y)"] = format_poly(s2y);
  return report;
}

Report check_group_likes(const NodalAlgebra& alg, const StructureMaps& maps) {
  Report report{"group_likes", alg.point()};
  HopfEngine engine(alg, maps);
  for (int n = 0; n <= 1; ++n)
    for (int m = -3; m <= 3; ++m) {
      Word w = BasisIndex{0, 0, 0, m, n}.word();
      NcPoly f(w);
      report.add_zero("delta " + w.pretty(), engine.delta(f) - TensorPoly::pure({w, w}));
      report.add_zero("counit " + w.pretty(), NcPoly(engine.counit(f) - Scalar(1)));
    }
  const CurvePoint& pt = alg.point();
  NcPoly x_twisted = parse_expr("x - q*a", pt);
  NcPoly y_twisted = parse_expr("y - p*b", pt);
  NcPoly one(Scalar(1));
  report.add_zero("twisted primitive x - q*a",
                  engine.delta(x_twisted) - TensorPoly::product_of({one, x_twisted}) -
                      TensorPoly::product_of({x_twisted, NcPoly(Letter::a)}));
  report.add_zero("twisted primitive y - p*b",
                  engine.delta(y_twisted) - TensorPoly::product_of({one, y_twisted}) -
                      TensorPoly::product_of({y_twisted, NcPoly(Letter::b)}));
  return report;
}

Report check_identities(const NodalAlgebra& alg) {
  Report report{"identities", alg.point()};
  const char* identities[][2] = {
      {"(y-p*b)^2 = y^2 - p^2*b^2", "(y-p*b)^2 - y^2 + p^2*b^2"},
      {"(x-q*a)^2 + (x-q*a)^3 = x^2 + x^3 - (q^2+q^3)*a^3",
       "(x-q*a)^2 + (x-q*a)^3 - x^2 - x^3 + (q^2+q^3)*a^3"},
      {"(y-p*b)^2 = (x-q*a)^2 + (x-q*a)^3", "(y-p*b)^2 - (x-q*a)^2 - (x-q*a)^3"},
  };
  for (const auto& [label, expr] : identities) report.add_zero(label, alg.nf(parse_expr(expr, alg.point())));
  return report;
}

Report check_coideal(const NodalAlgebra& alg, const StructureMaps& maps, std::size_t max_deg) {
  Report report{"coideal", alg.point()};
  HopfEngine engine(alg, maps);
  for (std::size_t j = 0; j <= 1; ++j)
    for (std::size_t i = 0; i + j <= max_deg; ++i) {
      Word w = Word::power(Letter::x, i) * Word::power(Letter::y, j);
      TensorPoly d = engine.delta(NcPoly(w));
      TensorPoly outside(2);
      for (const auto& [legs, c] : d.terms())
        if (!is_b_word(legs[0])) outside.add_term(legs, c);
      report.add_zero("delta " + w.pretty(), outside);
    }
  report.details["max_deg"] = max_deg;
  return report;
}

AltGenerators alt_generators(const NodalAlgebra& alg) {
  const CurvePoint& pt = alg.point();
  AltGenerators gens;
  gens.c = alg.nf(parse_expr("3*x - (1+3*q)*a + 1", pt));
  gens.d = alg.nf(parse_expr("3*y - 6*p*b", pt));
  NcPoly a(Letter::a);
  gens.e = alg.mul(a, gens.c) + alg.mul(gens.c, a) * Scalar::root();
  return gens;
}

Report check_alt_presentation(const NodalAlgebra& alg) {
  Report report{"alt_presentation", alg.point()};
  const auto [c, d, e] = alt_generators(alg);
  const Scalar& q = alg.point().q();
  const Scalar r = Scalar::root();
  const Scalar r_inv = r.inverse();
  const NcPoly one(Scalar(1)), a(Letter::a), g(Letter::g), b(Letter::b);
  const NcPoly a3 = NcPoly(Word("aaa"));
  auto m = [&alg](const NcPoly& u, const NcPoly& v) { return alg.mul(u, v); };

  report.add_zero("a*a^-1 = 1", m(a, g) - one);
  report.add_zero("a^-1*a = 1", m(g, a) - one);
  report.add_zero("a*b = b*a", m(a, b) - m(b, a));
  report.add_zero("a*c + r*c*a = e", m(a, c) + m(c, a) * r - e);
  report.add_zero("a*d = d*a", m(a, d) - m(d, a));
  report.add_zero("a*e + r^-1*e*a = 0", m(a, e) + m(e, a) * r_inv);
  report.add_zero("b*c = c*b", m(b, c) - m(c, b));
  report.add_zero("b*d = -d*b", m(b, d) + m(d, b));
  report.add_zero("b*e = e*b", m(b, e) - m(e, b));
  report.add_zero("b^2 = a^3", m(b, b) - a3);
  report.add_zero("c*d = d*c", m(c, d) - m(d, c));
  report.add_zero("r^-1*c*e + e*c = 3*(a - a^3)", m(c, e) * r_inv + m(e, c) - (a - a3) * Scalar(3));
  report.add_zero("d*e = e*d", m(d, e) - m(e, d));
  Scalar tail = (Scalar(1) + Scalar(3) * q) * (Scalar(-2) + Scalar(6) * q + Scalar(9) * q * q);
  report.add_zero("3*d^2 = c^3 - 3*c + 2 + (1+3q)(-2+6q+9q^2)*a^3",
                  m(d, d) * Scalar(3) - m(m(c, c), c) + c * Scalar(3) - NcPoly(Scalar(2)) - a3 * tail);
  report.details["c"] = format_poly(c);
  report.details["d"] = format_poly(d);
  report.details["e"] = format_poly(e);
  // Nonzero exactly when p != 0: b d + d b = -6p a^3 for d = 3y - 6pb.
  report.details["b*d + d*b"] = format_poly(m(b, d) + m(d, b));
  return report;
}

namespace {

using SparseVec = std::map<Word, Scalar>;

void axpy(SparseVec& y, const SparseVec& x, const Scalar& alpha) {
  for (const auto& [k, v] : x) {
    auto [it, inserted] = y.try_emplace(k, v * alpha);
    if (!inserted) {
      it->second += v * alpha;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

// Column echelon basis over K. Each stored vector has a leading row (its
// smallest word) that no other stored vector starts with, and remembers
// which combination of the original columns produced it.
class Echelon {
 public:
  // Returns the reduced remainder of `v`; `combo` tracks the combination.
  void reduce(SparseVec& v, SparseVec& combo) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto pivot = pivots_.find(it->first);
      if (pivot == pivots_.end()) {
        ++it;
        continue;
      }
      Scalar factor = -it->second;
      const Word row = it->first;
      axpy(v, pivot->second.first, factor);
      axpy(combo, pivot->second.second, factor);
      it = v.upper_bound(row);
    }
  }

  void insert(SparseVec v, SparseVec combo) {
    reduce(v, combo);
    if (v.empty()) return;
    Scalar inv = v.begin()->second.inverse();
    for (auto& [k, c] : v) c *= inv;
    for (auto& [k, c] : combo) c *= inv;
    Word lead = v.begin()->first;
    pivots_.emplace(std::move(lead), std::make_pair(std::move(v), std::move(combo)));
  }

 private:
  std::map<Word, std::pair<SparseVec, SparseVec>> pivots_;
};

}  // namespace

UnitsReport units_bounded_check(const NodalAlgebra& alg, const NcPoly& f, std::size_t max_len) {
  if (f.is_zero()) throw Error("units check needs a nonzero element");
  UnitsReport report;
  report.element = alg.nf(f);
  report.max_len = max_len;

  Echelon echelon;
  std::set<Word> rows;
  for (std::size_t L = 0; L <= max_len; ++L)
    for (const Word& w : basis_words_of_length(L)) {
      ++report.unknowns;
      NcPoly column = alg.mul(report.element, NcPoly(w));
      for (const auto& [row, c] : column.terms()) rows.insert(row);
      echelon.insert(SparseVec(column.terms().begin(), column.terms().end()), SparseVec{{w, Scalar(1)}});
    }
  report.equations = rows.size();

  // Solve for the unit vector at the empty word.
  SparseVec target{{Word(), Scalar(1)}};
  SparseVec combo;
  echelon.reduce(target, combo);
  if (!target.empty()) return report;

  // target - sum(factor * column) = 0, so u = -combo
  NcPoly u;
  for (const auto& [w, c] : combo) u.add_term(w, -c);
  if (alg.mul(report.element, u) != NcPoly(Scalar(1))) throw Error("units check: inconsistent solution");
  report.two_sided = alg.mul(u, report.element) == NcPoly(Scalar(1));
  report.inverse = std::move(u);
  return report;
}

json to_json(const UnitsReport& report) {
  return json{{"element", format_poly(report.element)},
              {"max_len", report.max_len},
              {"unknowns", report.unknowns},
              {"equations", report.equations},
              {"invertible", report.invertible()},
              {"inverse", report.inverse ? json(format_poly(*report.inverse)) : json(nullptr)},
              {"two_sided", report.two_sided},
              {"scope", report.inverse ? "exact inverse found"
                                       : "no inverse supported on basis words of length <= " +
                                             std::to_string(report.max_len) + " (bounded evidence)"}};
}

}  // namespace curveform
