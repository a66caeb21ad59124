#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>

#include "curveform/nodal.hpp"
#include "curveform/report.hpp"

namespace curveform {

// Values of the coproduct, counit and antipode on the generators; all other
// values follow by (anti-)multiplicativity. b^-1 is written a^-3 b.
class StructureMaps {
 public:
  static StructureMaps for_point(const CurvePoint& point);

  const TensorPoly& delta(Letter l) const { return delta_[index(l)]; }
  const Scalar& counit(Letter l) const { return counit_[index(l)]; }
  const NcPoly& antipode(Letter l) const { return antipode_[index(l)]; }

 private:
  static std::size_t index(Letter l);
  StructureMaps() = default;

  std::array<TensorPoly, 5> delta_{TensorPoly(2), TensorPoly(2), TensorPoly(2), TensorPoly(2),
                                   TensorPoly(2)};
  std::array<Scalar, 5> counit_;
  std::array<NcPoly, 5> antipode_;
};

// Evaluates the structure maps on elements of A with all tensor legs in
// normal form. Caches per-word values; not thread-safe.
class HopfEngine {
 public:
  HopfEngine(const NodalAlgebra& alg, const StructureMaps& maps) : alg_(alg), maps_(maps) {}

  const NodalAlgebra& algebra() const noexcept { return alg_; }

  TensorPoly delta(const NcPoly& f);
  Scalar counit(const NcPoly& f) const;
  NcPoly antipode(const NcPoly& f);

  // (Δ ⊗ id) and (id ⊗ Δ) applied to an element of A ⊗ A.
  TensorPoly delta_left(const TensorPoly& t);
  TensorPoly delta_right(const TensorPoly& t);
  // (ε ⊗ id) and (id ⊗ ε)
  NcPoly counit_left(const TensorPoly& t) const;
  NcPoly counit_right(const TensorPoly& t) const;
  // m (S ⊗ id) and m (id ⊗ S)
  NcPoly antipode_left(const TensorPoly& t);
  NcPoly antipode_right(const TensorPoly& t);

  // Componentwise product with every leg reduced.
  TensorPoly mul(const TensorPoly& f, const TensorPoly& h) const;
  TensorPoly reduce_legs(const TensorPoly& t) const;

 private:
  const TensorPoly& delta_word(const Word& w);
  const NcPoly& antipode_word(const Word& w);

  const NodalAlgebra& alg_;
  const StructureMaps& maps_;
  std::unordered_map<Word, TensorPoly> delta_cache_;
  std::unordered_map<Word, NcPoly> antipode_cache_;
};

TensorPoly apply_delta(const NcPoly& f, const NodalAlgebra& alg, const StructureMaps& maps);
Scalar apply_counit(const NcPoly& f, const StructureMaps& maps);
NcPoly apply_antipode(const NcPoly& f, const NodalAlgebra& alg, const StructureMaps& maps);

// Δ, ε and S annihilate lhs - rhs of every defining relation.
Report check_welldefined(const NodalAlgebra& alg, const StructureMaps& maps);

// Coassociativity, both counit laws and both antipode laws on the
// generators and on `samples` seeded random elements of length <= 6.
Report check_hopf_axioms(const NodalAlgebra& alg, const StructureMaps& maps,
                         std::size_t samples = 200, std::uint64_t seed = 42);

// a^m b^n are group-like and x - qa, y - pb are twisted primitive.
Report check_group_likes(const NodalAlgebra& alg, const StructureMaps& maps);

// The three displayed identities relating the perturbed coordinates.
Report check_identities(const NodalAlgebra& alg);

// Left legs of Δ(x^i y^j) lie in B for i + j <= max_deg.
Report check_coideal(const NodalAlgebra& alg, const StructureMaps& maps, std::size_t max_deg);

struct AltGenerators {
  NcPoly c;  // 3x - (1+3q) a + 1
  NcPoly d;  // 3y - 6p b
  NcPoly e;  // a c + r c a
};

AltGenerators alt_generators(const NodalAlgebra& alg);

// The fourteen relations in a^±1, b, c, d, e.
Report check_alt_presentation(const NodalAlgebra& alg);

struct UnitsReport {
  NcPoly element;
  std::size_t max_len = 0;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::optional<NcPoly> inverse;  // f * u = 1 with supp(u) of length <= max_len
  bool two_sided = false;         // u * f = 1 as well

  bool invertible() const { return inverse.has_value(); }
};

// Solves f u = 1 exactly over K for u supported on basis words of length at
// most max_len. A negative answer is bounded evidence only.
UnitsReport units_bounded_check(const NodalAlgebra& alg, const NcPoly& f, std::size_t max_len);

json to_json(const UnitsReport& report);

}  // namespace curveform
