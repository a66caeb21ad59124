#pragma once

#include "curveform/hopf.hpp"

namespace curveform {

// Elements of C = A/B+A in the tail basis (ax)^l a^m b^n. The class of the
// empty word is the unit class.
using CPoly = NcPoly;
// Elements of C (x) A: left legs are tails, right legs normal words.
using CoactionValue = TensorPoly;

// pi(sum b_t t) = sum eps(b_t) t
CPoly project_pi(const NcPoly& f, const NodalAlgebra& alg);

// f lies in B+A iff pi(f) = 0, since B+A = sum over tails of B+ t.
bool in_bplus_a(const NcPoly& f, const NodalAlgebra& alg);

// Right action of A on C: pi(f) h = pi(f h).
CPoly c_act(const CPoly& c, const NcPoly& h, const NodalAlgebra& alg);

// lambda = (pi (x) id) Delta
CoactionValue coaction(const NcPoly& f, HopfEngine& engine);

// lambda(f) = unit (x) f on B-words of degree <= max_deg and differs from it
// on every other basis word of length <= max_deg.
Report check_recovery(const NodalAlgebra& alg, const StructureMaps& maps, std::size_t max_deg);

// NF(a^2 (x - q)) = -x a^2 - a x a - (1+q) a^2 + (1+3q) a^3 lies in AB+ but
// not in B+A.
Report check_witness(const NodalAlgebra& alg);

}  // namespace curveform
