#pragma once

#include <string>
#include <string_view>

#include "curveform/freealg.hpp"

namespace curveform {

// Parses an expression over the generators x, y, a, b (a^-k allowed) with
// the symbols q, p bound to the point coordinates and r to the root of unity.
// Grammar:
//   expr   := [+|-] term { (+|-) term }
//   term   := factor { * factor }
//   factor := atom [ ^ signed_int ]
//   atom   := x | y | a | b | q | p | r | rational | ( expr )
// The result is an element of the free algebra; nothing is reduced.
NcPoly parse_expr(std::string_view text, const CurvePoint& point);

// Same grammar without generators or point symbols; used for --q/--p values.
Scalar parse_scalar(std::string_view text);

// Deterministic text form, parseable by parse_expr. Terms are ordered by
// descending count of x and y letters, then descending lexicographic word
// order; a^-1 is printed for g.
std::string format_poly(const NcPoly& f);

// Coefficient-and-word rendering of a single term without the leading sign.
std::string format_scalar_factor(const Scalar& c);

}  // namespace curveform
