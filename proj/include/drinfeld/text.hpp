#pragma once

// Text grammar shared by the CLI and reports.
//
//   polynomial := term (('+' | '-') term)*      e.g. "2*T^2+T+1", "T-1", "0"
//   term       := [int ['*']] 'T' ['^' int] | int
//   element    := '[' int (',' int)* ']' | int
//
// Integers are F_q encodings (base-p digits of the F_p coordinates); inside a
// polynomial they may be any integer, reduced to F_p when q = p and required
// to lie in [0, q) otherwise. A bare integer element denotes a constant of F_q.
// Formatting is canonical: terms from high to low degree, unit coefficients
// omitted on non-constant terms, L-elements always in bracket form.

#include <string>
#include <string_view>

#include "drinfeld/field.hpp"
#include "drinfeld/upoly.hpp"

namespace drinfeld {

/// Throws ValidationError on malformed input.
UPoly parse_upoly(const FieldTower* F, std::string_view text);
std::string format_upoly(const UPoly& f, char var = 'T');

/// Throws ValidationError on malformed input or out-of-range coordinates.
Elem parse_elem(const FieldTower& F, std::string_view text);
std::string format_elem(const FieldTower& F, Elem a);

}  // namespace drinfeld
