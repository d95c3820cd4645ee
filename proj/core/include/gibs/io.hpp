#pragma once

#include "gibs/polynomial.hpp"

#include <string>
#include <vector>

namespace gibs {

/// Parses a polynomial system from text.
///
/// Format: a `vars:` header naming the variables, then one polynomial per
/// line.  Terms are separated by `+`/`-`; a term is a product of factors
/// joined with `*`, where a factor is a number (integer, decimal or
/// scientific) or a variable with an optional `^exponent`.  `#` starts a
/// comment; blank lines are ignored.
///
///     vars: x y
///     x^4 - 2*x^2*y + 1
///     3.5*y^2 - 1e-3
///
/// Polynomials that cancel to zero are dropped with a warning (appended to
/// *warnings if given).  Throws parse_error (with 1-based line/column) on
/// malformed input, unknown variables, or an empty effective system.
PolySystem parse_system(const std::string& text,
                        std::vector<std::string>* warnings = nullptr);

/// One-line rendering: terms in descending monomial order, coefficients
/// printed with a sign at `digits` significant digits, `*` between the
/// coefficient and the monomial ("+1*x^2 -1.414214").  Zero prints as "0".
std::string format_poly(const Polynomial& p, const std::vector<std::string>& names,
                        int digits = 7);

/// Full system rendering, starting with the `vars:` header; at digits >= 17
/// the output parses back to a bit-identical system.
std::string format_system(const PolySystem& P, int digits = 7);

} // namespace gibs
