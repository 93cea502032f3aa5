#pragma once

#include "wzpi/hyperterm.hpp"

#include <string_view>

namespace wzpi {

/// Parse the term DSL:
///
///     vars: n, k, z        # optional header, first name is summed over
///     3*(64/63)^k*poch(-k,n)*poch(1/2,n)^2/(poch(1/2-k,n)^2*poch(1,n))*(42*n+5)
///
/// Without a header the variables default to `fallback`. Parenthesized
/// groups may hold polynomials or whole sub-expressions; "/" becomes a
/// negative power. Errors carry the line and column of the offending token.
HyperTerm parse_term(std::string_view text, const TermVars& fallback = TermVars{});

/// Parse a polynomial in the declared variables ("42*n+5", "n^2-1/2*k").
Polynomial parse_polynomial(std::string_view text, const TermVars& vars = TermVars{});

} // namespace wzpi
