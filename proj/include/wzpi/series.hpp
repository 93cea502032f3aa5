#pragma once

#include "wzpi/hyperterm.hpp"

namespace wzpi {

/// Partial sum with its rounding error (inside value) and a rigorous bound
/// on the omitted tail.
struct EvalResult {
    BigFloat value;
    long terms_used = 0;
    BigRational tail_bound = 0;
    int requested_digits = 0;

    /// value widened by the tail bound: encloses the full series.
    BigFloat enclosure() const;
};

/// Convergence data for a term ratio q(n) with rational coefficients:
/// rho = lim |q(n)|, rho_prime = (1 + rho) / 2 and |q(n)| <= rho_prime for
/// every integer n >= n0.
struct RatioBound {
    BigRational rho;
    BigRational rho_prime;
    long n0 = 0;
};

/// Throws DivergenceError when rho >= 1.
RatioBound analyze_ratio(const RatFunc& q, Var n = Var::N);

/// G(0, ...) at the assignment; fractional powers go through pow_rational.
BigFloat initial_term(const HyperTerm& term, const Assignment& at, long precision);

/// sum_{n >= 0} G(n, ...) with every other variable fixed by `at` (k may be
/// any rational where the kernel is defined; z is substituted).
EvalResult eval_series(const HyperTerm& term, const Assignment& at, int digits);

/// sum_{n >= 0} (a + b n) c_n z0^n where the coefficient source has z^n
/// factors; theta = z d/dz becomes multiplication by n.
EvalResult eval_weighted_series(const HyperTerm& term, const BigRational& a, const BigRational& b,
                                const BigRational& z0, int digits, const Assignment& extra = {});

/// Same summation loop with an explicit weight polynomial in n.
EvalResult eval_series_weighted_by(const HyperTerm& term, const Polynomial& weight, const Assignment& at,
                                   int digits);

/// Matched decimal digits (capped at `digits`) between the series and a
/// target value, both computed with three guard digits.
int verify_closed_form(const HyperTerm& term, const AlgebraicConstant& closed, int digits, const Assignment& at = {});
int verify_against(const HyperTerm& term, const BigFloat& target, int digits, const Assignment& at = {});

/// Exact partial sum of the first `count` terms (n = 0 .. count-1); every
/// prefactor must be rational at the assignment.
BigRational exact_partial_sum(const HyperTerm& term, const Assignment& at, long count);

} // namespace wzpi
