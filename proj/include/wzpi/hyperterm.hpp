#pragma once

#include "wzpi/ratfunc.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wzpi {

/// Declared variables of a term. The summation variable occupies slot N, the
/// recurrence variable slot K and the free parameter is always named z (slot Z).
struct TermVars {
    std::string sum = "n";
    std::optional<std::string> rec = "k";
    bool has_z = true;

    VarNames names() const;
    /// Slot for a declared name; nullopt when undeclared.
    std::optional<Var> lookup(std::string_view name) const;
    VarMask discrete() const;

    friend bool operator==(const TermVars&, const TermVars&) = default;
};

/// (base)_{run}^power with base linear and free of the run variable.
struct PochFactor {
    Polynomial base;
    Var run = Var::N;
    int power = 1;
    friend bool operator==(const PochFactor&, const PochFactor&) = default;
};

/// base^exponent, base a nonzero constant or polynomial in z, exponent an
/// integer-coefficient linear form in the discrete variables.
struct ExpFactor {
    Polynomial base;
    Polynomial exponent;
    friend bool operator==(const ExpFactor&, const ExpFactor&) = default;
};

/// value^power for a nonzero polynomial value.
struct PolyFactor {
    Polynomial value;
    int power = 1;
    friend bool operator==(const PolyFactor&, const PolyFactor&) = default;
};

/// A hypergeometric kernel G(n, k[, z]) = constant * prod(factors), kept in
/// canonical form: equal bases merged, zero powers dropped, factors sorted.
class HyperTerm {
public:
    HyperTerm() = default;
    HyperTerm(TermVars vars, BigRational constant, std::vector<PochFactor> poch,
              std::vector<ExpFactor> exps, std::vector<PolyFactor> polys);

    const TermVars& vars() const noexcept { return vars_; }
    const BigRational& constant() const noexcept { return constant_; }
    const std::vector<PochFactor>& poch() const noexcept { return poch_; }
    const std::vector<ExpFactor>& exps() const noexcept { return exps_; }
    const std::vector<PolyFactor>& polys() const noexcept { return polys_; }

    /// Term times p^power (p is merged with the polynomial factors).
    HyperTerm times(const Polynomial& p, int power = 1) const;
    HyperTerm scaled(const BigRational& c) const;

    /// DSL text including the "vars:" header.
    std::string render() const;
    std::string render_expr() const;

    friend bool operator==(const HyperTerm&, const HyperTerm&) = default;

private:
    void canonicalize();

    TermVars vars_;
    BigRational constant_ = 1;
    std::vector<PochFactor> poch_;
    std::vector<ExpFactor> exps_;
    std::vector<PolyFactor> polys_;
};

/// Unreduced quotient as separate numerator and denominator factor lists.
struct FactoredRatio {
    std::vector<Polynomial> numer;
    std::vector<Polynomial> denom;

    RatFunc to_ratfunc() const;
};

/// G(..., v + shift, ...) / G(..., v, ...) factor by factor. Pochhammer bases
/// that move with v are paired with partners differing by an integer; a
/// shift that does not give a rational function is a DomainError.
FactoredRatio factored_shift_ratio(const HyperTerm& term, Var v, int shift);

/// G(v + 1) / G(v), normalized.
RatFunc shift_quotient(const HyperTerm& term, Var v);

/// G(v + shift) / G(v) computed directly (not by composing unit shifts).
RatFunc shift_ratio(const HyperTerm& term, Var v, int shift);

using Assignment = std::map<Var, BigRational>;

/// Value of the term with the given variables replaced; unassigned z stays
/// symbolic. Discrete variables must receive integers wherever they act as a
/// Pochhammer index or an exponent (fractional powers of bases other than 1
/// are a DomainError); a vanishing denominator factor is a PoleError.
RatFunc eval_term(const HyperTerm& term, const Assignment& at);

/// Exact rational value; every variable occurring in the term must be assigned.
BigRational eval_term_exact(const HyperTerm& term, const Assignment& at);

/// Least N with G(N', ...) = 0 for all N' >= N, from numerator Pochhammer
/// factors whose base is a nonpositive integer a (N = 1 - a); nullopt when no
/// factor terminates. A denominator that vanishes for 0 <= n < N is a PoleError.
std::optional<long> termination_bound(const HyperTerm& term, Var sum_var, const Assignment& others);

} // namespace wzpi
