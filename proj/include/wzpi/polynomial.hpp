#pragma once

#include "wzpi/exact.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace wzpi {

/// Variable slots shared by every polynomial in the engine. The term DSL maps
/// the summation variable to N, the recurrence variable to K and the free
/// parameter to Z; J is an auxiliary shift variable used by dispersion.
enum class Var : std::uint8_t { N = 0, K = 1, Z = 2, J = 3 };

inline constexpr std::size_t kVarCount = 4;

using Exponents = std::array<std::uint16_t, kVarCount>;

/// Bit i set when variable slot i occurs.
using VarMask = std::uint8_t;

constexpr VarMask mask_of(Var v) { return static_cast<VarMask>(1u << static_cast<unsigned>(v)); }
constexpr std::size_t slot(Var v) { return static_cast<std::size_t>(v); }

/// Display names per slot.
struct VarNames {
    std::array<std::string, kVarCount> names{"n", "k", "z", "j"};
    const std::string& operator[](Var v) const { return names[slot(v)]; }
};

/// Sparse multivariate polynomial over Q. Terms are kept in descending
/// lexicographic exponent order (N > K > Z > J), never with zero coefficients,
/// so equal polynomials compare equal structurally.
class Polynomial {
public:
    using Terms = std::map<Exponents, BigRational, std::greater<>>;

    Polynomial() = default;
    Polynomial(const BigRational& c); // NOLINT: constants convert implicitly
    Polynomial(long c) : Polynomial(BigRational(c)) {} // NOLINT

    static Polynomial variable(Var v);
    static Polynomial monomial(const BigRational& c, const Exponents& e);
    /// c0 + c1*v
    static Polynomial linear(Var v, const BigRational& c1, const BigRational& c0);

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// Constant term value; requires is_constant().
    BigRational constant_value() const;
    BigRational coefficient(const Exponents& e) const;

    const Terms& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    /// Degree in v; -1 for the zero polynomial.
    int degree(Var v) const;
    int total_degree() const;
    VarMask vars() const;
    bool involves(Var v) const { return (vars() & mask_of(v)) != 0; }

    /// Lex-leading coefficient (zero polynomial: 0).
    BigRational leading_coefficient() const;
    const Exponents& leading_exponents() const;

    /// Coefficients in v: result[i] multiplies v^i.
    std::vector<Polynomial> coefficients(Var v) const;
    static Polynomial from_coefficients(Var v, const std::vector<Polynomial>& coeffs);
    Polynomial leading_coefficient_in(Var v) const;

    Polynomial substitute(Var v, const Polynomial& value) const;
    /// p(..., v + c, ...)
    Polynomial shift(Var v, const BigRational& c) const;
    Polynomial evaluate(Var v, const BigRational& value) const;

    Polynomial pow(unsigned e) const;

    /// Unit u and primitive q with p = u * q, q having coprime integer
    /// coefficients and a positive leading coefficient. Zero gives (1, 0).
    std::pair<BigRational, Polynomial> unit_normal() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const BigRational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    std::string to_string(const VarNames& names = {}) const;

private:
    void add_term(const Exponents& e, const BigRational& c);

    Terms terms_;
};

/// Normalized gcd: primitive integer coefficients, positive leading
/// coefficient; gcd(0, 0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b);

/// a / b when b divides a exactly, otherwise nullopt.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Like divide_exact but throws UsageError on a nonzero remainder.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);

/// Sparse pseudo-remainder of a by b as polynomials in x.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, Var x);

/// gcd of the coefficients of p viewed as a polynomial in x.
Polynomial content_in(const Polynomial& p, Var x);

Polynomial resultant(const Polynomial& a, const Polynomial& b, Var x);

/// Integers r with p|_{x=r} identically zero in the remaining variables,
/// ascending. p must not be the zero polynomial.
std::vector<BigInt> integer_roots(const Polynomial& p, Var x);

/// All j >= 0 with deg_n gcd(p(n), q(n + j)) > 0, via the integer roots of
/// Res_n(p(n), q(n + j)). Coefficients may involve K and Z (rational-function
/// field). Throws DomainError on a zero input.
std::set<long> dispersion_set(const Polynomial& p, const Polynomial& q, Var n = Var::N);

} // namespace wzpi
