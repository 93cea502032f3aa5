#pragma once

// Exact integers and rationals (GMP-backed), error-tracked fixed-point
// floats, and the constant oracles used by the numeric checks.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wzpi {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Canonical rational num/den. Throws DomainError for den == 0.
BigRational rational(const BigInt& num, const BigInt& den = 1);
BigRational rational(long num, long den = 1);

/// Parses "p", "-p" or "p/q".
BigRational parse_rational(std::string_view text);

/// "p" for integers, otherwise "p/q".
std::string to_string(const BigRational& value);

bool is_integer(const BigRational& value);

/// a (a+1) ... (a+n-1). For n < 0 returns 1 / ((a-1)(a-2)...(a+n)) and
/// throws PoleError when one of those factors is zero.
BigRational pochhammer_exact(const BigRational& a, long n);

/// Binary precision giving `digits` decimal digits plus ten guard digits.
long working_bits(int digits);

/// Fixed-point value mantissa / 2^precision with an absolute error bound
/// error_ulps / 2^precision. Every operation returns a bound that dominates
/// the propagated error of its inputs plus its own rounding.
class BigFloat {
public:
    BigFloat() = default;
    BigFloat(BigInt mantissa, long precision, BigInt error_ulps);

    static BigFloat from_rational(const BigRational& value, long precision);

    long precision() const noexcept { return precision_; }
    const BigInt& mantissa() const noexcept { return mantissa_; }
    const BigInt& error_ulps() const noexcept { return error_; }

    /// Center of the enclosure as an exact rational.
    BigRational center() const;
    BigRational error_bound() const;

    /// True when |x - center| <= error_bound.
    bool encloses(const BigRational& x) const;

    /// True when error_bound <= 10^-digits.
    bool error_within_decimal(int digits) const;

    /// Rescale; increasing precision is exact, decreasing adds one ulp.
    BigFloat with_precision(long precision) const;

    /// Same center, error increased by extra_ulps at this precision.
    BigFloat widened(const BigInt& extra_ulps) const;

    /// Upper bound on |x| in ulps of this precision.
    BigInt magnitude_bound_ulps() const;

    BigFloat operator-() const;
    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);

    BigFloat mul_rational(const BigRational& r) const;

    /// Truncated decimal rendering of the center.
    std::string to_decimal(int digits) const;
    double to_double() const;

private:
    BigInt mantissa_ = 0;
    long precision_ = 0;
    BigInt error_ = 0;
};

/// Number of leading decimal digits on which a and b provably agree:
/// the largest d <= cap with |a - b| + err(a) + err(b) <= 10^-d (0 if none).
int matched_digits(const BigFloat& a, const BigFloat& b, int cap);

/// pi from Machin's formula 16 atan(1/5) - 4 atan(1/239) with explicit
/// truncation and rounding bounds. Independent of every series in the
/// catalog. errorBound <= 10^-digits.
BigFloat pi_reference(int digits);
BigFloat pi_bits(long precision);

/// Square root at `digits` decimal digits. Throws DomainError when x is
/// certainly negative.
BigFloat sqrt_bigfloat(const BigFloat& x, int digits);
BigFloat sqrt_bits(const BigFloat& x, long precision);

/// base^exponent for a rational exponent p/q, real branch. Even q with a
/// negative base is a DomainError; zero base with exponent <= 0 a PoleError.
BigFloat pow_rational(const BigRational& base, const BigRational& exponent, long precision);

/// (p/q) * sqrt(d) * pi^e with d square-free and e in {0, -1}.
class AlgebraicConstant {
public:
    AlgebraicConstant() = default;
    AlgebraicConstant(BigRational rational_part, long radicand, int pi_power);

    const BigRational& rational_part() const noexcept { return rational_; }
    long radicand() const noexcept { return radicand_; }
    int pi_power() const noexcept { return pi_power_; }

    BigFloat evaluate(long precision) const;

    /// Text form "c", "c*sqrt(d)", "c*sqrt(d)/pi", "c/pi" with c rational.
    std::string to_string() const;
    static AlgebraicConstant parse(std::string_view text);

    friend bool operator==(const AlgebraicConstant&, const AlgebraicConstant&) = default;

private:
    BigRational rational_ = 0;
    long radicand_ = 1;
    int pi_power_ = 0;
};

} // namespace wzpi
