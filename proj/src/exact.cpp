#include "wzpi/exact.hpp"

#include "wzpi/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <utility>

namespace wzpi {

namespace {

BigInt pow2(long bits) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(bits));
    return r;
}

BigInt pow10(long digits) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    return r;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

bool divides_exactly(const BigInt& a, const BigInt& b) {
    return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

BigInt isqrt(const BigInt& x) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

BigInt mul_2exp(const BigInt& x, long bits) {
    BigInt r;
    mpz_mul_2exp(r.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
    return r;
}

std::pair<BigFloat, BigFloat> aligned(const BigFloat& a, const BigFloat& b) {
    const long p = std::max(a.precision(), b.precision());
    return {a.with_precision(p), b.with_precision(p)};
}

} // namespace

BigRational rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

BigRational rational(long num, long den) {
    return rational(BigInt(num), BigInt(den));
}

BigRational parse_rational(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return rational(BigInt(s), BigInt(1));
        return rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw DomainError("not a rational number: '" + std::string(text) + "'");
    }
}

std::string to_string(const BigRational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_integer(const BigRational& value) { return value.get_den() == 1; }

BigRational pochhammer_exact(const BigRational& a, long n) {
    BigRational result = 1;
    if (n >= 0) {
        for (long i = 0; i < n; ++i) {
            result *= a + i;
            if (result == 0) break;
        }
        return result;
    }
    for (long i = 1; i <= -n; ++i) {
        const BigRational f = a - i;
        if (f == 0) throw PoleError("negative-index Pochhammer hits a zero factor");
        result /= f;
    }
    return result;
}

long working_bits(int digits) {
    return static_cast<long>(std::ceil((digits + 10) * 3.321928094887362)) + 16;
}

// ---------------------------------------------------------------- BigFloat

BigFloat::BigFloat(BigInt mantissa, long precision, BigInt error_ulps)
    : mantissa_(std::move(mantissa)), precision_(precision), error_(std::move(error_ulps)) {
    if (precision_ < 0) throw UsageError("negative BigFloat precision");
    if (error_ < 0) throw UsageError("negative BigFloat error bound");
}

BigFloat BigFloat::from_rational(const BigRational& value, long precision) {
    const BigInt scaled = mul_2exp(value.get_num(), precision);
    const BigInt& den = value.get_den();
    BigInt m = floor_div(scaled, den);
    return BigFloat(std::move(m), precision, divides_exactly(scaled, den) ? 0 : 1);
}

BigRational BigFloat::center() const { return rational(mantissa_, pow2(precision_)); }

BigRational BigFloat::error_bound() const { return rational(error_, pow2(precision_)); }

bool BigFloat::encloses(const BigRational& x) const {
    const BigRational diff = x - center();
    return abs(diff) <= error_bound();
}

bool BigFloat::error_within_decimal(int digits) const {
    return error_ * pow10(digits) <= pow2(precision_);
}

BigFloat BigFloat::with_precision(long precision) const {
    if (precision == precision_) return *this;
    if (precision > precision_) {
        const long shift = precision - precision_;
        return BigFloat(mul_2exp(mantissa_, shift), precision, mul_2exp(error_, shift));
    }
    const BigInt div = pow2(precision_ - precision);
    const bool exact = divides_exactly(mantissa_, div);
    return BigFloat(floor_div(mantissa_, div), precision, ceil_div(error_, div) + (exact ? 0 : 1));
}

BigFloat BigFloat::widened(const BigInt& extra_ulps) const {
    return BigFloat(mantissa_, precision_, error_ + extra_ulps);
}

BigInt BigFloat::magnitude_bound_ulps() const { return abs(mantissa_) + error_; }

BigFloat BigFloat::operator-() const { return BigFloat(-mantissa_, precision_, error_); }

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    auto [x, y] = aligned(a, b);
    return BigFloat(x.mantissa_ + y.mantissa_, x.precision_, x.error_ + y.error_);
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) { return a + (-b); }

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    auto [x, y] = aligned(a, b);
    const BigInt scale = pow2(x.precision_);
    const BigInt product = x.mantissa_ * y.mantissa_;
    const bool exact = divides_exactly(product, scale);
    BigInt m = floor_div(product, scale);
    const BigInt spread = abs(x.mantissa_) * y.error_ + abs(y.mantissa_) * x.error_ + x.error_ * y.error_;
    BigInt err = ceil_div(spread, scale) + (exact ? 0 : 1);
    return BigFloat(std::move(m), x.precision_, std::move(err));
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    auto [x, y] = aligned(a, b);
    const BigInt den_abs = abs(y.mantissa_);
    if (den_abs <= y.error_) throw DomainError("BigFloat division by a value not bounded away from zero");
    const BigInt scale = pow2(x.precision_);
    const BigInt numerator = x.mantissa_ * scale;
    const bool exact = divides_exactly(numerator, y.mantissa_);
    BigInt m = floor_div(numerator, y.mantissa_);
    BigInt err = 0;
    if (x.error_ != 0 || y.error_ != 0) {
        const BigInt spread = scale * (x.error_ * den_abs + abs(x.mantissa_) * y.error_);
        err = ceil_div(spread, den_abs * (den_abs - y.error_));
    }
    err += exact ? 0 : 1;
    return BigFloat(std::move(m), x.precision_, std::move(err));
}

BigFloat BigFloat::mul_rational(const BigRational& r) const {
    const BigInt product = mantissa_ * r.get_num();
    const bool exact = divides_exactly(product, r.get_den());
    BigInt m = floor_div(product, r.get_den());
    BigInt err = ceil_div(error_ * abs(r.get_num()), r.get_den()) + (exact ? 0 : 1);
    return BigFloat(std::move(m), precision_, std::move(err));
}

std::string BigFloat::to_decimal(int digits) const {
    const BigInt scaled = abs(mantissa_) * pow10(digits);
    BigInt q = floor_div(scaled, pow2(precision_));
    std::string s = q.get_str();
    if (digits > 0) {
        if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits + 1 - s.size()), '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    if (mantissa_ < 0) s.insert(0, "-");
    return s;
}

double BigFloat::to_double() const { return center().get_d(); }

int matched_digits(const BigFloat& a, const BigFloat& b, int cap) {
    auto [x, y] = aligned(a, b);
    const BigInt gap = abs(x.mantissa() - y.mantissa()) + x.error_ulps() + y.error_ulps();
    const BigInt scale = pow2(x.precision());
    if (gap == 0) return cap;
    int d = 0;
    BigInt scaled_gap = gap;
    while (d < cap) {
        scaled_gap *= 10;
        if (scaled_gap > scale) break;
        ++d;
    }
    return d;
}

// ---------------------------------------------------------------- constants

namespace {

// floor(2^precision * atan(1/x)) with an error bound in ulps.
std::pair<BigInt, BigInt> arctan_inverse(unsigned long x, long precision) {
    const BigInt x2 = BigInt(x) * x;
    BigInt power = pow2(precision) / x; // floor(S / x^(2k+1)), exact at every step
    BigInt sum = power;
    long terms = 1;
    for (unsigned long k = 1;; ++k) {
        power /= x2;
        if (power == 0) break;
        const BigInt term = power / (2 * k + 1);
        if (k % 2 == 1) sum -= term;
        else sum += term;
        ++terms;
    }
    // Each term is low by less than 2 ulps; the alternating tail is below 1 ulp.
    return {sum, BigInt(2 * terms + 1)};
}

} // namespace

BigFloat pi_bits(long precision) {
    auto [a, ea] = arctan_inverse(5, precision);
    auto [b, eb] = arctan_inverse(239, precision);
    return BigFloat(16 * a - 4 * b, precision, 16 * ea + 4 * eb);
}

BigFloat pi_reference(int digits) {
    if (digits < 1) throw DomainError("pi_reference needs at least one digit");
    return pi_bits(working_bits(digits));
}

BigFloat sqrt_bits(const BigFloat& x, long precision) {
    const BigFloat v = x.with_precision(std::max(precision, x.precision()));
    const long p = v.precision();
    const BigInt& m = v.mantissa();
    const BigInt& e = v.error_ulps();
    if (m + e < 0) throw DomainError("square root of a negative value");
    const BigInt scale = pow2(p);
    if (m - e > 0) {
        const BigInt radicand = m * scale;
        BigInt root = isqrt(radicand);
        const bool exact = root * root == radicand;
        BigInt err = exact ? 0 : 1;
        if (e != 0) err += ceil_div(e * scale, isqrt((m - e) * scale)) + 1;
        return BigFloat(std::move(root), p, std::move(err)).with_precision(precision);
    }
    // Enclosure touches zero: sqrt lies in [0, sqrt(2e / S)].
    const BigInt hi = isqrt(2 * e * scale) + 2;
    return BigFloat(0, p, hi).with_precision(precision);
}

BigFloat sqrt_bigfloat(const BigFloat& x, int digits) {
    if (digits < 1) throw DomainError("sqrt_bigfloat needs at least one digit");
    return sqrt_bits(x, working_bits(digits));
}

BigFloat pow_rational(const BigRational& base, const BigRational& exponent, long precision) {
    if (base == 0) {
        if (exponent > 0) return BigFloat(0, precision, 0);
        throw PoleError("zero base with non-positive exponent");
    }
    const BigInt& p = exponent.get_num();
    const BigInt& q = exponent.get_den();
    if (!p.fits_slong_p() || !q.fits_ulong_p()) throw DomainError("exponent too large");
    const long pl = p.get_si();
    const unsigned long ql = q.get_ui();
    BigRational powered = 1;
    {
        BigInt num, den;
        mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(std::labs(pl)));
        mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(std::labs(pl)));
        powered = pl >= 0 ? rational(num, den) : rational(den, num);
    }
    if (ql == 1) return BigFloat::from_rational(powered, precision);
    bool negative = powered < 0;
    if (negative && ql % 2 == 0) throw DomainError("even root of a negative base");
    const BigRational magnitude = abs(powered);
    // floor(root_q(floor(m * S^q))) is within 2 ulps of root_q(m) * S.
    const BigInt scaled = floor_div(mul_2exp(magnitude.get_num(), precision * static_cast<long>(ql)), magnitude.get_den());
    BigInt root;
    mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), ql);
    if (negative) root = -root - 1;
    return BigFloat(std::move(root), precision, 2);
}

// ------------------------------------------------------- AlgebraicConstant

namespace {

bool square_free(long d) {
    for (long f = 2; f * f <= d; ++f)
        if (d % (f * f) == 0) return false;
    return true;
}

} // namespace

AlgebraicConstant::AlgebraicConstant(BigRational rational_part, long radicand, int pi_power)
    : rational_(std::move(rational_part)), radicand_(radicand), pi_power_(pi_power) {
    rational_.canonicalize();
    if (radicand_ < 1 || !square_free(radicand_)) throw DomainError("radicand must be a positive square-free integer");
    if (pi_power_ != 0 && pi_power_ != -1) throw DomainError("pi power must be 0 or -1");
}

BigFloat AlgebraicConstant::evaluate(long precision) const {
    BigFloat value = BigFloat::from_rational(rational_, precision);
    if (radicand_ != 1) value = value * sqrt_bits(BigFloat(BigInt(radicand_) * mul_2exp(1, precision), precision, 0), precision);
    if (pi_power_ == -1) value = value / pi_bits(precision);
    return value;
}

std::string AlgebraicConstant::to_string() const {
    std::string s = wzpi::to_string(rational_);
    if (radicand_ != 1) s += "*sqrt(" + std::to_string(radicand_) + ")";
    if (pi_power_ == -1) s += "/pi";
    return s;
}

AlgebraicConstant AlgebraicConstant::parse(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    int pi_power = 0;
    if (s.size() >= 3 && s.ends_with("/pi")) {
        pi_power = -1;
        s.resize(s.size() - 3);
    }
    long radicand = 1;
    if (const auto pos = s.find("*sqrt("); pos != std::string::npos) {
        if (!s.ends_with(")")) throw DomainError("malformed constant: '" + std::string(text) + "'");
        const std::string inner = s.substr(pos + 6, s.size() - pos - 7);
        try {
            radicand = std::stol(inner);
        } catch (const std::exception&) {
            throw DomainError("malformed radicand: '" + inner + "'");
        }
        s.resize(pos);
    }
    return AlgebraicConstant(parse_rational(s), radicand, pi_power);
}

} // namespace wzpi
