#pragma once

#include "wzpi/polynomial.hpp"

#include <string>
#include <vector>

namespace wzpi {

/// Element of Q(n, k, z, ...): a reduced quotient of polynomials whose
/// denominator is integer-primitive with positive lex-leading coefficient.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(const Polynomial& p) : num_(p), den_(1) {} // NOLINT
    RatFunc(const BigRational& c) : num_(c), den_(1) {} // NOLINT
    RatFunc(long c) : num_(c), den_(1) {} // NOLINT
    /// Normalizing constructor; throws DomainError for a zero denominator.
    RatFunc(const Polynomial& num, const Polynomial& den);

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }
    BigRational constant_value() const;
    VarMask vars() const { return static_cast<VarMask>(num_.vars() | den_.vars()); }

    RatFunc substitute(Var v, const RatFunc& value) const;
    RatFunc shift(Var v, const BigRational& c) const;
    RatFunc evaluate(Var v, const BigRational& value) const;

    /// Sum of numerator and denominator total degrees, then term count;
    /// used as the pivot cost in elimination.
    std::pair<int, std::size_t> complexity() const;

    RatFunc inverse() const;
    RatFunc pow(int e) const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string(const VarNames& names = {}) const;

private:
    struct Reduced {};
    RatFunc(Polynomial num, Polynomial den, Reduced);
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

/// Sum of many terms with a single normalization at the end.
RatFunc sum_lazy(const std::vector<RatFunc>& terms);

} // namespace wzpi
