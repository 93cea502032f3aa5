#include "wzpi/ratfunc.hpp"

#include "wzpi/errors.hpp"

#include <utility>

namespace wzpi {

RatFunc::RatFunc(const Polynomial& num, const Polynomial& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    normalize();
}

RatFunc::RatFunc(Polynomial num, Polynomial den, Reduced) : num_(std::move(num)), den_(std::move(den)) {
    // Inputs are coprime already; only fix the unit.
    auto [unit, den_normal] = den_.unit_normal();
    den_ = std::move(den_normal);
    num_ *= 1 / unit;
    if (num_.is_zero()) den_ = Polynomial(1);
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    if (!den_.is_constant()) {
        const Polynomial g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_quotient(num_, g);
            den_ = exact_quotient(den_, g);
        }
    }
    auto [unit, den_normal] = den_.unit_normal();
    den_ = std::move(den_normal);
    num_ *= 1 / unit;
}

BigRational RatFunc::constant_value() const {
    if (!is_constant()) throw UsageError("constant_value of a non-constant rational function");
    return num_.constant_value() / den_.constant_value();
}

RatFunc RatFunc::substitute(Var v, const RatFunc& value) const {
    if (!(vars() & mask_of(v))) return *this;
    // Homogenize: p(a/b) = P(a, b) / b^deg.
    auto homogenize = [&](const Polynomial& p, int deg) {
        const auto coeffs = p.coefficients(v);
        Polynomial acc;
        const Polynomial& a = value.numerator();
        const Polynomial& b = value.denominator();
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i].is_zero()) continue;
            acc += coeffs[i] * a.pow(static_cast<unsigned>(i)) * b.pow(static_cast<unsigned>(deg - static_cast<int>(i)));
        }
        return acc;
    };
    const int dn = std::max(0, num_.degree(v));
    const int dd = std::max(0, den_.degree(v));
    const Polynomial top = homogenize(num_, dn);
    const Polynomial bottom = homogenize(den_, dd);
    const Polynomial& b = value.denominator();
    if (dn >= dd) return RatFunc(top, bottom * b.pow(static_cast<unsigned>(dn - dd)));
    return RatFunc(top * b.pow(static_cast<unsigned>(dd - dn)), bottom);
}

RatFunc RatFunc::shift(Var v, const BigRational& c) const {
    if (c == 0) return *this;
    // Shifting is a ring automorphism, so the reduced form is preserved.
    return RatFunc(num_.shift(v, c), den_.shift(v, c), Reduced{});
}

RatFunc RatFunc::evaluate(Var v, const BigRational& value) const {
    const Polynomial d = den_.evaluate(v, value);
    if (d.is_zero()) throw PoleError("rational function evaluated at a pole");
    return RatFunc(num_.evaluate(v, value), d);
}

std::pair<int, std::size_t> RatFunc::complexity() const {
    return {std::max(0, num_.total_degree()) + std::max(0, den_.total_degree()), num_.term_count() + den_.term_count()};
}

RatFunc RatFunc::inverse() const {
    if (num_.is_zero()) throw DomainError("inverse of zero rational function");
    return RatFunc(den_, num_, Reduced{});
}

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Reduced{});
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    if (a.den_.is_constant() && b.den_.is_constant())
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    const Polynomial g = poly_gcd(a.den_, b.den_);
    const Polynomial da = exact_quotient(a.den_, g);
    const Polynomial db = exact_quotient(b.den_, g);
    return RatFunc(a.num_ * db + b.num_ * da, da * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    const Polynomial g1 = poly_gcd(a.num_, b.den_);
    const Polynomial g2 = poly_gcd(b.num_, a.den_);
    return RatFunc(exact_quotient(a.num_, g1) * exact_quotient(b.num_, g2),
                   exact_quotient(a.den_, g2) * exact_quotient(b.den_, g1), RatFunc::Reduced{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

std::string RatFunc::to_string(const VarNames& names) const {
    if (den_ == Polynomial(1)) return num_.to_string(names);
    return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

RatFunc sum_lazy(const std::vector<RatFunc>& terms) {
    Polynomial den(1);
    for (const auto& t : terms)
        if (!t.is_zero()) den = poly_lcm(den, t.denominator());
    Polynomial num;
    for (const auto& t : terms)
        if (!t.is_zero()) num += t.numerator() * exact_quotient(den, t.denominator());
    return RatFunc(num, den);
}

} // namespace wzpi
