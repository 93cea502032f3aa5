#include "wzpi/series.hpp"

#include "wzpi/errors.hpp"

#include <algorithm>

namespace wzpi {

namespace {

BigInt ceil_rational(const BigRational& x) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

std::vector<BigRational> rational_coefficients(const Polynomial& p, Var n) {
    if ((p.vars() & static_cast<VarMask>(~mask_of(n))) != 0)
        throw UsageError("series ratio still depends on unassigned parameters");
    std::vector<BigRational> out;
    for (const auto& c : p.coefficients(n)) out.push_back(c.is_zero() ? BigRational(0) : c.constant_value());
    return out;
}

BigRational horner(const std::vector<BigRational>& c, const BigRational& x) {
    BigRational r = 0;
    for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
}

// All real roots of p lie in |x| < 1 + max |a_i / a_d|.
BigRational cauchy_bound(const std::vector<BigRational>& c) {
    BigRational m = 0;
    const BigRational lead = abs(c.back());
    for (std::size_t i = 0; i + 1 < c.size(); ++i) m = std::max(m, BigRational(abs(c[i]) / lead));
    return m + 1;
}

std::vector<BigRational> trimmed(std::vector<BigRational> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

RatFunc specialize(const RatFunc& q, const Assignment& at, Var n) {
    RatFunc r = q;
    for (const auto& [v, value] : at)
        if (v != n) r = r.evaluate(v, value);
    return r;
}

BigFloat abs_upper(const BigFloat& x) {
    return BigFloat(abs(x.mantissa()) + x.error_ulps(), x.precision(), 0);
}

} // namespace

BigFloat EvalResult::enclosure() const {
    const BigRational ulps = tail_bound * BigRational(BigInt(1) << static_cast<unsigned long>(value.precision()));
    return value.widened(ceil_rational(ulps));
}

RatioBound analyze_ratio(const RatFunc& q, Var n) {
    const auto num = trimmed(rational_coefficients(q.numerator(), n));
    const auto den = trimmed(rational_coefficients(q.denominator(), n));
    RatioBound out;
    if (num.empty()) {
        out.rho = 0;
        out.rho_prime = BigRational(1, 2);
        out.n0 = 0;
        return out;
    }
    if (num.size() > den.size()) throw DivergenceError("term ratio grows without bound");
    out.rho = num.size() == den.size() ? BigRational(abs(num.back() / den.back())) : BigRational(0);
    if (out.rho >= 1) throw DivergenceError("term ratio limit has modulus >= 1");
    out.rho_prime = (1 + out.rho) / 2;

    // H = rho'^2 den^2 - num^2 has positive leading coefficient; beyond its
    // Cauchy bound and that of den, |num| <= rho' |den| and den != 0.
    std::vector<BigRational> h(2 * den.size() - 1, 0);
    const BigRational r2 = out.rho_prime * out.rho_prime;
    for (std::size_t i = 0; i < den.size(); ++i)
        for (std::size_t j = 0; j < den.size(); ++j) h[i + j] += r2 * den[i] * den[j];
    for (std::size_t i = 0; i < num.size(); ++i)
        for (std::size_t j = 0; j < num.size(); ++j) h[i + j] -= num[i] * num[j];
    h = trimmed(h);
    BigRational bound = 0;
    if (h.size() > 1) bound = std::max(bound, cauchy_bound(h));
    if (den.size() > 1) bound = std::max(bound, cauchy_bound(den));
    out.n0 = std::max<long>(0, ceil_rational(bound).get_si());
    return out;
}

BigFloat initial_term(const HyperTerm& term, const Assignment& at, long precision) {
    Assignment full = at;
    full[Var::N] = 0;
    auto value_of = [&](const Polynomial& p) {
        Polynomial r = p;
        for (const auto& [v, x] : full) r = r.evaluate(v, x);
        if (!r.is_constant()) throw UsageError("initial term depends on unassigned variables");
        return r.constant_value();
    };
    BigRational exact = term.constant();
    BigFloat irrational = BigFloat::from_rational(1, precision);
    bool has_irrational = false;
    for (const auto& f : term.poch()) {
        const BigRational run = value_of(Polynomial::variable(f.run));
        if (!is_integer(run)) throw DomainError("Pochhammer index at a non-integer value");
        const BigRational v = pochhammer_exact(value_of(f.base), run.get_num().get_si());
        if (v == 0 && f.power < 0) throw PoleError("denominator Pochhammer vanishes at n = 0");
        for (int i = 0; i < std::abs(f.power); ++i) {
            if (f.power > 0) exact *= v;
            else exact /= v;
        }
    }
    for (const auto& f : term.exps()) {
        const BigRational base = value_of(f.base);
        const BigRational e = value_of(f.exponent);
        if (is_integer(e)) {
            const long ei = e.get_num().get_si();
            if (base == 0 && ei < 0) throw PoleError("zero base with negative exponent");
            for (long i = 0; i < std::labs(ei); ++i) {
                if (ei > 0) exact *= base;
                else exact /= base;
            }
        } else if (base != 1) {
            irrational = irrational * pow_rational(base, e, precision);
            has_irrational = true;
        }
    }
    for (const auto& f : term.polys()) {
        const BigRational v = value_of(f.value);
        if (v == 0 && f.power < 0) throw PoleError("denominator polynomial vanishes at n = 0");
        for (int i = 0; i < std::abs(f.power); ++i) {
            if (f.power > 0) exact *= v;
            else exact /= v;
        }
    }
    if (!has_irrational) return BigFloat::from_rational(exact, precision);
    return irrational.mul_rational(exact);
}

EvalResult eval_series_weighted_by(const HyperTerm& term, const Polynomial& weight, const Assignment& at,
                                   int digits) {
    if (digits < 1) throw UsageError("digits must be positive");
    const long prec = working_bits(digits);
    const RatFunc q = specialize(shift_quotient(term, Var::N), at, Var::N);
    const auto qnum = rational_coefficients(q.numerator(), Var::N);
    const auto qden = rational_coefficients(q.denominator(), Var::N);
    const auto wc = rational_coefficients(specialize(RatFunc(weight), at, Var::N).numerator(), Var::N);

    // Tail analysis on the weighted ratio q(n) w(n+1) / w(n).
    const RatFunc wq = weight.is_constant() ? q : q * RatFunc(weight.shift(Var::N, 1), weight);
    const RatioBound rb = analyze_ratio(specialize(wq, at, Var::N), Var::N);

    BigFloat t = initial_term(term, at, prec);
    BigFloat sum = BigFloat::from_rational(0, prec);
    BigRational limit = 1;
    for (int i = 0; i < digits; ++i) limit /= 10;

    EvalResult out;
    out.requested_digits = digits;
    const BigRational tail_factor = rb.rho_prime / (1 - rb.rho_prime);
    for (long n = 0;; ++n) {
        const BigFloat u = t.mul_rational(horner(wc, n));
        sum = sum + u;
        out.terms_used = n + 1;
        // The next factor q(n) decides whether the series stops exactly.
        const BigRational qd = horner(qden, n);
        const BigRational qn = horner(qnum, n);
        if (qn == 0 && qd != 0) {
            out.tail_bound = 0;
            break;
        }
        if (n >= rb.n0) {
            const BigRational tail = abs_upper(u).center() * tail_factor;
            if (tail + sum.error_bound() <= limit) {
                out.tail_bound = tail;
                break;
            }
        }
        if (qd == 0) throw PoleError("term ratio has a pole at n = " + std::to_string(n));
        t = t.mul_rational(qn / qd);
        if (n > 2000000) throw DivergenceError("series did not reach the requested precision");
    }
    out.value = sum;
    return out;
}

EvalResult eval_series(const HyperTerm& term, const Assignment& at, int digits) {
    return eval_series_weighted_by(term, Polynomial(1), at, digits);
}

EvalResult eval_weighted_series(const HyperTerm& term, const BigRational& a, const BigRational& b,
                                const BigRational& z0, int digits, const Assignment& extra) {
    Assignment at = extra;
    at[Var::Z] = z0;
    return eval_series_weighted_by(term, Polynomial::linear(Var::N, b, a), at, digits);
}

int verify_against(const HyperTerm& term, const BigFloat& target, int digits, const Assignment& at) {
    if (digits < 1) throw UsageError("digits must be positive");
    const EvalResult r = eval_series(term, at, digits + 3);
    return matched_digits(r.enclosure(), target, digits);
}

int verify_closed_form(const HyperTerm& term, const AlgebraicConstant& closed, int digits, const Assignment& at) {
    return verify_against(term, closed.evaluate(working_bits(digits + 3)), digits, at);
}

BigRational exact_partial_sum(const HyperTerm& term, const Assignment& at, long count) {
    BigRational s = 0;
    Assignment full = at;
    for (long n = 0; n < count; ++n) {
        full[Var::N] = n;
        s += eval_term_exact(term, full);
    }
    return s;
}

} // namespace wzpi
