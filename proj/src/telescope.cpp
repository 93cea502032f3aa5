#include "wzpi/telescope.hpp"

#include "wzpi/errors.hpp"
#include "wzpi/gosper.hpp"

#include <algorithm>

namespace wzpi {

namespace {

VarMask parameter_field(Var sum) {
    VarMask field = 0;
    for (Var v : {Var::K, Var::Z, Var::N})
        if (v != sum) field = static_cast<VarMask>(field | mask_of(v));
    return field;
}

} // namespace

std::vector<Polynomial> normalize_operator(const std::vector<Polynomial>& coeffs) {
    std::vector<RatFunc> v;
    v.reserve(coeffs.size());
    for (const auto& p : coeffs) v.emplace_back(p);
    return primitive_vector(v).first;
}

std::optional<Telescoper> telescoper_of_order(const HyperTerm& term, Var sum, Var rec, int order) {
    if (order < 1) throw UsageError("telescoper order must be positive");
    const RatFunc qk = shift_quotient(term, rec);
    const RatFunc qn = shift_quotient(term, sum);

    // sigma_i = G(n, k+i) / G(n, k) by composing unit shifts.
    std::vector<RatFunc> sigma{RatFunc(1)};
    for (int i = 1; i <= order; ++i) sigma.push_back(sigma.back() * qk.shift(rec, i - 1));
    Polynomial D(1);
    for (const auto& s : sigma) D = poly_lcm(D, s.denominator());
    std::vector<Polynomial> w;
    for (const auto& s : sigma) w.push_back(s.numerator() * exact_quotient(D, s.denominator()));

    // T = G / D has shift quotient q(n) D(n) / D(n+1).
    const RatFunc r = qn * RatFunc(D, D.shift(sum, 1));
    const auto sol = parametric_gosper(r, w, sum, parameter_field(sum));
    if (!sol) return std::nullopt;
    Telescoper t;
    t.order = order;
    t.coeffs = sol->coeffs;
    t.certificate = sol->Y / RatFunc(D);
    t.sum = sum;
    t.rec = rec;
    return t;
}

std::optional<Telescoper> find_telescoper(const HyperTerm& term, Var sum, Var rec, int max_order) {
    if (max_order < 1) throw UsageError("max_order must be at least 1");
    for (int m = 1; m <= max_order; ++m)
        if (auto t = telescoper_of_order(term, sum, rec, m)) return t;
    return std::nullopt;
}

CertificateCheckReport verify_certificate(const HyperTerm& term, const Telescoper& t, long k_lo, long k_hi) {
    CertificateCheckReport rep;
    std::vector<RatFunc> lhs_terms;
    for (std::size_t i = 0; i < t.coeffs.size(); ++i) {
        if (t.coeffs[i].is_zero()) continue;
        lhs_terms.push_back(RatFunc(t.coeffs[i]) * shift_ratio(term, t.rec, static_cast<int>(i)));
    }
    const RatFunc q = shift_quotient(term, t.sum);
    const RatFunc& R = t.certificate;
    lhs_terms.push_back(-(R.shift(t.sum, 1) * q));
    lhs_terms.push_back(R);
    rep.residual = sum_lazy(lhs_terms);
    rep.identity_holds = rep.residual.is_zero();
    if (!rep.identity_holds) rep.details.push_back("telescoping identity has a nonzero residual");
    try {
        const auto bounds = boundary_check(term, t, k_lo, k_hi);
        rep.boundary_at_zero = bounds.boundary_at_zero;
        rep.tail_vanishes = bounds.tail_vanishes;
        rep.details.insert(rep.details.end(), bounds.details.begin(), bounds.details.end());
    } catch (const std::exception& e) {
        rep.details.push_back(std::string("boundary check skipped: ") + e.what());
    }
    return rep;
}

namespace {

// F(n, k) = R(n, k) G(n, k) at a concrete n, k as a product of factors, so a
// zero of G can cancel a pole of R only if the factors say so exactly.
RatFunc eval_F(const HyperTerm& term, const Telescoper& t, long n, long k) {
    const Assignment at{{t.sum, BigRational(n)}, {t.rec, BigRational(k)}};
    const HyperTerm F =
        term.times(t.certificate.numerator(), 1).times(t.certificate.denominator(), -1);
    return eval_term(F, at);
}

} // namespace

CertificateCheckReport boundary_check(const HyperTerm& term, const Telescoper& t, long k_lo, long k_hi) {
    CertificateCheckReport rep;
    rep.boundary_at_zero = true;
    rep.tail_vanishes = true;

    // Symbolic shortcut: R(0, k) identically zero.
    bool symbolic_zero = false;
    try {
        symbolic_zero = t.certificate.evaluate(t.sum, 0).is_zero();
    } catch (const PoleError&) {
    }

    for (long k = k_lo; k <= k_hi; ++k) {
        if (!symbolic_zero) {
            try {
                if (!eval_F(term, t, 0, k).is_zero()) {
                    rep.boundary_at_zero = false;
                    rep.details.push_back("F(0," + std::to_string(k) + ") != 0");
                }
            } catch (const PoleError&) {
                rep.boundary_at_zero = false;
                rep.details.push_back("certificate pole at n=0, k=" + std::to_string(k));
            }
        }

        try {
            const auto N = termination_bound(term, t.sum, {{t.rec, BigRational(k)}});
            if (!N) {
                rep.tail_vanishes = false;
                rep.details.push_back("kernel does not terminate at k=" + std::to_string(k));
                continue;
            }
            // Move past the last integer pole of R at this k.
            long start = *N;
            const Polynomial den = t.certificate.denominator().evaluate(t.rec, k);
            if (den.is_zero()) throw PoleError("certificate denominator vanishes at this k");
            if (den.involves(t.sum))
                for (const auto& root : integer_roots(den, t.sum))
                    start = std::max(start, root.get_si() + 1);
            const bool zero = eval_F(term, t, start, k).is_zero() && eval_F(term, t, start + 1, k).is_zero();
            if (!zero) {
                rep.tail_vanishes = false;
                rep.details.push_back("F does not vanish past the support at k=" + std::to_string(k));
            }
        } catch (const PoleError& e) {
            rep.tail_vanishes = false;
            rep.details.push_back("tail check at k=" + std::to_string(k) + ": " + e.what());
        }
    }
    return rep;
}

std::string render_operator(const Telescoper& t, const VarNames& names) {
    std::string out;
    for (std::size_t i = t.coeffs.size(); i-- > 0;) {
        if (t.coeffs[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + t.coeffs[i].to_string(names) + ")";
        if (i > 0) out += "*K^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

} // namespace wzpi
