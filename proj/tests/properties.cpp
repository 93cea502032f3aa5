#include "properties.hpp"

#include "wzpi/catalog.hpp"
#include "wzpi/gosper.hpp"
#include "wzpi/series.hpp"
#include "wzpi/term_parser.hpp"

#include <random>

namespace wzpi::properties {

namespace {

Polynomial linear_product(std::mt19937& rng, int count) {
    std::uniform_int_distribution<int> root(-6, 6);
    Polynomial p(1);
    for (int i = 0; i < count; ++i) p *= Polynomial::linear(Var::N, 1, root(rng));
    return p;
}

BigInt cauchy_bound(const Polynomial& p) {
    const auto c = p.coefficients(Var::N);
    const BigRational lead = abs(c.back().constant_value());
    BigRational m = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        if (!c[i].is_zero()) m = std::max(m, BigRational(abs(c[i].constant_value()) / lead));
    return BigInt(m.get_num() / m.get_den()) + 2;
}

} // namespace

Outcome gosper_constructed(int cases, unsigned seed) {
    std::mt19937 rng(seed);
    const std::vector<std::string> params{"1/3", "2/5", "-4/7", "5/2", "7/3", "1/6", "-3/5"};
    const std::vector<std::string> bases{"2", "-3", "1/2", "5/3", "-1/4"};
    std::uniform_int_distribution<std::size_t> pick_p(0, params.size() - 1), pick_b(0, bases.size() - 1);
    std::uniform_int_distribution<int> coef(-4, 4), deg(0, 4);
    Outcome out;
    while (out.cases < cases) {
        const std::string a = params[pick_p(rng)], b = params[pick_p(rng)], c = bases[pick_b(rng)];
        Polynomial p;
        for (int d = deg(rng); d >= 0; --d)
            p += Polynomial::monomial(coef(rng), {static_cast<std::uint16_t>(d), 0, 0, 0});
        if (p.is_zero()) continue;
        const HyperTerm h = parse_term("vars: n\n(" + c + ")^n*poch(" + a + ",n)/poch(" + b + ",n)");
        const Polynomial na = Polynomial::linear(Var::N, 1, parse_rational(a));
        const Polynomial nb = Polynomial::linear(Var::N, 1, parse_rational(b));
        const Polynomial q = Polynomial(parse_rational(c)) * p.shift(Var::N, 1) * na - p * nb;
        if (q.is_zero()) continue;
        const HyperTerm term = h.times(q).times(nb, -1);
        ++out.cases;
        const auto cert = gosper_solve(term);
        const bool sound = cert && cert->R.shift(Var::N, 1) * shift_quotient(term, Var::N) - cert->R == RatFunc(1);
        if (!sound || !(cert->R == RatFunc(p * nb, q))) {
            ++out.failures;
            out.notes.push_back(term.render_expr());
        }
    }
    return out;
}

Outcome dispersion_brute_force(int cases, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> count(1, 4);
    Outcome out;
    for (int i = 0; i < cases; ++i) {
        Polynomial p = linear_product(rng, count(rng));
        Polynomial q = linear_product(rng, count(rng));
        if (i % 5 == 0) p *= parse_polynomial("n^2+n+1");
        if (i % 7 == 0) q *= parse_polynomial("n^2+3*n+3");
        std::set<long> brute;
        const long bound = BigInt(cauchy_bound(p) + cauchy_bound(q)).get_si();
        for (long j = 0; j <= bound; ++j)
            if (poly_gcd(p, q.shift(Var::N, j)).degree(Var::N) > 0) brute.insert(j);
        ++out.cases;
        if (dispersion_set(p, q) != brute) {
            ++out.failures;
            out.notes.push_back(p.to_string() + " | " + q.to_string());
        }
    }
    return out;
}

Outcome partial_sum_enclosures(const std::vector<std::string>& series_ids, int digits) {
    Outcome out;
    for (const auto& id : series_ids) {
        const SeriesEntry* s = find_series(id);
        if (!s) throw std::invalid_argument("unknown series " + id);
        const EvalResult r = eval_series(s->kernel, {}, digits);
        ++out.cases;
        const bool partial = r.value.encloses(exact_partial_sum(s->kernel, {}, r.terms_used));
        const BigFloat closed = s->closed.evaluate(r.value.precision());
        const bool full = matched_digits(r.enclosure(), closed, digits) >= digits - 2;
        if (!partial || !full) {
            ++out.failures;
            out.notes.push_back(id);
        }
    }
    return out;
}

} // namespace wzpi::properties
