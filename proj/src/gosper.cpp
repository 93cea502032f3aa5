#include "wzpi/gosper.hpp"

#include "wzpi/errors.hpp"
#include "wzpi/linsolve.hpp"

#include <algorithm>
#include <tuple>

namespace wzpi {

GosperNormalForm gosper_normal_form(const RatFunc& r, Var n) {
    if (r.is_zero()) throw DomainError("Gosper normal form of zero");
    Polynomial a = r.numerator();
    Polynomial b = r.denominator();
    Polynomial c(1);
    for (long j : dispersion_set(a, b, n)) {
        const Polynomial g = poly_gcd(a, b.shift(n, j));
        if (g.degree(n) <= 0) continue;
        a = exact_quotient(a, g);
        b = exact_quotient(b, g.shift(n, -j));
        for (long i = 1; i <= j; ++i) c *= g.shift(n, -i);
    }
    // c only matters up to a constant factor; keep it monic when possible.
    c = c.unit_normal().second;
    const Polynomial lc = c.leading_coefficient_in(n);
    if (lc.is_constant()) c *= 1 / lc.constant_value();
    return {a, b, c};
}

std::optional<int> gosper_degree_bound(const Polynomial& a, const Polynomial& b, int f_degree, Var n) {
    const Polynomial A = a;
    const Polynomial B = b.shift(n, -1);
    const Polynomial plus = A + B;
    const Polynomial minus = A - B;
    const int dp = plus.degree(n);
    const int dm = minus.degree(n);
    int d;
    if (dm >= dp) {
        d = f_degree - dm;
    } else {
        d = f_degree - dp + 1;
        const Polynomial L = plus.coefficients(n)[static_cast<std::size_t>(dp)];
        const auto mc = minus.coefficients(n);
        const Polynomial l = dp >= 1 && static_cast<std::size_t>(dp - 1) < mc.size() ? mc[static_cast<std::size_t>(dp - 1)] : Polynomial();
        const RatFunc ratio = RatFunc(l * BigRational(-2), L);
        if (ratio.is_constant()) {
            const BigRational v = ratio.constant_value();
            if (is_integer(v) && v >= 0) d = std::max(d, static_cast<int>(v.get_num().get_si()));
        }
    }
    if (d < 0) return std::nullopt;
    return d;
}

std::pair<std::vector<Polynomial>, RatFunc> primitive_vector(const std::vector<RatFunc>& v) {
    Polynomial den(1);
    for (const auto& e : v)
        if (!e.is_zero()) den = poly_lcm(den, e.denominator());
    std::vector<Polynomial> polys;
    Polynomial g;
    for (const auto& e : v) {
        polys.push_back(e.is_zero() ? Polynomial() : e.numerator() * exact_quotient(den, e.denominator()));
        g = poly_gcd(g, polys.back());
    }
    if (g.is_zero()) throw DomainError("primitive_vector of the zero vector");
    for (auto& p : polys) p = exact_quotient(p, g);
    // poly_gcd is primitive, so the remaining integer content is the gcd of
    // all coefficients (already integers after clearing denominators).
    BigRational content = 0;
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        auto [unit, normal] = p.unit_normal();
        const BigRational u = abs(unit);
        if (content == 0) {
            content = u;
        } else {
            BigInt num, den_;
            mpz_gcd(num.get_mpz_t(), content.get_num().get_mpz_t(), u.get_num().get_mpz_t());
            mpz_lcm(den_.get_mpz_t(), content.get_den().get_mpz_t(), u.get_den().get_mpz_t());
            content = rational(num, den_);
        }
    }
    const auto last = std::find_if(polys.rbegin(), polys.rend(), [](const Polynomial& p) { return !p.is_zero(); });
    if (last->leading_coefficient() < 0) content = -content;
    for (auto& p : polys) p *= 1 / content;
    // scale = result / input on any nonzero entry.
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return {polys, RatFunc(polys[i]) / v[i]};
    throw DomainError("primitive_vector of the zero vector");
}

namespace {

std::vector<Polynomial> coefficient_list(const Polynomial& p, Var n, std::size_t rows) {
    auto c = p.coefficients(n);
    c.resize(rows);
    return c;
}

int total_degree_of(const std::vector<Polynomial>& v) {
    int s = 0;
    for (const auto& p : v) s += std::max(0, p.total_degree());
    return s;
}

std::string render(const std::vector<Polynomial>& v) {
    std::string s;
    for (const auto& p : v) s += p.to_string() + ";";
    return s;
}

} // namespace

std::optional<ParametricSolution> parametric_gosper(const RatFunc& r, const std::vector<Polynomial>& w, Var n,
                                                    VarMask field) {
    if (w.empty()) throw UsageError("parametric_gosper needs at least one inhomogeneity");
    const auto [a, b, c] = gosper_normal_form(r, n);
    int wdeg = -1;
    for (const auto& p : w) wdeg = std::max(wdeg, p.degree(n));
    if (wdeg < 0) return std::nullopt;
    const auto bound = gosper_degree_bound(a, b, c.degree(n) + wdeg, n);
    const int d = bound ? *bound : -1;

    const Polynomial bm1 = b.shift(n, -1);
    const Polynomial nv = Polynomial::variable(n);
    // Columns: x_0..x_d, then P_0..P_m.
    std::vector<Polynomial> columns;
    Polynomial npow(1);
    Polynomial n1pow(1);
    for (int j = 0; j <= d; ++j) {
        columns.push_back(a * n1pow - bm1 * npow);
        npow *= nv;
        n1pow *= nv + Polynomial(1);
    }
    for (const auto& p : w) columns.push_back(-(c * p));

    int rows = 1;
    for (const auto& col : columns) rows = std::max(rows, col.degree(n) + 1);
    std::vector<std::vector<Polynomial>> matrix(static_cast<std::size_t>(rows));
    for (const auto& col : columns) {
        const auto coeffs = coefficient_list(col, n, static_cast<std::size_t>(rows));
        for (int i = 0; i < rows; ++i) {
            const Polynomial& e = coeffs[static_cast<std::size_t>(i)];
            if ((e.vars() & static_cast<VarMask>(~field)) != 0)
                throw UsageError("Gosper equation coefficient outside the declared field");
            matrix[static_cast<std::size_t>(i)].push_back(e);
        }
    }
    const auto nullspace = polynomial_nullspace(matrix);

    const std::size_t nx = static_cast<std::size_t>(d + 1);
    std::optional<std::tuple<int, std::string, std::size_t, std::vector<Polynomial>, RatFunc>> best;
    for (std::size_t idx = 0; idx < nullspace.size(); ++idx) {
        const auto& vec = nullspace[idx];
        std::vector<RatFunc> P;
        bool nonzero = false;
        for (std::size_t i = nx; i < vec.size(); ++i) {
            P.emplace_back(vec[i]);
            nonzero = nonzero || !vec[i].is_zero();
        }
        if (!nonzero) continue;
        auto [polys, scale] = primitive_vector(P);
        auto key = std::make_tuple(total_degree_of(polys), render(polys), idx, polys, scale);
        if (!best || std::tie(std::get<0>(key), std::get<1>(key)) < std::tie(std::get<0>(*best), std::get<1>(*best)))
            best = std::move(key);
    }
    if (!best) return std::nullopt;
    const auto& vec = nullspace[std::get<2>(*best)];
    const RatFunc& scale = std::get<4>(*best);
    Polynomial x;
    Polynomial mono(1);
    for (std::size_t j = 0; j < nx; ++j) {
        if (!vec[j].is_zero()) x += vec[j] * mono;
        mono *= nv;
    }
    ParametricSolution out;
    out.coeffs = std::get<3>(*best);
    out.Y = RatFunc(bm1 * x, c) * scale;
    return out;
}

std::optional<RatFunc> gosper_from_ratio(const RatFunc& r, Var n, VarMask field) {
    const auto sol = parametric_gosper(r, {Polynomial(1)}, n, field);
    if (!sol) return std::nullopt;
    // Y(n+1) r - Y = P_0 with P_0 a nonzero constant of the field.
    return sol->Y / RatFunc(sol->coeffs.front());
}

std::optional<GosperCertificate> gosper_solve(const HyperTerm& term, Var sum) {
    VarMask field = 0;
    for (std::size_t i = 0; i < kVarCount; ++i)
        if (static_cast<Var>(i) != sum) field = static_cast<VarMask>(field | mask_of(static_cast<Var>(i)));
    const auto R = gosper_from_ratio(shift_quotient(term, sum), sum, field);
    if (!R) return std::nullopt;
    return GosperCertificate{*R};
}

} // namespace wzpi
