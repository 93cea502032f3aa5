#include "wzpi/linsolve.hpp"
#include "wzpi/polynomial.hpp"
#include "wzpi/ratfunc.hpp"

#include "properties.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace wzpi;
using testing::P;

namespace {

Polynomial random_poly(std::mt19937& rng, int max_deg, bool with_k) {
    std::uniform_int_distribution<int> coef(-5, 5), deg(0, max_deg);
    Polynomial p;
    const int dn = deg(rng);
    for (int i = 0; i <= dn; ++i) {
        const int dk = with_k ? deg(rng) % 2 : 0;
        for (int j = 0; j <= dk; ++j) {
            Exponents e{};
            e[slot(Var::N)] = static_cast<unsigned short>(i);
            e[slot(Var::K)] = static_cast<unsigned short>(j);
            p += Polynomial::monomial(coef(rng), e);
        }
    }
    return p.is_zero() ? Polynomial(1) : p;
}

bool associates(const Polynomial& a, const Polynomial& b) { return a.unit_normal().second == b.unit_normal().second; }

} // namespace

TEST_CASE("poly_gcd examples") {
    CHECK(poly_gcd(P("n^2-1"), P("n-1")) == P("n-1"));
    CHECK(poly_gcd(P("n"), P("n+4")) == Polynomial(1));
    CHECK(poly_gcd(P("2*n^2+2*n"), P("4*n")) == P("n"));
    CHECK(poly_gcd(Polynomial(), Polynomial()).is_zero());
    CHECK(poly_gcd(P("n*k+k"), P("n^2*k+2*n*k+k")) == P("n*k+k"));
}

TEST_CASE("poly_gcd(a g, b g) is an associate of g gcd(a, b)") {
    std::mt19937 rng(3);
    for (int i = 0; i < 200; ++i) {
        const Polynomial a = random_poly(rng, 3, i % 2 == 0);
        const Polynomial b = random_poly(rng, 3, i % 3 == 0);
        const Polynomial g = random_poly(rng, 2, i % 4 == 0);
        CHECK(associates(poly_gcd(a * g, b * g), g * poly_gcd(a, b)));
    }
}

TEST_CASE("dispersion_set examples") {
    CHECK(dispersion_set(P("n+3"), P("n")) == std::set<long>{3});
    CHECK(dispersion_set(P("n"), P("n+2")).empty());
    CHECK(dispersion_set(P("n^2+3*n"), P("n")) == std::set<long>{0, 3});
    CHECK_THROWS_AS(dispersion_set(Polynomial(), P("n")), DomainError);
}

TEST_CASE("dispersion_set agrees with brute-force gcds") {
    const auto outcome = properties::dispersion_brute_force(100, 5);
    CHECK(outcome.cases == 100);
    CHECK(outcome.failures == 0);
    for (const auto& n : outcome.notes) MESSAGE(n);
}

TEST_CASE("integer roots, small and large") {
    CHECK(integer_roots(P("n^3-n"), Var::N) == std::vector<BigInt>{-1, 0, 1});
    const Polynomial big = P("n-123457") * P("n+99991") * P("2*n-1") * P("n^2+5");
    CHECK(integer_roots(big, Var::N) == std::vector<BigInt>{-99991, 123457});
    CHECK(integer_roots(P("k*n-2*k"), Var::N) == std::vector<BigInt>{2});
}

TEST_CASE("linsolve_exact examples") {
    auto fe = [](long v) { return FieldElement(RatFunc(v), 0); };
    auto id = linsolve_exact({{fe(1), fe(0)}, {fe(0), fe(1)}}, {fe(1), fe(2)});
    REQUIRE(id.consistent);
    CHECK(id.particular == std::vector<FieldElement>{fe(1), fe(2)});
    CHECK(id.nullspace.empty());

    auto under = linsolve_exact({{fe(1), fe(1)}}, {fe(3)});
    REQUIRE(under.consistent);
    CHECK(under.particular == std::vector<FieldElement>{fe(3), fe(0)});
    REQUIRE(under.nullspace.size() == 1);
    const auto& v = under.nullspace[0];
    CHECK(v[0] == fe(-1) * v[1]);
    CHECK(!v[1].is_zero());

    CHECK_FALSE(linsolve_exact({{fe(1), fe(0)}, {fe(1), fe(0)}}, {fe(1), fe(2)}).consistent);

    const FieldElement k(RatFunc(P("k")), mask_of(Var::K));
    CHECK_THROWS_AS(linsolve_exact({{fe(1), k}}, {fe(1)}), UsageError);
    CHECK_THROWS_AS(fe(1) + k, UsageError);
}

TEST_CASE("linsolve_exact solutions satisfy parametric systems") {
    std::mt19937 rng(9);
    const VarMask field = mask_of(Var::K);
    for (int t = 0; t < 20; ++t) {
        std::vector<std::vector<FieldElement>> m(3, std::vector<FieldElement>(4));
        std::vector<FieldElement> rhs(3);
        for (auto& row : m)
            for (auto& e : row) e = FieldElement(RatFunc(random_poly(rng, 1, true).substitute(Var::N, P("k"))), field);
        for (auto& e : rhs) e = FieldElement(RatFunc(P("k+1")), field);
        const auto sol = linsolve_exact(m, rhs);
        if (!sol.consistent) continue;
        for (std::size_t i = 0; i < m.size(); ++i) {
            FieldElement acc(RatFunc(0), field);
            for (std::size_t j = 0; j < 4; ++j) acc = acc + m[i][j] * sol.particular[j];
            CHECK(acc == rhs[i]);
            for (const auto& v : sol.nullspace) {
                FieldElement z(RatFunc(0), field);
                for (std::size_t j = 0; j < 4; ++j) z = z + m[i][j] * v[j];
                CHECK(z.is_zero());
            }
        }
    }
}

TEST_CASE("RatFunc normalization") {
    const RatFunc r(P("2*n^2-2"), P("4*n-4"));
    CHECK(r.numerator() == P("1/2*n+1/2"));
    CHECK(r.denominator() == Polynomial(1));
    const RatFunc s(P("n+k"), P("-2*n+6"));
    CHECK(s.denominator().leading_coefficient() > 0);
    CHECK(RatFunc(s.numerator(), s.denominator()) == s);
    std::mt19937 rng(13);
    for (int i = 0; i < 50; ++i) {
        const RatFunc x(random_poly(rng, 3, true), random_poly(rng, 3, true));
        CHECK(RatFunc(x.numerator(), x.denominator()) == x);
        CHECK(poly_gcd(x.numerator(), x.denominator()).total_degree() == 0);
    }
    CHECK_THROWS_AS(RatFunc(P("n"), Polynomial()), DomainError);
}
