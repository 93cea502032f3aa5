#include "wzpi/catalog.hpp"
#include "wzpi/sums.hpp"
#include "wzpi/telescope.hpp"

#include "support.hpp"

#include <doctest.h>

#include <map>

using namespace wzpi;
using testing::P;
using testing::T;

namespace {

const HyperTerm& binomial() {
    static const HyperTerm t = T("vars: n, k\n(-1)^n*poch(-k,n)/poch(1,n)");
    return t;
}

struct KernelTelescoper {
    std::string name;
    HyperTerm term;
    Telescoper t;
};

// Telescopers of every task kernel, computed once for this binary.
const std::vector<KernelTelescoper>& catalog_telescopers() {
    static const std::vector<KernelTelescoper> all = [] {
        std::vector<KernelTelescoper> out;
        for (const auto& task : task_catalog()) {
            for (const auto& [side, term] : {std::pair{"A", &task.left}, std::pair{"B", &task.right}}) {
                auto t = find_telescoper(*term, Var::N, Var::K, 6);
                REQUIRE_MESSAGE(t, task.id << " " << side);
                out.push_back({task.id + " " + side, *term, *t});
            }
        }
        return out;
    }();
    return all;
}

const Telescoper& telescoper_for(const std::string& name) {
    for (const auto& e : catalog_telescopers())
        if (e.name == name) return e.t;
    throw std::runtime_error("missing " + name);
}

} // namespace

TEST_CASE("binomial kernel: order 1, K - 2, certificate -n/(k-n+1)") {
    const auto t = find_telescoper(binomial(), Var::N, Var::K, 3);
    REQUIRE(t);
    CHECK(t->order == 1);
    CHECK(t->coeffs == std::vector<Polynomial>{Polynomial(-2), Polynomial(1)});
    CHECK(t->certificate == RatFunc(P("-n"), P("k-n+1")));
    const auto report = verify_certificate(binomial(), *t, 0, 10);
    CHECK(report.identity_holds);
    CHECK(report.residual.is_zero());
    CHECK(report.boundary_at_zero);
    CHECK(report.tail_vanishes);
    CHECK(render_operator(*t) == "(1)*K^1 + (-2)");
}

TEST_CASE("perturbed operator K - 3 fails verification") {
    Telescoper t = *find_telescoper(binomial(), Var::N, Var::K, 1);
    t.coeffs[0] = Polynomial(-3);
    const auto report = verify_certificate(binomial(), t, 0, 10);
    CHECK_FALSE(report.identity_holds);
    CHECK_FALSE(report.residual.is_zero());
}

TEST_CASE("normalize_operator") {
    CHECK(normalize_operator({P("2*k+2"), P("-4*k-4")}) == std::vector<Polynomial>{P("-1"), P("2")});
    CHECK(normalize_operator({P("3/2"), P("-6")}) == std::vector<Polynomial>{P("-1"), P("4")});
    CHECK(normalize_operator({P("k"), P("k+1")}) == std::vector<Polynomial>{P("k"), P("k+1")});
}

TEST_CASE("Example 1 kernels share an order-3 operator") {
    const Telescoper& a = telescoper_for("example-1 A");
    const Telescoper& b = telescoper_for("example-1 B");
    CHECK(a.order == 3);
    CHECK(b.order == 3);
    CHECK(a.coeffs == b.coeffs);
    const ProofTask& ex1 = *find_task("example-1");
    for (const auto& [term, t] : {std::pair{&ex1.left, &a}, std::pair{&ex1.right, &b}}) {
        const auto report = verify_certificate(*term, *t, 0, 20);
        CHECK(report.identity_holds);
        CHECK(report.boundary_at_zero);
        CHECK(report.tail_vanishes);
    }
    CHECK_FALSE(telescoper_of_order(ex1.left, Var::N, Var::K, 2).has_value());
    CHECK_FALSE(find_telescoper(ex1.left, Var::N, Var::K, 2).has_value());
}

TEST_CASE("every catalog telescoper passes the independent verifier") {
    for (const auto& e : catalog_telescopers()) {
        CAPTURE(e.name);
        CHECK(e.t.coeffs.size() == static_cast<std::size_t>(e.t.order + 1));
        CHECK(e.t.coeffs.back().leading_coefficient() > 0);
        CHECK(normalize_operator(e.t.coeffs) == e.t.coeffs);
        const auto report = verify_certificate(e.term, e.t, 0, 20);
        CHECK(report.identity_holds);
        CHECK(report.boundary_at_zero);
        CHECK(report.tail_vanishes);
    }
}

TEST_CASE("summed recurrence annihilates the terminating sums for k in [0, 20]") {
    for (const auto& e : catalog_telescopers()) {
        CAPTURE(e.name);
        const auto values = terminating_sums(e.term, 0, 20 + e.t.order);
        for (const auto& r : recurrence_residuals(e.t.coeffs, values, 0, 21)) CHECK(r.is_zero());
    }
}

TEST_CASE("telescoper search is deterministic") {
    const ProofTask& ex2 = *find_task("example-2");
    const auto again = find_telescoper(ex2.left, Var::N, Var::K, 6);
    REQUIRE(again);
    const Telescoper& first = telescoper_for("example-2 A");
    CHECK(again->coeffs == first.coeffs);
    CHECK(again->certificate == first.certificate);
}
