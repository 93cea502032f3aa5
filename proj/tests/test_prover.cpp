#include "wzpi/catalog.hpp"
#include "wzpi/prover.hpp"
#include "wzpi/report.hpp"
#include "wzpi/series.hpp"
#include "wzpi/sums.hpp"

#include "support.hpp"

#include <doctest.h>

#include <map>

using namespace wzpi;
using testing::P;
using testing::Q;

namespace {

const ProofReport& proved(const std::string& id) {
    static std::map<std::string, ProofReport> cache;
    auto it = cache.find(id);
    if (it == cache.end()) it = cache.emplace(id, prove_pair(*find_task(id))).first;
    return it->second;
}

Telescoper with_coeffs(std::vector<Polynomial> c) {
    Telescoper t;
    t.order = static_cast<int>(c.size()) - 1;
    t.coeffs = std::move(c);
    return t;
}

BigRational decimal(const std::string& s) {
    const auto dot = s.find('.');
    if (dot == std::string::npos) return Q(s);
    const std::string frac = s.substr(dot + 1);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    return Q(s.substr(0, dot) + frac + "/" + scale.get_str());
}

} // namespace

TEST_CASE("terminating sums of Example 1") {
    const ProofTask& ex1 = *find_task("example-1");
    CHECK(terminating_sum_exact(ex1.left, 0) == 15);
    CHECK(terminating_sum_exact(ex1.right, 0) == 15);
    CHECK(terminating_sum_exact(ex1.left, 1) == 13);
    CHECK(terminating_sum_exact(ex1.right, 1) == 13);
}

TEST_CASE("terminating sums match the oracle for every task") {
    const auto& tasks = testing::oracle()["tasks"];
    for (const auto& task : task_catalog()) {
        CAPTURE(task.id);
        const auto& expected = tasks[task.id];
        const long count = static_cast<long>(expected.size());
        const auto r = terminating_sums(task.left, 0, count - 1);
        const auto s = terminating_sums(task.right, 0, count - 1);
        for (long k = 0; k < count; ++k) {
            CHECK(r[k] == RatFunc(Q(expected[k])));
            CHECK(s[k] == RatFunc(Q(expected[k])));
        }
    }
}

TEST_CASE("check_initial_values") {
    const ProofTask& ex2 = *find_task("example-2");
    const auto iv2 = check_initial_values(ex2.left, ex2.right, 3);
    REQUIRE(iv2.size() == 3);
    CHECK(iv2[0].left == RatFunc(11));
    for (const auto& v : iv2) CHECK(v.equal);
    const ProofTask& ex3 = *find_task("example-3");
    const auto iv3 = check_initial_values(ex3.left, ex3.right, 2);
    CHECK(iv3[0].left == RatFunc(25));
    CHECK(iv3[0].right == RatFunc(25));
    const auto mixed = check_initial_values(ex2.left, ex3.right, 1);
    CHECK_FALSE(mixed[0].equal);
}

TEST_CASE("operators_equal_normalized") {
    CHECK(operators_equal_normalized(with_coeffs({P("-2"), P("1")}), with_coeffs({P("-10"), P("5")})));
    CHECK(operators_equal_normalized(with_coeffs({P("k+1"), P("-k")}), with_coeffs({P("-2*k-2"), P("2*k")})));
    CHECK_FALSE(operators_equal_normalized(with_coeffs({P("-2"), P("1")}), with_coeffs({P("-3"), P("1")})));
    CHECK_FALSE(operators_equal_normalized(with_coeffs({P("-2"), P("1")}), with_coeffs({P("1"), P("-3"), P("1")})));
}

TEST_CASE("Example 1 is fully validated") {
    const ProofReport& r = proved("example-1");
    CHECK(r.status == ProofStatus::FullyValidated);
    CHECK(r.status_text() == "fully-validated");
    REQUIRE(r.left_telescoper);
    CHECK(r.left_telescoper->order == 3);
    CHECK(r.operators_equal);
    CHECK(r.leading_coeff_nonvanishing);
    REQUIRE(r.initial_values.size() >= 3);
    CHECK(r.initial_values[0].left == RatFunc(15));
    CHECK(r.initial_values[1].left == RatFunc(13));
    CHECK(r.initial_values[2].left == RatFunc(Q("179105/11907")));
    for (const auto& v : r.initial_values) CHECK(v.equal);
    CHECK(r.carlson_note == kCarlsonNote);
    REQUIRE(r.specialization);
    CHECK(r.specialization->k == Q("-1/2"));
    CHECK(r.specialization->digits_matched >= 58);
}

TEST_CASE("Examples 2 and 3 are fully validated") {
    for (const std::string id : {"example-2", "example-3"}) {
        const ProofReport& r = proved(id);
        CAPTURE(id);
        CHECK(r.status == ProofStatus::FullyValidated);
        REQUIRE(r.specialization);
        CHECK(r.specialization->k == Q("-1/6"));
        CHECK(r.specialization->digits_matched >= 58);
    }
}

TEST_CASE("max order 2 on Example 1 fails with no-telescoper") {
    ProofOptions opts;
    opts.max_order = 2;
    const ProofReport r = prove_pair(*find_task("example-1"), opts);
    CHECK(r.status == ProofStatus::Failed);
    CHECK(r.failed_step == "no-telescoper");
    CHECK(r.status_text() == "failed(no-telescoper)");
}

TEST_CASE("recurrence propagation holds on [0, 30] for every proved task") {
    for (const auto& task : task_catalog()) {
        const ProofReport& r = proved(task.id);
        CAPTURE(task.id);
        CHECK(r.status != ProofStatus::Failed);
        CHECK(r.propagation_holds);
        CHECK(r.propagation_lo == 0);
        CHECK(r.propagation_hi >= 30);
        REQUIRE(r.left_telescoper);
        const auto& t = *r.left_telescoper;
        const auto values = terminating_sums(task.right, 0, 30 + t.order);
        for (const auto& res : recurrence_residuals(t.coeffs, values, 0, 31)) CHECK(res.is_zero());
    }
}

TEST_CASE("the divergent left side of 28-3 is reported, not hidden") {
    const ProofReport& r = proved("28-3");
    CHECK(r.status == ProofStatus::ProvedForIntegers);
    CHECK(r.numeric == NumericStage::Divergent);
    REQUIRE(r.specialization);
    CHECK_FALSE(r.specialization->left_digits.has_value());
    REQUIRE(r.specialization->right_digits.has_value());
    CHECK(*r.specialization->right_digits >= 58);
}

TEST_CASE("Carlson samples agree with the oracle at non-integer k") {
    const auto& carlson = testing::oracle()["carlson"];
    for (const std::string id : {"example-1", "example-2"}) {
        const ProofTask& task = *find_task(id);
        for (const auto& s : carlson_numeric_check(task, task.carlson_samples, 60)) {
            CAPTURE(id);
            CAPTURE(to_string(s.k));
            REQUIRE(s.digits.has_value());
            CHECK(*s.digits >= 55);
            if (!carlson.contains(to_string(s.k))) continue;
            const BigRational ref = decimal(carlson[to_string(s.k)][id]);
            const EvalResult lhs = eval_series(task.left, {{Var::K, s.k}}, 60);
            const long bits = lhs.enclosure().precision();
            CHECK(matched_digits(lhs.enclosure(), BigFloat::from_rational(ref, bits), 60) >= 60);
        }
    }
}

TEST_CASE("z-identities hold exactly and match the oracle values") {
    const auto& zo = testing::oracle()["z_identities"];
    for (const auto& id : identity_catalog()) {
        CAPTURE(id.id);
        const ZIdentityReport rep = verify_z_identity(id, {0, 1, 2, 3, 4, 5, 6}, false);
        CHECK(rep.exact_holds);
        CHECK(rep.passed);
        CHECK_FALSE(rep.telescoping.has_value());
        const auto& points = zo[id.id]["points"];
        for (long k = 0; k <= 6; ++k) {
            const RatFunc lhs = terminating_sum(id.left, k);
            for (std::size_t i = 0; i < points.size(); ++i) {
                const BigRational z = Q(points[i]);
                CHECK(lhs.evaluate(Var::Z, z).constant_value() == Q(zo[id.id]["values"][std::to_string(k)][i]));
            }
        }
    }
    const RatFunc k1 = terminating_sum(find_identity("whipple")->left, 1);
    CHECK(k1 == RatFunc(P("1-z")));
}

TEST_CASE("the whipple identity telescopes over Q(z)") {
    ProofOptions opts;
    opts.k_hi = 10;
    opts.propagation_hi = 10;
    const ZIdentityReport rep = verify_z_identity(*find_identity("whipple"), {0, 1, 2, 3, 4, 5, 6}, true, opts);
    REQUIRE(rep.telescoping);
    CHECK(rep.telescoping->operators_equal);
    CHECK(rep.telescoping->status == ProofStatus::ProvedForIntegers);
    for (const auto& v : rep.telescoping->initial_values) CHECK(v.equal);
    CHECK(rep.passed);
}

TEST_CASE("report JSON is deterministic") {
    const ProofReport again = prove_pair(*find_task("example-1"));
    CHECK(dump(to_json(again)) == dump(to_json(proved("example-1"))));
    const auto j = to_json(again);
    CHECK(j["status"] == "fully-validated");
    CHECK(j["telescopers"].size() == 2);
    CHECK(j["initialValues"][0]["r"] == "15");
}

TEST_CASE("parallel kernels agree with their serial references") {
    for (const auto& task : task_catalog()) {
        CAPTURE(task.id);
        const auto par = terminating_sums(task.left, 0, 24);
        CHECK(par == terminating_sums_serial(task.left, 0, 24));
        const ProofReport& r = proved(task.id);
        REQUIRE(r.left_telescoper);
        const auto& c = r.left_telescoper->coeffs;
        CHECK(recurrence_residuals(c, par, 0, 20) == recurrence_residuals_serial(c, par, 0, 20));
    }
    const ZIdentity& w = *find_identity("whipple");
    CHECK(terminating_sums(w.right, 0, 8) == terminating_sums_serial(w.right, 0, 8));
}
