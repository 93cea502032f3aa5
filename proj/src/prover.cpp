#include "wzpi/prover.hpp"

#include "wzpi/errors.hpp"
#include "wzpi/series.hpp"
#include "wzpi/sums.hpp"

#include <algorithm>

namespace wzpi {

const char* const kCarlsonNote =
    "The recurrence argument proves r_k = s_k for nonnegative integers k only. Extending the identity to "
    "non-integer k uses Carlson's theorem, which needs r(k) - s(k) analytic and of exponential type less "
    "than pi in Re k >= 0. These growth hypotheses are assumed, not verified; the samples below are "
    "numeric evidence at non-integer k.";

std::string to_string(ProofStatus s) {
    switch (s) {
    case ProofStatus::ProvedForIntegers: return "proved-for-integers";
    case ProofStatus::FullyValidated: return "fully-validated";
    case ProofStatus::Failed: return "failed";
    }
    return "failed";
}

std::string to_string(NumericStage s) {
    switch (s) {
    case NumericStage::NotRun: return "not-run";
    case NumericStage::Passed: return "passed";
    case NumericStage::Failed: return "failed";
    case NumericStage::Divergent: return "divergent";
    }
    return "not-run";
}

std::string ProofReport::status_text() const {
    if (status == ProofStatus::Failed) return "failed(" + failed_step + ")";
    return to_string(status);
}

namespace {

// c*sqrt(d)*pi^e with square factors of d moved into c.
AlgebraicConstant reduced(BigRational c, long d, int e) {
    for (long f = 2; f * f <= d; ++f)
        while (d % (f * f) == 0) {
            d /= f * f;
            c *= f;
        }
    return AlgebraicConstant(c, d, e);
}

AlgebraicConstant product(const AlgebraicConstant& a, const AlgebraicConstant& b) {
    return reduced(a.rational_part() * b.rational_part(), a.radicand() * b.radicand(), a.pi_power() + b.pi_power());
}

AlgebraicConstant quotient(const AlgebraicConstant& a, const AlgebraicConstant& b) {
    return reduced(a.rational_part() / (b.rational_part() * b.radicand()), a.radicand() * b.radicand(),
                   a.pi_power() - b.pi_power());
}

std::optional<EvalResult> try_eval(const HyperTerm& term, const Assignment& at, int digits, std::string& note) {
    try {
        return eval_series(term, at, digits);
    } catch (const DomainError& e) {
        note = e.what();
        return std::nullopt;
    }
}

bool all_zero(const std::vector<RatFunc>& v) {
    return std::all_of(v.begin(), v.end(), [](const RatFunc& r) { return r.is_zero(); });
}

} // namespace

bool operators_equal_normalized(const Telescoper& a, const Telescoper& b) {
    if (a.order != b.order || a.rec != b.rec) return false;
    return normalize_operator(a.coeffs) == normalize_operator(b.coeffs);
}

std::vector<InitialValue> check_initial_values(const HyperTerm& left, const HyperTerm& right, long count) {
    if (count < 1) throw UsageError("initial value count must be positive");
    const auto r = terminating_sums(left, 0, count - 1);
    const auto s = terminating_sums(right, 0, count - 1);
    std::vector<InitialValue> out;
    for (long k = 0; k < count; ++k) {
        const auto i = static_cast<std::size_t>(k);
        out.push_back({k, r[i], s[i], r[i] == s[i]});
    }
    return out;
}

std::vector<SampleAgreement> carlson_numeric_check(const ProofTask& task, const std::vector<BigRational>& samples,
                                                   int digits) {
    std::vector<SampleAgreement> out;
    for (const auto& k : samples) {
        SampleAgreement a{k, std::nullopt, {}};
        const Assignment at{{Var::K, k}};
        std::string note;
        const auto l = try_eval(task.left, at, digits + 3, note);
        const auto r = l ? try_eval(task.right, at, digits + 3, note) : std::nullopt;
        if (l && r) a.digits = matched_digits(l->enclosure(), r->enclosure(), digits);
        else a.note = note;
        out.push_back(std::move(a));
    }
    return out;
}

SpecializationCheck specialization_check(const ProofTask& task, int digits) {
    if (!task.k_star) throw UsageError("task has no specialization point");
    SpecializationCheck c;
    c.k = *task.k_star;
    const Assignment at{{Var::K, c.k}};
    const long bits = working_bits(digits + 3);
    std::string note;
    const auto l = try_eval(task.left, at, digits + 3, note);
    if (!l) c.notes.push_back("left side at k* not evaluable: " + note);
    const auto r = try_eval(task.right, at, digits + 3, note);
    if (!r) c.notes.push_back("right side at k* not evaluable: " + note);

    if (task.closed) {
        const BigFloat target = task.closed->evaluate(bits);
        if (l) c.left_digits = matched_digits(l->enclosure(), target, digits);
        if (r) c.right_digits = matched_digits(r->enclosure(), target, digits);
    } else if (l && r) {
        c.left_digits = c.right_digits = matched_digits(l->enclosure(), r->enclosure(), digits);
    }

    if (!task.anchor_id.empty() && task.closed) {
        const SeriesEntry* anchor = find_series(task.anchor_id);
        if (!anchor) throw UsageError("unknown anchor series '" + task.anchor_id + "'");
        const EvalResult a = eval_series(anchor->kernel, {}, digits + 3);
        const BigFloat scaled = a.enclosure() * quotient(*task.closed, anchor->closed).evaluate(bits);
        if (r) c.anchor_digits = matched_digits(r->enclosure(), scaled, digits);
        c.notes.push_back("right side compared with " + quotient(*task.closed, anchor->closed).to_string() +
                          " times series " + anchor->id);
    }

    std::optional<int> best;
    for (const auto& d : {c.left_digits, c.right_digits, c.anchor_digits})
        if (d) best = best ? std::min(*best, *d) : *d;
    c.digits_matched = best.value_or(0);
    return c;
}

ProofReport prove_pair(const ProofTask& task, const ProofOptions& opts) {
    ProofReport rep;
    rep.task = task.id;
    rep.carlson_note = kCarlsonNote;
    auto fail = [&](std::string step, std::string why) {
        rep.status = ProofStatus::Failed;
        rep.failed_step = std::move(step);
        rep.diagnostics.push_back(std::move(why));
        return rep;
    };

    try {
        for (long k = opts.k_lo; k <= opts.k_hi; ++k)
            for (const HyperTerm* t : {&task.left, &task.right})
                if (!termination_bound(*t, Var::N, {{Var::K, BigRational(k)}}))
                    return fail("non-terminating", "kernel does not terminate at k=" + std::to_string(k));

        rep.left_telescoper = find_telescoper(task.left, Var::N, Var::K, opts.max_order);
        if (!rep.left_telescoper) return fail("no-telescoper", "left kernel: no telescoper up to the maximal order");
        rep.right_telescoper = find_telescoper(task.right, Var::N, Var::K, opts.max_order);
        if (!rep.right_telescoper)
            return fail("no-telescoper", "right kernel: no telescoper up to the maximal order");
        const Telescoper& tl = *rep.left_telescoper;
        const Telescoper& tr = *rep.right_telescoper;

        rep.left_check = verify_certificate(task.left, tl, opts.k_lo, opts.k_hi);
        rep.right_check = verify_certificate(task.right, tr, opts.k_lo, opts.k_hi);
        for (const auto* c : {&*rep.left_check, &*rep.right_check}) {
            if (!c->identity_holds) return fail("certificate", "telescoping identity does not hold");
            if (!c->boundary_at_zero || !c->tail_vanishes)
                return fail("boundary", c->details.empty() ? "boundary check failed" : c->details.front());
        }

        const int m = std::max(tl.order, tr.order);
        long count = m;
        rep.leading_coeff_roots.clear();
        for (const auto* t : {&tl, &tr})
            for (const auto& root : integer_roots(t->coeffs.back(), Var::K))
                if (root >= 0) rep.leading_coeff_roots.push_back(root.get_si());
        std::sort(rep.leading_coeff_roots.begin(), rep.leading_coeff_roots.end());
        rep.leading_coeff_roots.erase(std::unique(rep.leading_coeff_roots.begin(), rep.leading_coeff_roots.end()),
                                      rep.leading_coeff_roots.end());
        for (long k0 : rep.leading_coeff_roots) count = std::max(count, k0 + m + 1);

        rep.propagation_lo = 0;
        rep.propagation_hi = std::max(opts.propagation_hi, count - 1);
        const long hi = rep.propagation_hi + m;
        const auto r = terminating_sums(task.left, 0, hi);
        const auto s = terminating_sums(task.right, 0, hi);
        const long span = rep.propagation_hi + 1;

        rep.operators_equal = operators_equal_normalized(tl, tr);
        if (!rep.operators_equal) {
            const bool cross = all_zero(recurrence_residuals(tl.coeffs, s, 0, span)) &&
                               all_zero(recurrence_residuals(tr.coeffs, r, 0, span));
            if (!cross) return fail("operators", "telescopers differ and do not annihilate each other's sums");
            rep.common_annihilation = true;
        }

        // P_m(k) != 0 on the propagation range outside the initial block.
        rep.leading_coeff_nonvanishing = std::none_of(
            rep.leading_coeff_roots.begin(), rep.leading_coeff_roots.end(),
            [&](long k0) { return k0 + m >= count && k0 <= rep.propagation_hi; });

        for (long k = 0; k < count; ++k) {
            const auto i = static_cast<std::size_t>(k);
            rep.initial_values.push_back({k, r[i], s[i], r[i] == s[i]});
            if (!(r[i] == s[i])) return fail("initial-values", "r_" + std::to_string(k) + " != s_" + std::to_string(k));
        }
        if (!rep.leading_coeff_nonvanishing) return fail("leading-coefficient", "leading coefficient vanishes");

        bool holds = all_zero(recurrence_residuals(tl.coeffs, r, 0, span)) &&
                     all_zero(recurrence_residuals(tr.coeffs, s, 0, span));
        for (long k = 0; holds && k < span; ++k) holds = r[static_cast<std::size_t>(k)] == s[static_cast<std::size_t>(k)];
        rep.propagation_holds = holds;
        if (!holds) return fail("propagation", "exact propagation check failed on [0, " + std::to_string(rep.propagation_hi) + "]");
        rep.status = ProofStatus::ProvedForIntegers;
    } catch (const std::exception& e) {
        return fail("internal", e.what());
    }

    if (!opts.numeric || !task.k_star) return rep;

    try {
        std::vector<BigRational> samples = task.carlson_samples;
        if (std::find(samples.begin(), samples.end(), *task.k_star) == samples.end()) samples.push_back(*task.k_star);
        rep.carlson = carlson_numeric_check(task, samples, opts.digits);
        rep.specialization = specialization_check(task, opts.digits);
    } catch (const std::exception& e) {
        rep.numeric = NumericStage::Failed;
        rep.diagnostics.push_back(std::string("numeric stage: ") + e.what());
        return rep;
    }

    bool low = false;
    bool missing = false;
    for (const auto& a : rep.carlson) {
        if (!a.digits) missing = true;
        else if (*a.digits < opts.digits - 5) low = true;
    }
    const auto& sp = *rep.specialization;
    for (const auto& d : {sp.left_digits, sp.right_digits, sp.anchor_digits})
        if (d && *d < opts.digits - 2) low = true;
    if (!sp.left_digits || !sp.right_digits) missing = true;

    if (low) {
        rep.numeric = NumericStage::Failed;
        rep.diagnostics.push_back("numeric agreement below threshold");
    } else if (missing) {
        rep.numeric = NumericStage::Divergent;
        rep.diagnostics.push_back("a series side diverges at the sample points; numeric evidence is partial");
    } else {
        rep.numeric = NumericStage::Passed;
        rep.status = ProofStatus::FullyValidated;
    }
    return rep;
}

ZIdentityReport verify_z_identity(const ZIdentity& id, const std::vector<long>& k_values, bool also_telescope,
                                  const ProofOptions& opts) {
    ZIdentityReport rep;
    rep.identity = id.id;
    rep.exact_holds = true;
    for (long k : k_values) {
        if (k < 0) throw DomainError("z identities are checked at nonnegative integers only");
        const bool eq = terminating_sum(id.left, k) == terminating_sum(id.right, k);
        rep.exact_checks.emplace_back(k, eq);
        rep.exact_holds = rep.exact_holds && eq;
    }
    rep.passed = rep.exact_holds;
    if (also_telescope) {
        ProofTask task;
        task.id = id.id;
        task.left = id.left;
        task.right = id.right;
        ProofOptions o = opts;
        o.numeric = false;
        rep.telescoping = prove_pair(task, o);
        rep.passed = rep.passed && rep.telescoping->status != ProofStatus::Failed;
    }
    return rep;
}

ThetaLinkCheck check_theta_link(const ThetaLink& link, int digits) {
    ThetaLinkCheck c{link.identity_id, link.target_series, std::nullopt, {}};
    const SeriesEntry* target = find_series(link.target_series);
    if (!target) throw UsageError("unknown target series '" + link.target_series + "'");
    try {
        const EvalResult lhs = eval_weighted_series(link.coefficients, link.a, link.b, link.z0, digits + 3);
        const EvalResult rhs = eval_series(target->kernel, {}, digits + 3);
        const BigFloat scaled = rhs.enclosure() * link.factor.evaluate(working_bits(digits + 3));
        c.digits = matched_digits(lhs.enclosure(), scaled, digits);
        c.note = "weighted series vs " + link.factor.to_string() + " times " + target->id;
        if (link.value) {
            const int v = matched_digits(lhs.enclosure(), link.value->evaluate(working_bits(digits + 3)), digits);
            c.digits = std::min(*c.digits, v);
            c.note += ", value " + link.value->to_string() + " (" + product(link.factor, target->closed).to_string() + ")";
        }
    } catch (const DivergenceError& e) {
        c.note = std::string("weighted series diverges: ") + e.what();
    }
    return c;
}

} // namespace wzpi
