#include "wzpi/sums.hpp"

#include "wzpi/errors.hpp"

#include <exception>

namespace wzpi {

RatFunc terminating_sum(const HyperTerm& term, long k, Var sum, Var rec) {
    Assignment at{{rec, BigRational(k)}};
    const auto N = termination_bound(term, sum, at);
    if (!N) throw DomainError("kernel does not terminate at k = " + std::to_string(k));
    std::vector<RatFunc> terms;
    for (long n = 0; n < *N; ++n) {
        at[sum] = n;
        terms.push_back(eval_term(term, at));
    }
    return sum_lazy(terms);
}

BigRational terminating_sum_exact(const HyperTerm& term, long k, Var sum, Var rec) {
    const RatFunc v = terminating_sum(term, k, sum, rec);
    if (!v.is_constant()) throw UsageError("terminating sum still depends on z");
    return v.constant_value();
}

namespace {

template <class F>
void run_parallel(long count, F&& body) {
    std::exception_ptr first;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        try {
            body(i);
        } catch (...) {
#pragma omp critical
            if (!first) first = std::current_exception();
        }
    }
    if (first) std::rethrow_exception(first);
}

RatFunc residual_at(const std::vector<Polynomial>& coeffs, const std::vector<RatFunc>& values, long lo, long k,
                    Var rec) {
    std::vector<RatFunc> parts;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const std::size_t idx = static_cast<std::size_t>(k - lo) + i;
        if (idx >= values.size()) throw UsageError("recurrence check runs past the computed values");
        parts.push_back(RatFunc(coeffs[i].evaluate(rec, k)) * values[idx]);
    }
    return sum_lazy(parts);
}

} // namespace

std::vector<RatFunc> terminating_sums(const HyperTerm& term, long lo, long hi, Var sum, Var rec) {
    const long count = hi >= lo ? hi - lo + 1 : 0;
    std::vector<RatFunc> out(static_cast<std::size_t>(count));
    run_parallel(count, [&](long i) { out[static_cast<std::size_t>(i)] = terminating_sum(term, lo + i, sum, rec); });
    return out;
}

std::vector<RatFunc> terminating_sums_serial(const HyperTerm& term, long lo, long hi, Var sum, Var rec) {
    std::vector<RatFunc> out;
    for (long k = lo; k <= hi; ++k) out.push_back(terminating_sum(term, k, sum, rec));
    return out;
}

std::vector<RatFunc> recurrence_residuals(const std::vector<Polynomial>& coeffs, const std::vector<RatFunc>& values,
                                          long lo, long count, Var rec) {
    std::vector<RatFunc> out(static_cast<std::size_t>(std::max(0L, count)));
    run_parallel(count, [&](long i) { out[static_cast<std::size_t>(i)] = residual_at(coeffs, values, lo, lo + i, rec); });
    return out;
}

std::vector<RatFunc> recurrence_residuals_serial(const std::vector<Polynomial>& coeffs,
                                                 const std::vector<RatFunc>& values, long lo, long count, Var rec) {
    std::vector<RatFunc> out;
    for (long i = 0; i < count; ++i) out.push_back(residual_at(coeffs, values, lo, lo + i, rec));
    return out;
}

} // namespace wzpi
