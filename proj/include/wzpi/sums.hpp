#pragma once

#include "wzpi/hyperterm.hpp"

#include <vector>

namespace wzpi {

/// sum_{n=0}^{N-1} G(n, k) with N the termination bound at k; the result
/// is a rational function of z when the kernel involves z.
RatFunc terminating_sum(const HyperTerm& term, long k, Var sum = Var::N, Var rec = Var::K);

/// Exact rational variant; throws UsageError when z is still present.
BigRational terminating_sum_exact(const HyperTerm& term, long k, Var sum = Var::N, Var rec = Var::K);

/// r_k for k = lo .. hi. The OpenMP version distributes k over threads;
/// the serial version is the reference it is tested against.
std::vector<RatFunc> terminating_sums(const HyperTerm& term, long lo, long hi, Var sum = Var::N, Var rec = Var::K);
std::vector<RatFunc> terminating_sums_serial(const HyperTerm& term, long lo, long hi, Var sum = Var::N,
                                             Var rec = Var::K);

/// sum_i P_i(k) v[k - lo + i] for k = lo .. lo + count - 1, where v holds
/// values starting at index lo. Parallel and serial versions.
std::vector<RatFunc> recurrence_residuals(const std::vector<Polynomial>& coeffs, const std::vector<RatFunc>& values,
                                          long lo, long count, Var rec = Var::K);
std::vector<RatFunc> recurrence_residuals_serial(const std::vector<Polynomial>& coeffs,
                                                 const std::vector<RatFunc>& values, long lo, long count,
                                                 Var rec = Var::K);

} // namespace wzpi
