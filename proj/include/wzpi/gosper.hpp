#pragma once

#include "wzpi/hyperterm.hpp"

#include <optional>
#include <vector>

namespace wzpi {

/// r(n) = a(n)/b(n) * c(n+1)/c(n) with gcd(a(n), b(n+j)) = 1 for all j >= 0.
struct GosperNormalForm {
    Polynomial a;
    Polynomial b;
    Polynomial c;
};

GosperNormalForm gosper_normal_form(const RatFunc& r, Var n = Var::N);

/// Upper bound on deg x for a(n) x(n+1) - b(n-1) x(n) = f(n) with deg f =
/// f_degree; nullopt when no polynomial solution can exist.
std::optional<int> gosper_degree_bound(const Polynomial& a, const Polynomial& b, int f_degree, Var n = Var::N);

/// S(n) = R(n) G(n) satisfies S(n+1) - S(n) = G(n).
struct GosperCertificate {
    RatFunc R;
};

std::optional<GosperCertificate> gosper_solve(const HyperTerm& term, Var sum = Var::N);

/// Gosper's algorithm on a bare shift quotient r = T(n+1)/T(n) whose
/// coefficients live in `field`: Y with Y(n+1) r(n) - Y(n) = 1.
std::optional<RatFunc> gosper_from_ratio(const RatFunc& r, Var n, VarMask field);

/// Parametrized Gosper step: constants P_i in `field` (not all zero) and a
/// rational Y with Y(n+1) r(n) - Y(n) = sum_i P_i w_i(n). When several
/// independent solutions exist the one whose normalized P has the least total
/// degree (ties: lexicographic rendering) is returned.
struct ParametricSolution {
    std::vector<Polynomial> coeffs; ///< normalized P_i
    RatFunc Y;
};

std::optional<ParametricSolution> parametric_gosper(const RatFunc& r, const std::vector<Polynomial>& w, Var n,
                                                    VarMask field);

/// Scale a nonzero vector of field elements to polynomials without a common
/// polynomial factor or integer content, last nonzero entry with positive
/// leading coefficient. Returns the polynomials and the scale factor s with
/// result_i = s * v_i.
std::pair<std::vector<Polynomial>, RatFunc> primitive_vector(const std::vector<RatFunc>& v);

} // namespace wzpi
