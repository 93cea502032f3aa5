#pragma once

#include "wzpi/hyperterm.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wzpi {

/// O(K) = sum_i coeffs[i] K^i with certificate R: for F = R G,
/// sum_i P_i(k) G(n, k+i) = F(n+1, k) - F(n, k).
struct Telescoper {
    int order = 0;
    std::vector<Polynomial> coeffs;
    RatFunc certificate;
    Var sum = Var::N;
    Var rec = Var::K;
};

struct CertificateCheckReport {
    bool identity_holds = false;
    bool boundary_at_zero = false;
    bool tail_vanishes = false;
    RatFunc residual;
    std::vector<std::string> details;
};

/// Creative telescoping: orders 1..max_order in turn, first success wins.
std::optional<Telescoper> find_telescoper(const HyperTerm& term, Var sum, Var rec, int max_order);

/// Same search for a fixed order only.
std::optional<Telescoper> telescoper_of_order(const HyperTerm& term, Var sum, Var rec, int order);

/// Divide by the polynomial gcd and integer content; positive lead on P_m.
std::vector<Polynomial> normalize_operator(const std::vector<Polynomial>& coeffs);

/// Symbolic check of the telescoping identity with independently computed
/// k-shift ratios; boundary fields are filled by boundary_check over
/// [k_lo, k_hi].
CertificateCheckReport verify_certificate(const HyperTerm& term, const Telescoper& t, long k_lo = 0, long k_hi = 20);

/// F(0, k) = 0 and F(n, k) = 0 beyond the support, for k in [k_lo, k_hi].
CertificateCheckReport boundary_check(const HyperTerm& term, const Telescoper& t, long k_lo, long k_hi);

/// Human-readable operator, e.g. "(k+1)*K^1 + (-2*k-2)".
std::string render_operator(const Telescoper& t, const VarNames& names = {});

} // namespace wzpi
