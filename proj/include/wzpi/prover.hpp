#pragma once

#include "wzpi/catalog.hpp"
#include "wzpi/telescope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wzpi {

enum class ProofStatus { ProvedForIntegers, FullyValidated, Failed };

/// Outcome of the non-integer evaluation stage.
enum class NumericStage { NotRun, Passed, Failed, Divergent };

std::string to_string(ProofStatus s);
std::string to_string(NumericStage s);

struct InitialValue {
    long k = 0;
    RatFunc left;
    RatFunc right;
    bool equal = false;
};

struct SampleAgreement {
    BigRational k;
    std::optional<int> digits; ///< nullopt when a side diverges or has a pole
    std::string note;
};

/// Digits by which both sides at k* match the closed form; a side that
/// cannot be evaluated is nullopt.
struct SpecializationCheck {
    BigRational k;
    std::optional<int> left_digits;
    std::optional<int> right_digits;
    std::optional<int> anchor_digits;
    int digits_matched = 0;
    std::vector<std::string> notes;
};

struct ProofOptions {
    int max_order = 6;
    long k_lo = 0;
    long k_hi = 20;
    long propagation_hi = 30;
    int digits = 60;
    bool numeric = true;
};

struct ProofReport {
    std::string task;
    std::optional<Telescoper> left_telescoper;
    std::optional<Telescoper> right_telescoper;
    std::optional<CertificateCheckReport> left_check;
    std::optional<CertificateCheckReport> right_check;
    bool operators_equal = false;
    bool common_annihilation = false;
    std::vector<InitialValue> initial_values;
    bool leading_coeff_nonvanishing = false;
    std::vector<long> leading_coeff_roots;
    long propagation_lo = 0;
    long propagation_hi = 0;
    bool propagation_holds = false;
    std::string carlson_note;
    std::vector<SampleAgreement> carlson;
    std::optional<SpecializationCheck> specialization;
    NumericStage numeric = NumericStage::NotRun;
    ProofStatus status = ProofStatus::Failed;
    std::string failed_step;
    std::vector<std::string> diagnostics;

    std::string status_text() const;
};

/// Fixed statement attached to every report: the passage from integer k to
/// complex k rests on Carlson's theorem, whose hypotheses are not checked.
extern const char* const kCarlsonNote;

/// Orders match and the normalized coefficient vectors agree.
bool operators_equal_normalized(const Telescoper& a, const Telescoper& b);

/// (k, r_k, s_k, r_k == s_k) for k = 0 .. count-1 by exact summation.
std::vector<InitialValue> check_initial_values(const HyperTerm& left, const HyperTerm& right, long count);

/// Symbolic proof for nonnegative integer k, followed by the numeric stage
/// when the task carries a specialization point.
ProofReport prove_pair(const ProofTask& task, const ProofOptions& opts = {});

/// Matched digits of r(k) and s(k) as convergent series at each sample.
std::vector<SampleAgreement> carlson_numeric_check(const ProofTask& task, const std::vector<BigRational>& samples,
                                                   int digits);

/// Both sides at k* against the closed form (and the anchor when given).
SpecializationCheck specialization_check(const ProofTask& task, int digits);

struct ZIdentityReport {
    std::string identity;
    std::vector<std::pair<long, bool>> exact_checks;
    bool exact_holds = false;
    /// Present when the telescoping path ran over Q(z).
    std::optional<ProofReport> telescoping;
    bool passed = false;
};

/// Exact equality as rational functions of z for each k; optionally the
/// telescoping pipeline over Q(z) with propagation up to `opts.propagation_hi`.
ZIdentityReport verify_z_identity(const ZIdentity& id, const std::vector<long>& k_values, bool also_telescope,
                                  const ProofOptions& opts = {});

/// Weighted evaluation of a theta link at z0 against factor * target series.
struct ThetaLinkCheck {
    std::string identity;
    std::string target;
    std::optional<int> digits; ///< nullopt when the weighted series diverges
    std::string note;
};

ThetaLinkCheck check_theta_link(const ThetaLink& link, int digits);

} // namespace wzpi
