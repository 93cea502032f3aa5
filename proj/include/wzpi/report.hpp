#pragma once

#include "wzpi/prover.hpp"

#include <json.hpp>

#include <string>

namespace wzpi {

/// Result of `prove --example N`: task reports plus, for the z-parameter
/// examples, the identity check and the theta links.
struct BundleReport {
    int example = 0;
    std::vector<ProofReport> tasks;
    std::optional<ZIdentityReport> identity;
    std::vector<ThetaLinkCheck> links;

    /// Every task is fully validated, or proved for integers with a side that
    /// cannot be evaluated numerically; identity and evaluable links pass.
    bool passed(int digits) const;
};

/// Rationals are written as "p/q" strings (integers as "p").
nlohmann::json rational_json(const BigRational& r);
nlohmann::json telescoper_json(const Telescoper& t);
nlohmann::json to_json(const CertificateCheckReport& c);
nlohmann::json to_json(const ProofReport& r);
nlohmann::json to_json(const ZIdentityReport& r);
nlohmann::json to_json(const ThetaLinkCheck& c);
nlohmann::json to_json(const BundleReport& b, int digits);

/// Plain-text report.
std::string render_text(const ProofReport& r);
std::string render_text(const BundleReport& b, int digits);

/// Canonical serialization: sorted keys, two-space indentation.
std::string dump(const nlohmann::json& j);

} // namespace wzpi
