#pragma once

#include "wzpi/hyperterm.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wzpi {

/// A Ramanujan-type series sum_n G(n) with its closed form.
struct SeriesEntry {
    std::string id;
    std::string source; ///< term DSL text
    HyperTerm kernel;
    AlgebraicConstant closed;
    std::string provenance;
};

/// Two kernels with r_k = sum_n A(n,k) and s_k = sum_n B(n,k), claimed equal
/// for every k. At k* both sides become convergent series whose common value
/// is `closed`.
struct ProofTask {
    std::string id;
    std::string left_source;
    std::string right_source;
    HyperTerm left;
    HyperTerm right;
    std::optional<BigRational> k_star;
    std::optional<AlgebraicConstant> closed;
    std::string series_id;
    std::string anchor_id;
    std::vector<BigRational> carlson_samples;
};

/// Two z-dependent kernels whose terminating sums agree as rational
/// functions of z at every nonnegative integer k.
struct ZIdentity {
    std::string id;
    std::string left_source;
    std::string right_source;
    HyperTerm left;
    HyperTerm right;
};

/// Applying a + b*theta at z0 to the left side of a z identity at k* gives
/// factor times the target series.
struct ThetaLink {
    std::string identity_id;
    std::string source; ///< left kernel at k*, still carrying z^n
    HyperTerm coefficients;
    BigRational a;
    BigRational b;
    BigRational z0;
    std::string target_series;
    AlgebraicConstant factor;
    std::optional<AlgebraicConstant> value; ///< known value of the weighted sum
};

/// What `prove --example N` runs.
struct ExampleBundle {
    int number = 0;
    std::vector<std::string> task_ids;
    std::optional<std::string> identity_id;
};

const std::vector<SeriesEntry>& series_catalog();
const std::vector<ProofTask>& task_catalog();
const std::vector<ZIdentity>& identity_catalog();
const std::vector<ThetaLink>& theta_links();
const std::vector<ExampleBundle>& example_bundles();

/// Lookups by id; nullptr when absent.
const SeriesEntry* find_series(std::string_view id);
const ProofTask* find_task(std::string_view id);
const ZIdentity* find_identity(std::string_view id);
const ExampleBundle* find_example(int number);

/// The anchor kernel (1/2)_n^3/(1)_n^3 (1/64)^n (42n+5) with value 16/pi.
const SeriesEntry& anchor_series();

/// Task file format, one "key: value" per line ("#" comments):
///   task: name
///   vars: n, k            (optional, default n, k, z)
///   left: <term>
///   right: <term>
///   kstar: -1/2           (optional)
///   closed: 18*sqrt(7)/pi (optional, value at kstar)
///   series: 65-8          (optional)
///   anchor: anchor        (optional)
///   samples: 1/4, -1/4    (optional Carlson sample points)
ProofTask parse_task(std::string_view text);

/// Inverse of parse_task.
std::string render_task(const ProofTask& task);

} // namespace wzpi
