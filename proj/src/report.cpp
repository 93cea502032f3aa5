#include "wzpi/report.hpp"

#include <sstream>

namespace wzpi {

using nlohmann::json;

namespace {

json value_json(const RatFunc& v) {
    if (v.is_constant()) return rational_json(v.constant_value());
    return v.to_string();
}

json digits_json(const std::optional<int>& d) { return d ? json(*d) : json(nullptr); }

bool task_ok(const ProofReport& r) {
    return r.status == ProofStatus::FullyValidated ||
           (r.status == ProofStatus::ProvedForIntegers && r.numeric == NumericStage::Divergent);
}

} // namespace

json rational_json(const BigRational& r) { return to_string(r); }

json to_json(const CertificateCheckReport& c) {
    return {{"identityHolds", c.identity_holds},
            {"boundaryAtZero", c.boundary_at_zero},
            {"tailVanishes", c.tail_vanishes},
            {"details", c.details}};
}

json telescoper_json(const Telescoper& t) {
    json coeffs = json::array();
    for (const auto& p : t.coeffs) {
        json dense = json::array();
        for (const auto& c : p.coefficients(t.rec)) {
            if (c.is_constant()) dense.push_back(rational_json(c.is_zero() ? BigRational(0) : c.constant_value()));
            else dense.push_back(c.to_string());
        }
        coeffs.push_back(dense);
    }
    return {{"order", t.order}, {"coeffs", coeffs}, {"operator", render_operator(t)},
            {"certificate", t.certificate.to_string()}};
}

json to_json(const ProofReport& r) {
    json j;
    j["task"] = r.task;
    j["status"] = r.status_text();
    j["telescopers"] = json::array();
    for (const auto* t : {&r.left_telescoper, &r.right_telescoper})
        if (*t) j["telescopers"].push_back(telescoper_json(**t));
    j["certificateChecks"] = json::array();
    for (const auto* c : {&r.left_check, &r.right_check})
        if (*c) j["certificateChecks"].push_back(to_json(**c));
    j["operatorsEqual"] = r.operators_equal;
    j["commonAnnihilation"] = r.common_annihilation;
    j["initialValues"] = json::array();
    for (const auto& iv : r.initial_values)
        j["initialValues"].push_back({{"k", iv.k}, {"r", value_json(iv.left)}, {"s", value_json(iv.right)},
                                      {"equal", iv.equal}});
    j["leadingCoeff"] = {{"nonvanishing", r.leading_coeff_nonvanishing},
                         {"roots", r.leading_coeff_roots},
                         {"range", {r.propagation_lo, r.propagation_hi}}};
    j["propagation"] = {{"holds", r.propagation_holds}, {"range", {r.propagation_lo, r.propagation_hi}}};
    json samples = json::array();
    for (const auto& s : r.carlson)
        samples.push_back({{"k", rational_json(s.k)}, {"digits", digits_json(s.digits)}, {"note", s.note}});
    j["carlson"] = {{"note", r.carlson_note}, {"samples", samples}};
    if (r.specialization) {
        const auto& sp = *r.specialization;
        j["specialization"] = {{"k", rational_json(sp.k)},
                               {"digitsMatched", sp.digits_matched},
                               {"leftDigits", digits_json(sp.left_digits)},
                               {"rightDigits", digits_json(sp.right_digits)},
                               {"anchorDigits", digits_json(sp.anchor_digits)},
                               {"notes", sp.notes}};
    } else {
        j["specialization"] = nullptr;
    }
    j["numeric"] = to_string(r.numeric);
    j["diagnostics"] = r.diagnostics;
    return j;
}

json to_json(const ZIdentityReport& r) {
    json checks = json::array();
    for (const auto& [k, ok] : r.exact_checks) checks.push_back({{"k", k}, {"equal", ok}});
    json j = {{"identity", r.identity}, {"exactChecks", checks}, {"exactHolds", r.exact_holds}, {"passed", r.passed}};
    j["telescoping"] = r.telescoping ? to_json(*r.telescoping) : json(nullptr);
    return j;
}

json to_json(const ThetaLinkCheck& c) {
    return {{"identity", c.identity}, {"target", c.target}, {"digits", digits_json(c.digits)}, {"note", c.note}};
}

bool BundleReport::passed(int digits) const {
    for (const auto& t : tasks)
        if (!task_ok(t)) return false;
    if (identity && !identity->passed) return false;
    for (const auto& l : links)
        if (l.digits && *l.digits < digits - 2) return false;
    return true;
}

json to_json(const BundleReport& b, int digits) {
    json tasks = json::array();
    for (const auto& t : b.tasks) tasks.push_back(to_json(t));
    json links = json::array();
    for (const auto& l : b.links) links.push_back(to_json(l));
    return {{"example", b.example},
            {"tasks", tasks},
            {"identity", b.identity ? to_json(*b.identity) : json(nullptr)},
            {"thetaLinks", links},
            {"passed", b.passed(digits)}};
}

std::string render_text(const ProofReport& r) {
    std::ostringstream out;
    out << "task " << r.task << ": " << r.status_text() << "\n";
    const char* side[] = {"left", "right"};
    int i = 0;
    for (const auto* t : {&r.left_telescoper, &r.right_telescoper}) {
        if (*t) out << "  " << side[i] << " telescoper (order " << (*t)->order << "): " << render_operator(**t) << "\n";
        ++i;
    }
    if (r.left_telescoper && r.right_telescoper)
        out << "  operators equal: " << (r.operators_equal ? "yes" : r.common_annihilation ? "common annihilation" : "no")
            << "\n";
    for (const auto& iv : r.initial_values)
        out << "  r_" << iv.k << " = " << value_json(iv.left).get<std::string>().substr(0, 60)
            << (iv.equal ? "  (= s)" : "  (!= s)") << "\n";
    if (!r.leading_coeff_roots.empty()) {
        out << "  leading coefficient roots:";
        for (long k : r.leading_coeff_roots) out << " " << k;
        out << "\n";
    }
    if (r.propagation_holds)
        out << "  propagation r_k = s_k exact on [" << r.propagation_lo << ", " << r.propagation_hi << "]\n";
    for (const auto& s : r.carlson) {
        out << "  sample k = " << to_string(s.k) << ": ";
        if (s.digits) out << *s.digits << " digits\n";
        else out << s.note << "\n";
    }
    if (r.specialization) {
        out << "  specialization k = " << to_string(r.specialization->k) << ": " << r.specialization->digits_matched
            << " digits\n";
        for (const auto& n : r.specialization->notes) out << "    " << n << "\n";
    }
    for (const auto& d : r.diagnostics) out << "  ! " << d << "\n";
    return out.str();
}

std::string render_text(const BundleReport& b, int digits) {
    std::ostringstream out;
    out << "example " << b.example << "\n";
    for (const auto& t : b.tasks) out << render_text(t);
    if (b.identity) {
        out << "identity " << b.identity->identity << ": exact checks " << (b.identity->exact_holds ? "pass" : "FAIL")
            << "\n";
        if (b.identity->telescoping) out << render_text(*b.identity->telescoping);
    }
    for (const auto& l : b.links) {
        out << "theta link " << l.identity << " -> " << l.target << ": ";
        if (l.digits) out << *l.digits << " digits";
        else out << "not evaluable";
        out << " (" << l.note << ")\n";
    }
    out << (b.passed(digits) ? "PASSED" : "FAILED") << "\n";
    return out.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace wzpi
