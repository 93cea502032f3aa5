#pragma once

#include "wzpi/errors.hpp"
#include "wzpi/term_parser.hpp"

#include <json.hpp>

#include <fstream>
#include <string>

namespace testing {

inline const nlohmann::json& oracle() {
    static const nlohmann::json data = [] {
        std::ifstream in(WZPI_ORACLE_FILE);
        if (!in) throw std::runtime_error("oracle file missing: " WZPI_ORACLE_FILE);
        return nlohmann::json::parse(in);
    }();
    return data;
}

inline wzpi::BigRational Q(const std::string& s) { return wzpi::parse_rational(s); }

inline wzpi::Polynomial P(const std::string& s, const wzpi::TermVars& v = {}) { return wzpi::parse_polynomial(s, v); }

inline wzpi::HyperTerm T(const std::string& s) { return wzpi::parse_term(s); }

inline std::string data_file(const std::string& name) { return std::string(WZPI_TEST_DATA) + "/" + name; }

} // namespace testing
