#pragma once

// JSON form of bivariate polynomials:
//   {"vars": ["x", "y"], "terms": [[a, b, "c"], ...]}
// with terms sorted by (b, a) ascending and no zero coefficients.

#include <regex>
#include <string>

#include <nlohmann/json.hpp>

#include "mzeta/bipoly.hpp"
#include "mzeta/error.hpp"

namespace mzeta {

inline nlohmann::json to_json(const bipoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) terms.push_back({m.x_deg, m.y_deg, c.str()});
    return {{"vars", {"x", "y"}}, {"terms", std::move(terms)}};
}

/// Strict parse; anything off-schema throws invalid_input.
inline bipoly bipoly_from_json(const nlohmann::json& j) {
    auto fail = [](const std::string& why) -> invalid_input { return invalid_input("polynomial JSON: " + why); };
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms")) throw fail("expected object with vars and terms");
    if (j.at("vars") != nlohmann::json({"x", "y"})) throw fail("vars must be [\"x\",\"y\"]");
    const auto& terms = j.at("terms");
    if (!terms.is_array()) throw fail("terms must be an array");
    static const std::regex decimal("-?[1-9][0-9]*");
    bipoly p;
    std::optional<monomial> previous;
    for (const auto& t : terms) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer() ||
            !t[2].is_string())
            throw fail("each term must be [int, int, \"coefficient\"]");
        const auto a = t[0].get<long long>();
        const auto b = t[1].get<long long>();
        if (a < 0 || b < 0 || a > 1'000'000 || b > 1'000'000) throw fail("exponent out of range");
        const auto& c = t[2].get_ref<const std::string&>();
        if (!std::regex_match(c, decimal)) throw fail("coefficient '" + c + "' is not a nonzero decimal integer");
        monomial m{static_cast<int>(a), static_cast<int>(b)};
        if (previous && !(*previous < m)) throw fail("terms must be strictly sorted by (b, a)");
        previous = m;
        p.add_term(m, integer(c));
    }
    return p;
}

/// Parse polynomial JSON text.
inline bipoly parse_bipoly_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw invalid_input(std::string("polynomial JSON: ") + e.what());
    }
    return bipoly_from_json(j);
}

} // namespace mzeta
