#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "qshuffle/errors.hpp"
#include "qshuffle/hecke.hpp"
#include "qshuffle/laurent.hpp"
#include "qshuffle/permutation.hpp"

namespace qshuffle {

/// {"exp": "coeff", ...} with decimal-string coefficients; zero is {}.
inline nlohmann::json to_json(const LaurentPoly& p) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.to_string();
    return j;
}

inline LaurentPoly laurent_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("Laurent polynomial JSON must be an object");
    std::map<int, Integer> terms;
    for (const auto& [key, value] : j.items()) {
        int e = 0;
        try {
            std::size_t used = 0;
            e = std::stoi(key, &used);
            if (used != key.size()) throw ParseError("bad exponent '" + key + "'");
        } catch (const std::logic_error&) {
            throw ParseError("bad exponent '" + key + "'");
        }
        if (!value.is_string()) throw ParseError("coefficients must be decimal strings");
        terms[e] += Integer::parse(value.get<std::string>());
    }
    return LaurentPoly::from_terms(terms);
}

/// {"n": 4, "terms": [{"perm": "3142", "coeff": {...}}]} in lexicographic order.
inline nlohmann::json to_json(const HeckeElement& a) {
    nlohmann::json j{{"n", a.rank()}, {"terms", nlohmann::json::array()}};
    for (const auto& [w, c] : a.terms()) j["terms"].push_back({{"perm", w.to_one_line()}, {"coeff", to_json(c)}});
    return j;
}

inline HeckeElement hecke_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("terms")) throw ParseError("Hecke element JSON needs \"n\" and \"terms\"");
    int n = j.at("n").get<int>();
    HeckeElement a(n);
    for (const auto& t : j.at("terms")) {
        auto w = Permutation::parse(t.at("perm").get<std::string>());
        if (w.size() != n) throw SizeMismatch("permutation " + w.to_one_line() + " in an element of H_" + std::to_string(n));
        a.add_term(w, laurent_from_json(t.at("coeff")));
    }
    return a;
}

namespace detail {

inline std::vector<std::pair<Permutation, LaurentPoly>> by_length(const HeckeElement& a) {
    auto terms = a.terms();
    std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first.length() < y.first.length(); });
    return terms;
}

inline std::string coefficient_prefix(const std::string& c, bool single_term) {
    if (c == "1") return "";
    if (c == "-1") return "-";
    return (single_term ? c : "(" + c + ")") + "·";
}

}  // namespace detail

/// One line per term, "(q - 1)·T_(1,3)", ordered by length then one-line notation.
inline std::vector<std::string> pretty_terms(const HeckeElement& a) {
    std::vector<std::string> out;
    for (const auto& [w, c] : detail::by_length(a))
        out.push_back(detail::coefficient_prefix(c.to_string(), c.terms().size() == 1) + "T_" + w.to_cycle_string());
    return out;
}

/// Same layout for the specialization at q0.
inline std::vector<std::string> pretty_terms_at(const HeckeElement& a, const Rational& q0) {
    std::vector<std::string> out;
    for (const auto& [w, c] : detail::by_length(a)) {
        Rational v = evaluate(c, q0);
        if (v == 0) continue;
        out.push_back(detail::coefficient_prefix(v.get_str(), true) + "T_" + w.to_cycle_string());
    }
    return out;
}

}  // namespace qshuffle
