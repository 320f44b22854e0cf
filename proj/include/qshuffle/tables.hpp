#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qshuffle/errors.hpp"
#include "qshuffle/laurent.hpp"
#include "qshuffle/spectrum.hpp"
#include "qshuffle/tableaux.hpp"

namespace qshuffle {

struct EigenTableRow {
    SkewShape strip;
    std::uint64_t multiplicity = 0;  // d^μ f^λ
    std::vector<LaurentPoly> values; // E(1), ..., E(n)
};

struct EigenTable {
    int n = 0;
    std::vector<EigenTableRow> rows;
};

/// Rows for every strip with d^μ ≠ 0: λ in reverse lexicographic order, then |μ| descending, then μ ascending.
inline EigenTable eigen_table(int n) {
    if (n < 1) throw OutOfRange("eigentable needs n >= 1");
    EigenTable t{n, {}};
    for (const auto& lambda : enumerate_partitions(n))
        for (const auto& row : strip_rows(lambda, 0, true)) {
            auto all = eigenvalue_recursive_all(row.strip);
            EigenTableRow r{row.strip, row.multiplicity, {}};
            for (int k = 1; k <= n; ++k) r.values.push_back(static_cast<std::size_t>(k) < all.size() ? all[static_cast<std::size_t>(k)] : LaurentPoly());
            t.rows.push_back(std::move(r));
        }
    return t;
}

namespace detail {

inline std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace detail

/// Grid (Shape | Mult. | E(1) ... E(n)) followed by the list of nonzero E(k), k >= 1, expanded.
inline std::string eigen_table_markdown(const EigenTable& t) {
    std::ostringstream os;
    os << "## Eigenvalues of R_{" << t.n << ",k}\n\n";
    os << "| Shape | Mult. |";
    for (int k = 1; k <= t.n; ++k) os << " E(" << k << ") |";
    os << "\n|---|---|";
    for (int k = 1; k <= t.n; ++k) os << "---|";
    os << "\n";
    for (const auto& r : t.rows) {
        os << "| " << r.strip.to_string() << " | " << r.multiplicity << " |";
        for (const auto& v : r.values) os << " " << v.to_string() << " |";
        os << "\n";
    }
    os << "\n## Nonzero eigenvalues, expanded\n\n";
    os << "| Shape | k | E(k) |\n|---|---|---|\n";
    for (const auto& r : t.rows)
        for (int k = 1; k <= t.n; ++k) {
            const auto& v = r.values[static_cast<std::size_t>(k - 1)];
            if (!v.is_zero()) os << "| " << r.strip.to_string() << " | " << k << " | " << v.to_string() << " |\n";
        }
    return os.str();
}

inline std::string eigen_table_csv(const EigenTable& t) {
    std::ostringstream os;
    os << "shape,mult";
    for (int k = 1; k <= t.n; ++k) os << ",E(" << k << ")";
    os << "\n";
    for (const auto& r : t.rows) {
        os << detail::csv_cell(r.strip.to_string()) << "," << r.multiplicity;
        for (const auto& v : r.values) os << "," << detail::csv_cell(v.to_string());
        os << "\n";
    }
    return os.str();
}

inline nlohmann::json eigen_table_json(const EigenTable& t) {
    nlohmann::json j;
    j["n"] = t.n;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : t.rows) {
        nlohmann::json row{{"lambda", r.strip.outer().to_string()}, {"mu", r.strip.inner().to_string()}, {"shape", r.strip.to_string()}, {"mult", r.multiplicity}};
        row["eigenvalues"] = nlohmann::json::array();
        for (const auto& v : r.values) row["eigenvalues"].push_back(v.to_string());
        j["rows"].push_back(row);
    }
    return j;
}

}  // namespace qshuffle
