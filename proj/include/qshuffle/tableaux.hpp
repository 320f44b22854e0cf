#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qshuffle/errors.hpp"
#include "qshuffle/laurent.hpp"

namespace qshuffle {

/// Integer partition with weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw OutOfRange("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw OutOfRange("partition parts must be weakly decreasing");
        }
    }

    /// Accepts "(3,1)", "3,1", "2^2,1", "(1^3)", and "∅", "()", "empty" or "" for the empty partition.
    static Partition parse(std::string_view text) {
        std::string s;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s += c;
        if (s == "∅" || s == "empty" || s == "()" || s.empty()) return {};
        if (s.front() == '(') {
            if (s.back() != ')') throw ParseError("unbalanced parentheses in partition '" + s + "'");
            s = s.substr(1, s.size() - 2);
        }
        std::vector<int> parts;
        std::size_t pos = 0;
        while (pos <= s.size()) {
            std::size_t comma = std::min(s.find(',', pos), s.size());
            std::string tok = s.substr(pos, comma - pos);
            std::size_t caret = tok.find('^');
            std::string base = tok.substr(0, caret);
            std::string rep = caret == std::string::npos ? "1" : tok.substr(caret + 1);
            auto digits = [](const std::string& x) {
                return !x.empty() && std::all_of(x.begin(), x.end(), [](unsigned char c) { return std::isdigit(c); });
            };
            if (!digits(base) || !digits(rep)) throw ParseError("bad partition '" + std::string(text) + "'");
            for (int r = std::stoi(rep); r > 0; --r) parts.push_back(std::stoi(base));
            pos = comma + 1;
        }
        try {
            return Partition(std::move(parts));
        } catch (const OutOfRange& e) {
            throw ParseError(std::string(e.what()) + ": '" + std::string(text) + "'");
        }
    }

    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
    [[nodiscard]] int length() const { return static_cast<int>(parts_.size()); }
    [[nodiscard]] int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    /// Length of row r (1-indexed); zero past the last row.
    [[nodiscard]] int row(int r) const { return r >= 1 && r <= length() ? parts_[static_cast<std::size_t>(r - 1)] : 0; }

    [[nodiscard]] bool contains(const Partition& mu) const {
        if (mu.length() > length()) return false;
        for (int r = 1; r <= mu.length(); ++r)
            if (mu.row(r) > row(r)) return false;
        return true;
    }

    [[nodiscard]] std::string to_string() const {
        if (parts_.empty()) return "∅";
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
        return s + ")";
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
};

/// Number of standard Young tableaux by the hook length formula.
inline std::uint64_t hook_length_count(const Partition& lambda) {
    int n = lambda.size();
    std::vector<int> conj(static_cast<std::size_t>(lambda.row(1)), 0);
    for (int p : lambda.parts())
        for (int c = 0; c < p; ++c) ++conj[static_cast<std::size_t>(c)];
    // n! / prod hooks, accumulated with exact intermediate division
    std::vector<int> hooks;
    for (int r = 1; r <= lambda.length(); ++r)
        for (int c = 1; c <= lambda.row(r); ++c) hooks.push_back(lambda.row(r) - c + conj[static_cast<std::size_t>(c - 1)] - r + 1);
    mpz_class num = 1;
    for (int i = 2; i <= n; ++i) num *= i;
    mpz_class den = 1;
    for (int h : hooks) den *= h;
    mpz_class f = num / den;
    return f.get_ui();
}

/// All partitions of n, in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> enumerate_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// Skew shape outer/inner with inner contained in outer.
class SkewShape {
public:
    SkewShape() = default;
    SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
        if (!outer_.contains(inner_)) throw OutOfRange(inner_.to_string() + " is not contained in " + outer_.to_string());
    }

    /// "λ/μ"; the separators "∖" and "\" are accepted too.
    static SkewShape parse(std::string_view text) {
        std::string s(text);
        for (std::string_view sep : {"∖", "\\", "/"}) {
            auto p = s.find(sep);
            if (p != std::string::npos) {
                try {
                    return {Partition::parse(s.substr(0, p)), Partition::parse(s.substr(p + sep.size()))};
                } catch (const OutOfRange& e) {
                    throw ParseError(e.what());
                }
            }
        }
        throw ParseError("expected a skew shape 'outer/inner', got '" + s + "'");
    }

    [[nodiscard]] const Partition& outer() const { return outer_; }
    [[nodiscard]] const Partition& inner() const { return inner_; }
    [[nodiscard]] int n() const { return outer_.size(); }
    [[nodiscard]] int j() const { return inner_.size(); }
    [[nodiscard]] int cell_count() const { return n() - j(); }

    /// At most one cell per column, i.e. outer_{r+1} <= inner_r for every row r.
    [[nodiscard]] bool is_horizontal_strip() const {
        for (int r = 1; r < outer_.length(); ++r)
            if (outer_.row(r + 1) > inner_.row(r)) return false;
        return true;
    }
    [[nodiscard]] bool is_single_row() const {
        int rows = 0;
        for (int r = 1; r <= outer_.length(); ++r) rows += outer_.row(r) > inner_.row(r);
        return rows <= 1;
    }

    /// Cells (row, column), 1-indexed, in reading order: top row first, left to right.
    [[nodiscard]] std::vector<std::pair<int, int>> cells() const {
        std::vector<std::pair<int, int>> out;
        for (int r = 1; r <= outer_.length(); ++r)
            for (int c = inner_.row(r) + 1; c <= outer_.row(r); ++c) out.emplace_back(r, c);
        return out;
    }

    [[nodiscard]] std::string to_string() const { return outer_.to_string() + "∖" + inner_.to_string(); }

    friend bool operator==(const SkewShape&, const SkewShape&) = default;
    friend auto operator<=>(const SkewShape&, const SkewShape&) = default;

private:
    Partition outer_;
    Partition inner_;
};

/// Standard Young tableau stored by rows (English notation).
class StandardTableau {
public:
    explicit StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        int n = 0;
        for (const auto& r : rows_) n += static_cast<int>(r.size());
        row_of_.assign(static_cast<std::size_t>(n) + 1, 0);
        for (std::size_t r = 0; r < rows_.size(); ++r)
            for (int x : rows_[r]) row_of_[static_cast<std::size_t>(x)] = static_cast<int>(r) + 1;
    }

    [[nodiscard]] const std::vector<std::vector<int>>& rows() const { return rows_; }
    [[nodiscard]] int size() const { return static_cast<int>(row_of_.size()) - 1; }
    [[nodiscard]] int row_of(int entry) const { return row_of_[static_cast<std::size_t>(entry)]; }
    [[nodiscard]] int column_of(int entry) const {
        const auto& r = rows_[static_cast<std::size_t>(row_of(entry) - 1)];
        return static_cast<int>(std::find(r.begin(), r.end(), entry) - r.begin()) + 1;
    }
    [[nodiscard]] int content_of(int entry) const { return column_of(entry) - row_of(entry); }

    /// i is a descent when it sits in a strictly higher row than i+1.
    [[nodiscard]] std::set<int> descents() const {
        std::set<int> d;
        for (int i = 1; i < size(); ++i)
            if (row_of(i) < row_of(i + 1)) d.insert(i);
        return d;
    }
    /// The smallest entry that is not a descent is even; the empty tableau qualifies.
    [[nodiscard]] bool is_desarrangement() const {
        auto d = descents();
        for (int i = 1; i <= size(); ++i)
            if (!d.count(i)) return i % 2 == 0;
        return true;
    }

private:
    std::vector<std::vector<int>> rows_;
    std::vector<int> row_of_;
};

/// All SYT of shape lambda, built by placing 1, 2, ..., n in turn.
inline std::vector<StandardTableau> enumerate_syt(const Partition& lambda) {
    std::vector<StandardTableau> out;
    int n = lambda.size();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda.length()));
    std::function<void(int)> rec = [&](int next) {
        if (next > n) {
            out.emplace_back(rows);
            return;
        }
        for (int r = 0; r < lambda.length(); ++r) {
            auto len = static_cast<int>(rows[static_cast<std::size_t>(r)].size());
            if (len >= lambda.row(r + 1)) continue;
            if (r > 0 && static_cast<int>(rows[static_cast<std::size_t>(r - 1)].size()) <= len) continue;
            rows[static_cast<std::size_t>(r)].push_back(next);
            rec(next + 1);
            rows[static_cast<std::size_t>(r)].pop_back();
        }
    };
    rec(1);
    return out;
}

inline std::uint64_t syt_count(const Partition& lambda) { return enumerate_syt(lambda).size(); }

/// d^mu: number of desarrangement tableaux of shape mu (d^∅ = 1).
inline std::uint64_t desarrangement_count(const Partition& mu) {
    std::uint64_t d = 0;
    for (const auto& t : enumerate_syt(mu)) d += t.is_desarrangement();
    return d;
}

/// (entry, content) along the filling of the skew cells by |inner|+1..|outer| in reading order.
inline std::vector<std::pair<int, int>> skew_contents(const SkewShape& s) {
    std::vector<std::pair<int, int>> out;
    int entry = s.j();
    for (auto [r, c] : s.cells()) out.emplace_back(++entry, c - r);
    return out;
}

/// [ℓ + 1 - i + content of ℓ]_q for |inner| < ℓ <= |outer|.
inline LaurentPoly dq_constant(const SkewShape& s, int ell, int i) {
    if (ell <= s.j() || ell > s.n()) throw OutOfRange("entry " + std::to_string(ell) + " is not in the skew filling of " + s.to_string());
    int content = skew_contents(s)[static_cast<std::size_t>(ell - s.j() - 1)].second;
    return q_int(ell + 1 - i + content);
}

/// All mu with lambda/mu a horizontal strip, i.e. lambda_{r+1} <= mu_r <= lambda_r.
inline std::vector<Partition> horizontal_strip_inners(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int r) {
        if (r > lambda.length()) {
            out.emplace_back(cur);
            return;
        }
        for (int m = lambda.row(r); m >= lambda.row(r + 1); --m) {
            cur.push_back(m);
            rec(r + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

/// Sum of the contents of the k rightmost cells of a horizontal strip.
inline int rightmost_content_sum(const SkewShape& s, int k) {
    auto cells = s.cells();
    std::sort(cells.begin(), cells.end(), [](auto a, auto b) { return a.second > b.second; });
    int w = 0;
    for (int i = 0; i < k && i < static_cast<int>(cells.size()); ++i) w += cells[static_cast<std::size_t>(i)].second - cells[static_cast<std::size_t>(i)].first;
    return w;
}

}  // namespace qshuffle
