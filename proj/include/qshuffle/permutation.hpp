#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qshuffle/errors.hpp"

namespace qshuffle {

/// Permutation of {1..n} in one-line notation: entry i-1 holds w(i).
/// Products follow (ab)(i) = a(b(i)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line) : v_(std::move(one_line)) {
        std::vector<bool> seen(v_.size() + 1, false);
        for (int x : v_) {
            if (x < 1 || x > static_cast<int>(v_.size()) || seen[static_cast<std::size_t>(x)])
                throw OutOfRange("not a permutation of 1.." + std::to_string(v_.size()));
            seen[static_cast<std::size_t>(x)] = true;
        }
    }

    static Permutation identity(int n) {
        Permutation p;
        p.v_.resize(static_cast<std::size_t>(n));
        std::iota(p.v_.begin(), p.v_.end(), 1);
        return p;
    }
    /// Adjacent transposition s_i = (i, i+1).
    static Permutation simple(int n, int i) {
        if (i < 1 || i >= n) throw OutOfRange("s_" + std::to_string(i) + " does not exist in S_" + std::to_string(n));
        return transposition(n, i, i + 1);
    }
    static Permutation transposition(int n, int a, int b) {
        if (a < 1 || b < 1 || a > n || b > n) throw OutOfRange("transposition outside 1.." + std::to_string(n));
        Permutation p = identity(n);
        std::swap(p.v_[static_cast<std::size_t>(a - 1)], p.v_[static_cast<std::size_t>(b - 1)]);
        return p;
    }

    /// Cycle notation such as "(1,3)(2,4)" or "(1,2,3)"; "id" and "()" give the identity.
    static Permutation from_cycles(int n, std::string_view text) {
        Permutation p = identity(n);
        std::string s;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s += c;
        if (s == "id" || s.empty()) return p;
        std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
        std::size_t i = 0;
        while (i < s.size()) {
            if (s[i] != '(') throw ParseError("expected '(' in cycle notation '" + std::string(text) + "'");
            std::size_t close = s.find(')', i);
            if (close == std::string::npos) throw ParseError("unbalanced cycle in '" + std::string(text) + "'");
            std::vector<int> cyc;
            std::size_t pos = i + 1;
            while (pos < close) {
                std::size_t comma = s.find(',', pos);
                if (comma == std::string::npos || comma > close) comma = close;
                std::string tok = s.substr(pos, comma - pos);
                if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
                    throw ParseError("bad cycle entry '" + tok + "'");
                int x = std::stoi(tok);
                if (x < 1 || x > n) throw OutOfRange("cycle entry " + tok + " outside 1.." + std::to_string(n));
                if (used[static_cast<std::size_t>(x)]) throw ParseError("cycles are not disjoint in '" + std::string(text) + "'");
                used[static_cast<std::size_t>(x)] = true;
                cyc.push_back(x);
                pos = comma + 1;
            }
            for (std::size_t j = 0; j < cyc.size(); ++j)
                p.v_[static_cast<std::size_t>(cyc[j] - 1)] = cyc[(j + 1) % cyc.size()];
            i = close + 1;
        }
        return p;
    }

    /// One-line notation: "3142" (single digits) or "3,1,4,2".
    static Permutation parse(std::string_view text) {
        std::vector<int> v;
        std::string s(text);
        if (s.find(',') != std::string::npos) {
            std::size_t pos = 0;
            while (pos <= s.size()) {
                std::size_t comma = std::min(s.find(',', pos), s.size());
                std::string tok = s.substr(pos, comma - pos);
                if (tok.empty()) throw ParseError("bad one-line permutation '" + s + "'");
                v.push_back(std::stoi(tok));
                pos = comma + 1;
            }
        } else {
            for (char c : s) {
                if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad one-line permutation '" + s + "'");
                v.push_back(c - '0');
            }
        }
        try {
            return Permutation(std::move(v));
        } catch (const OutOfRange&) {
            throw ParseError("not a permutation: '" + s + "'");
        }
    }

    [[nodiscard]] int size() const { return static_cast<int>(v_.size()); }
    [[nodiscard]] int operator()(int i) const { return v_[static_cast<std::size_t>(i - 1)]; }
    [[nodiscard]] const std::vector<int>& one_line() const { return v_; }
    [[nodiscard]] bool is_identity() const {
        for (std::size_t i = 0; i < v_.size(); ++i)
            if (v_[i] != static_cast<int>(i) + 1) return false;
        return true;
    }

    friend Permutation compose(const Permutation& a, const Permutation& b) {
        if (a.size() != b.size()) throw SizeMismatch("composing permutations of different sizes");
        Permutation r;
        r.v_.resize(a.v_.size());
        for (std::size_t i = 0; i < a.v_.size(); ++i) r.v_[i] = a.v_[static_cast<std::size_t>(b.v_[i] - 1)];
        return r;
    }
    friend Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

    [[nodiscard]] Permutation inverse() const {
        Permutation r;
        r.v_.resize(v_.size());
        for (std::size_t i = 0; i < v_.size(); ++i) r.v_[static_cast<std::size_t>(v_[i] - 1)] = static_cast<int>(i) + 1;
        return r;
    }

    /// Number of inversions.
    [[nodiscard]] int length() const {
        int inv = 0;
        for (std::size_t i = 0; i < v_.size(); ++i)
            for (std::size_t j = i + 1; j < v_.size(); ++j) inv += v_[i] > v_[j];
        return inv;
    }

    /// True iff l(w s_i) < l(w).
    [[nodiscard]] bool has_right_descent(int i) const { return v_[static_cast<std::size_t>(i - 1)] > v_[static_cast<std::size_t>(i)]; }
    [[nodiscard]] int leftmost_right_descent() const {
        for (int i = 1; i < size(); ++i)
            if (has_right_descent(i)) return i;
        return 0;
    }
    /// w s_i: swaps positions i and i+1.
    [[nodiscard]] Permutation times_simple(int i) const {
        Permutation r = *this;
        std::swap(r.v_[static_cast<std::size_t>(i - 1)], r.v_[static_cast<std::size_t>(i)]);
        return r;
    }

    /// Reduced word [i1,...,il] with w = s_i1 ... s_il, found by stripping leftmost right descents.
    [[nodiscard]] std::vector<int> reduced_word() const {
        std::vector<int> word;
        Permutation w = *this;
        for (int d = w.leftmost_right_descent(); d != 0; d = w.leftmost_right_descent()) {
            word.push_back(d);
            w = w.times_simple(d);
        }
        std::reverse(word.begin(), word.end());
        return word;
    }

    /// Embeds S_n into S_m by fixing n+1..m.
    [[nodiscard]] Permutation lift(int m) const {
        if (m < size()) throw SizeMismatch("cannot lift S_" + std::to_string(size()) + " into S_" + std::to_string(m));
        Permutation r = *this;
        for (int i = size() + 1; i <= m; ++i) r.v_.push_back(i);
        return r;
    }

    [[nodiscard]] std::string to_one_line() const {
        std::string s;
        bool wide = size() > 9;
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (wide && i > 0) s += ',';
            s += std::to_string(v_[i]);
        }
        return s;
    }

    /// Disjoint cycles, fixed points omitted, each cycle led by its smallest entry; "id" for the identity.
    [[nodiscard]] std::string to_cycle_string() const {
        std::string s;
        std::vector<bool> seen(v_.size() + 1, false);
        for (int start = 1; start <= size(); ++start) {
            if (seen[static_cast<std::size_t>(start)] || (*this)(start) == start) continue;
            s += "(";
            int x = start;
            bool first = true;
            while (!seen[static_cast<std::size_t>(x)]) {
                seen[static_cast<std::size_t>(x)] = true;
                if (!first) s += ",";
                s += std::to_string(x);
                first = false;
                x = (*this)(x);
            }
            s += ")";
        }
        return s.empty() ? "id" : s;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.v_ <=> b.v_; }
    friend std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_one_line(); }

private:
    std::vector<int> v_;
};

inline std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

/// Position of w among all permutations of its size in lexicographic one-line order.
inline std::size_t lex_rank(const Permutation& w) {
    int n = w.size();
    std::size_t r = 0;
    for (int i = 1; i <= n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j <= n; ++j) smaller += w(j) < w(i);
        r += static_cast<std::size_t>(smaller) * factorial(n - i);
    }
    return r;
}

inline Permutation lex_unrank(int n, std::size_t r) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> v;
    for (int i = n; i >= 1; --i) {
        std::uint64_t f = factorial(i - 1);
        auto idx = static_cast<std::size_t>(r / f);
        r %= f;
        v.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation(std::move(v));
}

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

/// The minimal coset representative u_I: sends I increasingly onto 1..|I| and the rest onto |I|+1..n.
inline Permutation coset_rep_uI(int n, const std::vector<int>& I) {
    std::vector<bool> in(static_cast<std::size_t>(n) + 1, false);
    for (int x : I) {
        if (x < 1 || x > n) throw BadSubset("element " + std::to_string(x) + " is outside 1.." + std::to_string(n));
        if (in[static_cast<std::size_t>(x)]) throw BadSubset("repeated element " + std::to_string(x));
        in[static_cast<std::size_t>(x)] = true;
    }
    std::vector<int> v(static_cast<std::size_t>(n));
    int next_in = 1;
    int next_out = static_cast<int>(I.size()) + 1;
    for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i - 1)] = in[static_cast<std::size_t>(i)] ? next_in++ : next_out++;
    return Permutation(std::move(v));
}

/// All k-element subsets of {1..n}, each sorted, in lexicographic order.
inline std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

/// Number of k-subsets of positions on which w is increasing.
inline std::uint64_t noninv(const Permutation& w, int k) {
    if (k < 0) return 0;
    int n = w.size();
    if (k == 0) return 1;
    // ending[i][l]: increasing subsequences of length l ending at position i
    std::vector<std::vector<std::uint64_t>> ending(static_cast<std::size_t>(n), std::vector<std::uint64_t>(static_cast<std::size_t>(k) + 1, 0));
    std::uint64_t total = 0;
    for (int i = 0; i < n; ++i) {
        auto& e = ending[static_cast<std::size_t>(i)];
        e[1] = 1;
        for (int j = 0; j < i; ++j) {
            if (w(j + 1) >= w(i + 1)) continue;
            for (int l = 2; l <= k; ++l) e[static_cast<std::size_t>(l)] += ending[static_cast<std::size_t>(j)][static_cast<std::size_t>(l - 1)];
        }
        total += e[static_cast<std::size_t>(k)];
    }
    return total;
}

/// Precomputed multiplication data for S_n, indexed by lexicographic rank.
struct SymmetricGroupTable {
    int n = 0;
    std::vector<Permutation> perms;
    std::vector<int> length;
    std::vector<std::uint32_t> inverse;
    std::vector<std::vector<std::uint32_t>> right;  // right[i][r] = rank(w s_i)
    std::vector<std::vector<std::uint32_t>> left;   // left[i][r] = rank(s_i w)
    // Spanning tree of S_n rooted at the identity: parent(w) = w s_d for the leftmost
    // right descent d, so w = parent(w) s_d with a length increase.
    std::vector<std::uint32_t> parent;
    std::vector<int> parent_gen;
    std::vector<std::vector<std::uint32_t>> children;

    [[nodiscard]] std::size_t order() const { return perms.size(); }
    [[nodiscard]] std::size_t rank_of(const Permutation& w) const {
        if (w.size() != n) throw SizeMismatch("permutation of size " + std::to_string(w.size()) + " used in S_" + std::to_string(n));
        return lex_rank(w);
    }

    explicit SymmetricGroupTable(int size) : n(size) {
        perms = all_permutations(n);
        std::size_t N = perms.size();
        length.resize(N);
        inverse.resize(N);
        right.assign(static_cast<std::size_t>(std::max(n, 1)), std::vector<std::uint32_t>(N));
        left.assign(static_cast<std::size_t>(std::max(n, 1)), std::vector<std::uint32_t>(N));
        parent.assign(N, 0);
        parent_gen.assign(N, 0);
        children.assign(N, {});
        for (std::size_t r = 0; r < N; ++r) {
            const Permutation& w = perms[r];
            length[r] = w.length();
            inverse[r] = static_cast<std::uint32_t>(lex_rank(w.inverse()));
            for (int i = 1; i < n; ++i) {
                right[static_cast<std::size_t>(i)][r] = static_cast<std::uint32_t>(lex_rank(w.times_simple(i)));
                left[static_cast<std::size_t>(i)][r] = static_cast<std::uint32_t>(lex_rank(compose(Permutation::simple(n, i), w)));
            }
            int d = w.leftmost_right_descent();
            if (d != 0) {
                parent[r] = right[static_cast<std::size_t>(d)][r];
                parent_gen[r] = d;
                children[parent[r]].push_back(static_cast<std::uint32_t>(r));
            }
        }
    }
};

/// Hard ceiling for cached tables (9! = 362880 entries).
inline constexpr int kMaxTableRank = 9;

inline const SymmetricGroupTable& group_table(int n) {
    static std::mutex mu;
    static std::array<std::unique_ptr<const SymmetricGroupTable>, kMaxTableRank + 1> cache;
    if (n < 0 || n > kMaxTableRank) throw CapExceeded("S_" + std::to_string(n) + " is beyond the supported rank " + std::to_string(kMaxTableRank));
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[static_cast<std::size_t>(n)];
    if (!slot) slot = std::make_unique<const SymmetricGroupTable>(n);
    return *slot;
}

}  // namespace qshuffle
