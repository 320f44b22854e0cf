#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qshuffle/errors.hpp"
#include "qshuffle/laurent.hpp"
#include "qshuffle/permutation.hpp"

namespace qshuffle {

/// Element of the Hecke algebra H_n, expanded in the basis T_w.
///
/// Coefficients are stored densely by lexicographic rank of w (n! slots);
/// the public interface is the sparse one (terms(), coefficient(w)).
class HeckeElement {
public:
    HeckeElement() : HeckeElement(0) {}
    explicit HeckeElement(int n) : n_(n), c_(group_table(n).order()) {}

    static HeckeElement zero(int n) { return HeckeElement(n); }
    static HeckeElement scalar(int n, const LaurentPoly& p) {
        HeckeElement e(n);
        e.c_[0] = p;
        return e;
    }
    static HeckeElement one(int n) { return scalar(n, 1); }
    static HeckeElement basis_element(int n, const Permutation& w) {
        HeckeElement e(n);
        e.c_[e.table().rank_of(w)] = 1;
        return e;
    }
    /// T_i for 1 <= i < n.
    static HeckeElement generator(int n, int i) { return basis_element(n, Permutation::simple(n, i)); }

    [[nodiscard]] int rank() const { return n_; }
    [[nodiscard]] const SymmetricGroupTable& table() const { return group_table(n_); }
    [[nodiscard]] bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
    }
    [[nodiscard]] std::size_t support_size() const {
        return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const LaurentPoly& p) { return !p.is_zero(); }));
    }

    [[nodiscard]] const LaurentPoly& coefficient(const Permutation& w) const { return c_[table().rank_of(w)]; }
    [[nodiscard]] const LaurentPoly& coefficient_at(std::size_t rank) const { return c_[rank]; }
    void add_term(const Permutation& w, const LaurentPoly& p) { c_[table().rank_of(w)] += p; }
    void add_term_at(std::size_t rank, const LaurentPoly& p) { c_[rank] += p; }

    /// Nonzero terms in lexicographic one-line order.
    [[nodiscard]] std::vector<std::pair<Permutation, LaurentPoly>> terms() const {
        std::vector<std::pair<Permutation, LaurentPoly>> out;
        const auto& t = table();
        for (std::size_t r = 0; r < c_.size(); ++r)
            if (!c_[r].is_zero()) out.emplace_back(t.perms[r], c_[r]);
        return out;
    }

    HeckeElement operator-() const {
        HeckeElement r = *this;
        for (auto& p : r.c_) p = -p;
        return r;
    }
    HeckeElement& operator+=(const HeckeElement& o) {
        check_same(o);
        for (std::size_t r = 0; r < c_.size(); ++r) c_[r] += o.c_[r];
        return *this;
    }
    HeckeElement& operator-=(const HeckeElement& o) {
        check_same(o);
        for (std::size_t r = 0; r < c_.size(); ++r) c_[r] -= o.c_[r];
        return *this;
    }
    HeckeElement& operator*=(const LaurentPoly& s) {
        if (s.is_one()) return *this;
        for (auto& p : c_)
            if (!p.is_zero()) p *= s;
        return *this;
    }
    friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
    friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
    friend HeckeElement operator*(const LaurentPoly& s, HeckeElement a) { return a *= s; }
    friend HeckeElement operator*(HeckeElement a, const LaurentPoly& s) { return a *= s; }

    /// this <- this * T_i
    HeckeElement& mul_generator_right(int i) { return apply_generator(i, table().right); }
    /// this <- T_i * this
    HeckeElement& mul_generator_left(int i) { return apply_generator(i, table().left); }

    friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
        a.check_same(b);
        const auto& t = a.table();
        std::size_t N = t.order();
        HeckeElement result(a.n_);
        if (a.is_zero() || b.is_zero()) return result;

        // Only walk tree branches that lead to a basis element present in b.
        std::vector<char> needed(N, 0);
        for (std::size_t r = 0; r < N; ++r) {
            if (b.c_[r].is_zero()) continue;
            std::size_t x = r;
            while (!needed[x]) {
                needed[x] = 1;
                if (x == 0) break;
                x = t.parent[x];
            }
        }
        // a * T_w = (a * T_parent(w)) * T_d
        std::function<void(std::uint32_t, const HeckeElement&)> walk = [&](std::uint32_t node, const HeckeElement& cur) {
            const LaurentPoly& bw = b.c_[node];
            if (!bw.is_zero())
                for (std::size_t r = 0; r < N; ++r)
                    if (!cur.c_[r].is_zero()) result.c_[r].add_product(cur.c_[r], bw);
            for (std::uint32_t child : t.children[node]) {
                if (!needed[child]) continue;
                HeckeElement next = cur;
                next.mul_generator_right(t.parent_gen[child]);
                walk(child, next);
            }
        };
        walk(0, a);
        return result;
    }
    HeckeElement& operator*=(const HeckeElement& o) {
        *this = *this * o;
        return *this;
    }

    friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
        if (a.n_ != b.n_) throw SizeMismatch("comparing elements of H_" + std::to_string(a.n_) + " and H_" + std::to_string(b.n_));
        return a.c_ == b.c_;
    }

    /// Anti-involution T_w -> T_{w^-1}.
    [[nodiscard]] HeckeElement star() const {
        HeckeElement r(n_);
        const auto& t = table();
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[t.inverse[i]] = c_[i];
        return r;
    }

    /// Image under H_n ⊆ H_m.
    [[nodiscard]] HeckeElement lift(int m) const {
        if (m == n_) return *this;
        if (m < n_) throw SizeMismatch("cannot lift H_" + std::to_string(n_) + " into H_" + std::to_string(m));
        HeckeElement r(m);
        const auto& t = table();
        const auto& tm = r.table();
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) r.c_[tm.rank_of(t.perms[i].lift(m))] = c_[i];
        return r;
    }

    /// Coefficientwise evaluation at q = q0; only nonzero values are kept.
    [[nodiscard]] std::map<Permutation, Rational> specialize(const Rational& q0) const {
        std::map<Permutation, Rational> out;
        const auto& t = table();
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            Rational v = evaluate(c_[i], q0);
            if (v != 0) out.emplace(t.perms[i], v);
        }
        return out;
    }

    /// Dense coefficient vector at q = q0, indexed by lexicographic rank.
    [[nodiscard]] std::vector<Rational> evaluate_dense(const Rational& q0) const {
        std::vector<Rational> out(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) out[i] = evaluate(c_[i], q0);
        return out;
    }

private:
    void check_same(const HeckeElement& o) const {
        if (n_ != o.n_) throw SizeMismatch("H_" + std::to_string(n_) + " and H_" + std::to_string(o.n_) + " cannot be combined");
    }

    // Shared kernel for T_i acting on either side. With x the shorter and y the
    // longer of {w, w'} (w' = w s_i or s_i w): x -> q*c_y, y -> c_x + (q - 1)*c_y.
    HeckeElement& apply_generator(int i, const std::vector<std::vector<std::uint32_t>>& mult) {
        if (i < 1 || i >= n_) throw OutOfRange("T_" + std::to_string(i) + " does not exist in H_" + std::to_string(n_));
        const auto& t = table();
        const auto& m = mult[static_cast<std::size_t>(i)];
        for (std::size_t x = 0; x < c_.size(); ++x) {
            std::size_t y = m[x];
            if (t.length[y] < t.length[x]) continue;
            LaurentPoly& cx = c_[x];
            LaurentPoly& cy = c_[y];
            if (cx.is_zero() && cy.is_zero()) continue;
            LaurentPoly qy = cy.shifted(1);
            LaurentPoly new_y = cx + qy;
            new_y -= cy;
            cx = std::move(qy);
            cy = std::move(new_y);
        }
        return *this;
    }

    int n_;
    std::vector<LaurentPoly> c_;
};

/// J_k = sum_{i<k} q^{i-k} T_{(i,k)}.
inline HeckeElement jm_element(int n, int k) {
    if (k < 1 || k > n) throw OutOfRange("J_" + std::to_string(k) + " is undefined in H_" + std::to_string(n));
    HeckeElement j(n);
    for (int i = 1; i < k; ++i) j.add_term(Permutation::transposition(n, i, k), LaurentPoly::monomial(1, i - k));
    return j;
}

struct ParabolicMass {
    HeckeElement M;  // sum of T_w over w fixing 1..n-k
    HeckeElement X;  // sum of T_{u_I} over (n-k)-subsets I
};

inline ParabolicMass parabolic_mass(int n, int k) {
    if (k < 0 || k > n) throw OutOfRange("parabolic_mass needs 0 <= k <= n");
    ParabolicMass out{HeckeElement(n), HeckeElement(n)};
    const auto& t = group_table(n);
    for (const auto& w : t.perms) {
        bool fixes = true;
        for (int i = 1; i <= n - k && fixes; ++i) fixes = w(i) == i;
        if (fixes) out.M.add_term(w, 1);
    }
    for (const auto& I : k_subsets(n, n - k)) out.X.add_term(coset_rep_uI(n, I), 1);
    return out;
}

}  // namespace qshuffle
