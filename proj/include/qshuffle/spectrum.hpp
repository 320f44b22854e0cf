#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "qshuffle/errors.hpp"
#include "qshuffle/laurent.hpp"
#include "qshuffle/tableaux.hpp"

namespace qshuffle {

inline void require_strip(const SkewShape& s) {
    if (!s.is_horizontal_strip()) throw NotAStrip(s.to_string() + " is not a horizontal strip");
}

/// E_{λ∖μ}(k) = q^{nk - C(k,2)} Σ_{j < ℓ_1 < ... < ℓ_k <= n} Π_m q^{-ℓ_m} [ℓ_m + 1 - m + cont(ℓ_m)]_q
inline LaurentPoly eigenvalue_direct(const SkewShape& s, int k) {
    require_strip(s);
    if (k < 0) throw OutOfRange("negative k");
    if (k == 0) return 1;
    int n = s.n();
    int j = s.j();
    if (k > n - j) return {};
    auto contents = skew_contents(s);
    LaurentPoly sum;
    std::function<void(int, int, const LaurentPoly&)> rec = [&](int m, int from, const LaurentPoly& acc) {
        if (m > k) {
            sum += acc;
            return;
        }
        for (int ell = from; ell <= n - (k - m); ++ell) {
            int content = contents[static_cast<std::size_t>(ell - j - 1)].second;
            rec(m + 1, ell + 1, acc * q_int(ell + 1 - m + content).shifted(-ell));
        }
    };
    rec(1, j + 1, LaurentPoly(1));
    return sum.shifted(n * k - k * (k - 1) / 2);
}

/// E(0), ..., E(|λ∖μ|) by removing the cell holding n: E(k) = q^k E'(k) + [n + 1 - k + c]_q E'(k - 1).
inline std::vector<LaurentPoly> eigenvalue_recursive_all(const SkewShape& s) {
    require_strip(s);
    if (s.cell_count() == 0) return {LaurentPoly(1)};
    auto [r, c] = s.cells().back();
    std::vector<int> parts = s.outer().parts();
    --parts[static_cast<std::size_t>(r - 1)];
    auto prev = eigenvalue_recursive_all(SkewShape(Partition(parts), s.inner()));
    int n = s.n();
    std::vector<LaurentPoly> out(prev.size() + 1);
    out[0] = 1;
    for (std::size_t k = 1; k < out.size(); ++k) {
        if (k < prev.size()) out[k] = prev[k].shifted(static_cast<int>(k));
        out[k] += q_int(n + 1 - static_cast<int>(k) + (c - r)) * prev[k - 1];
    }
    return out;
}

inline LaurentPoly eigenvalue_recursive(const SkewShape& s, int k) {
    if (k < 0) throw OutOfRange("negative k");
    auto all = eigenvalue_recursive_all(s);
    return static_cast<std::size_t>(k) < all.size() ? all[static_cast<std::size_t>(k)] : LaurentPoly();
}

/// (n-ℓ, 1^ℓ) ∖ (j, 1^ℓ); j = 0 is allowed only for ℓ = 0, where it means μ = ∅.
inline SkewShape hook_strip(int n, int ell, int j) {
    if (ell < 0 || ell > n - 1 || j < 0 || j > n - ell || (j == 0 && ell > 0))
        throw OutOfRange("no hook strip for n=" + std::to_string(n) + ", ℓ=" + std::to_string(ell) + ", j=" + std::to_string(j));
    std::vector<int> outer{n - ell};
    std::vector<int> inner;
    if (j > 0) inner.push_back(j);
    for (int i = 0; i < ell; ++i) {
        outer.push_back(1);
        inner.push_back(1);
    }
    return {Partition(outer), Partition(inner)};
}

/// [k]!_q qbinom(n-j-ℓ, k) qbinom(n+j, k)
inline LaurentPoly hook_eigenvalue(int n, int ell, int j, int k) {
    hook_strip(n, ell, j);
    if (k < 0) throw OutOfRange("negative k");
    return q_factorial(k) * q_binomial(n - j - ell, k) * q_binomial(n + j, k);
}

struct SpectrumFactor {
    SkewShape strip;
    LaurentPoly eigenvalue;
    std::uint64_t multiplicity = 0;
    std::vector<SkewShape> merged_from;  // every strip whose eigenvalue coincides, first one is `strip`
};

/// Table order of strips inside one λ: |μ| descending, then μ ascending lexicographically.
inline std::vector<Partition> ordered_strip_inners(const Partition& lambda) {
    auto inners = horizontal_strip_inners(lambda);
    std::sort(inners.begin(), inners.end(), [](const Partition& a, const Partition& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return inners;
}

inline std::uint64_t cached_desarrangement_count(const Partition& mu) {
    static std::mutex mu_lock;
    static std::map<Partition, std::uint64_t> cache;
    {
        std::lock_guard<std::mutex> lock(mu_lock);
        auto it = cache.find(mu);
        if (it != cache.end()) return it->second;
    }
    std::uint64_t d = desarrangement_count(mu);
    std::lock_guard<std::mutex> lock(mu_lock);
    cache.emplace(mu, d);
    return d;
}

/// One row per strip λ∖μ with d^μ ≠ 0, multiplicity d^μ (Specht level) or d^μ f^λ (regular).
inline std::vector<SpectrumFactor> strip_rows(const Partition& lambda, int k, bool regular) {
    std::vector<SpectrumFactor> rows;
    std::uint64_t f = regular ? hook_length_count(lambda) : 1;
    for (const auto& mu : ordered_strip_inners(lambda)) {
        std::uint64_t d = cached_desarrangement_count(mu);
        if (d == 0) continue;
        SkewShape s(lambda, mu);
        rows.push_back({s, eigenvalue_direct(s, k), d * f, {s}});
    }
    return rows;
}

/// Adds up multiplicities of coinciding eigenvalues, keeping first-occurrence order.
inline std::vector<SpectrumFactor> merge_equal_eigenvalues(const std::vector<SpectrumFactor>& rows) {
    std::vector<SpectrumFactor> out;
    std::map<LaurentPoly, std::size_t> where;
    for (const auto& row : rows) {
        auto it = where.find(row.eigenvalue);
        if (it == where.end()) {
            where.emplace(row.eigenvalue, out.size());
            out.push_back(row);
        } else {
            out[it->second].multiplicity += row.multiplicity;
            out[it->second].merged_from.push_back(row.strip);
        }
    }
    return out;
}

inline std::vector<SpectrumFactor> charpoly_factors_specht(const Partition& lambda, int k) {
    return merge_equal_eigenvalues(strip_rows(lambda, k, false));
}

inline std::vector<SpectrumFactor> regular_rows(int n, int k) {
    std::vector<SpectrumFactor> rows;
    for (const auto& lambda : enumerate_partitions(n)) {
        auto r = strip_rows(lambda, k, true);
        rows.insert(rows.end(), r.begin(), r.end());
    }
    return rows;
}

inline std::vector<SpectrumFactor> charpoly_factors_regular(int n, int k) { return merge_equal_eigenvalues(regular_rows(n, k)); }

inline const std::vector<Rational>& default_q_samples() {
    static const std::vector<Rational> samples{Rational(1), Rational(2), Rational(3), Rational(1, 2), Rational(5, 7)};
    return samples;
}

struct StructuralReport {
    SkewShape strip;
    int k = 0;
    bool zero_iff_too_large = true;   // E = 0 exactly when k exceeds the strip size
    bool monic_degree = true;         // otherwise monic of degree k(n-k) + w_k
    bool nonnegative = true;
    bool single_row = false;
    bool palindromic = true;          // checked only for single-row strips
    bool unimodal = true;             // checked only for single-row strips
    bool below_top = true;            // E <= E_{(n)∖∅}(k) at every sample
    bool below_second = true;         // E <= E_{(n-1,1)∖(1,1)}(k) when applicable
    std::vector<std::string> failures;

    [[nodiscard]] bool ok() const { return failures.empty(); }
};

inline StructuralReport structural_report(const SkewShape& s, int k, const std::vector<Rational>& samples = default_q_samples()) {
    require_strip(s);
    StructuralReport rep;
    rep.strip = s;
    rep.k = k;
    LaurentPoly e = eigenvalue_direct(s, k);
    int n = s.n();
    int size = s.cell_count();
    auto fail = [&](bool& flag, const std::string& why) {
        flag = false;
        rep.failures.push_back(s.to_string() + ", k=" + std::to_string(k) + ": " + why);
    };
    if (e.is_zero() != (k > size)) fail(rep.zero_iff_too_large, "vanishing does not match k > strip size");
    if (k <= size) {
        int expected = k * (n - k) + rightmost_content_sum(s, k);
        if (e.is_zero() || e.degree() != expected || !e.leading_coefficient().is_one())
            fail(rep.monic_degree, "expected monic of degree " + std::to_string(expected) + ", got " + e.to_string());
    }
    if (!e.is_polynomial() || !e.has_nonnegative_coefficients()) fail(rep.nonnegative, "negative exponent or coefficient in " + e.to_string());
    rep.single_row = s.is_single_row();
    if (rep.single_row && !e.is_zero()) {
        // the coefficient run of a polynomial with nonzero constant term is the full coefficient sequence
        if (e.low_degree() != 0 || !e.is_palindromic()) fail(rep.palindromic, "not palindromic: " + e.to_string());
        if (!e.is_unimodal()) fail(rep.unimodal, "not unimodal: " + e.to_string());
    }
    LaurentPoly top = eigenvalue_direct(SkewShape(Partition({n}), Partition()), k);
    bool second_applies = n >= 2 && !(s.outer() == Partition({n}) && s.inner().empty()) && cached_desarrangement_count(s.inner()) != 0;
    LaurentPoly second = n >= 2 ? eigenvalue_direct(SkewShape(Partition({n - 1, 1}), Partition({1, 1})), k) : LaurentPoly();
    for (const auto& q0 : samples) {
        Rational v = evaluate(e, q0);
        if (v > evaluate(top, q0)) fail(rep.below_top, "exceeds E_{(n)∖∅} at q=" + q0.get_str());
        if (second_applies && v > evaluate(second, q0)) fail(rep.below_second, "exceeds E_{(n-1,1)∖(1,1)} at q=" + q0.get_str());
    }
    return rep;
}

/// Throwing form of structural_report.
inline void structural_checks(const SkewShape& s, int k, const std::vector<Rational>& samples = default_q_samples()) {
    auto rep = structural_report(s, k, samples);
    if (!rep.ok()) throw CheckFailed(rep.failures.front());
}

/// Every horizontal strip with |outer| = n.
inline std::vector<SkewShape> all_strips(int n) {
    std::vector<SkewShape> out;
    for (const auto& lambda : enumerate_partitions(n))
        for (const auto& mu : ordered_strip_inners(lambda)) out.emplace_back(lambda, mu);
    return out;
}

struct UnimodalityScan {
    int max_n = 0;
    std::uint64_t checked = 0;
    std::vector<std::string> counterexamples;
};

/// Scans every E_{λ∖μ}(k) with |λ| <= max_n for a non-unimodal coefficient sequence.
inline UnimodalityScan unimodality_scan(int max_n) {
    UnimodalityScan scan;
    scan.max_n = max_n;
    for (int n = 0; n <= max_n; ++n)
        for (const auto& s : all_strips(n)) {
            auto all = eigenvalue_recursive_all(s);
            for (std::size_t k = 1; k < all.size(); ++k) {
                const LaurentPoly& e = all[k];
                ++scan.checked;
                if (!e.is_unimodal()) scan.counterexamples.push_back(s.to_string() + ", k=" + std::to_string(k) + ": " + e.to_string());
            }
        }
    return scan;
}

/// Number of distinct eigenvalue vectors (E(1), ..., E(n)) over strips with d^μ ≠ 0.
inline std::size_t eigenvalue_packet_count(int n) {
    std::set<std::vector<LaurentPoly>> packets;
    for (const auto& lambda : enumerate_partitions(n))
        for (const auto& mu : ordered_strip_inners(lambda)) {
            if (cached_desarrangement_count(mu) == 0) continue;
            SkewShape s(lambda, mu);
            std::vector<LaurentPoly> packet;
            for (int k = 1; k <= n; ++k) packet.push_back(eigenvalue_recursive(s, k));
            packets.insert(packet);
        }
    return packets.size();
}

}  // namespace qshuffle
