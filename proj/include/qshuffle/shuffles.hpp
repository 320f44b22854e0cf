#pragma once

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "qshuffle/errors.hpp"
#include "qshuffle/hecke.hpp"
#include "qshuffle/laurent.hpp"

namespace qshuffle {

/// Coefficientwise exact division of an element by a scalar polynomial.
inline HeckeElement exact_divide(const HeckeElement& a, const LaurentPoly& d) {
    HeckeElement r(a.rank());
    for (std::size_t i = 0; i < a.table().order(); ++i)
        if (!a.coefficient_at(i).is_zero()) r.add_term_at(i, exact_divide(a.coefficient_at(i), d));
    return r;
}

/// T_hi T_{hi-1} ... T_lo in H_n, where T_0 = 0 makes the product vanish. Empty when hi < lo.
inline HeckeElement descending_product(int n, int hi, int lo) {
    HeckeElement e = HeckeElement::one(n);
    if (hi < lo) return e;
    if (lo < 1) return HeckeElement::zero(n);
    for (int i = hi; i >= lo; --i) e.mul_generator_right(i);
    return e;
}

/// [m]_q + q^m J_m, viewed in H_n.
inline HeckeElement content_shift(int n, int m) {
    return HeckeElement::scalar(n, q_int(m)) + LaurentPoly::monomial(1, m) * jm_element(n, m);
}

struct GammaFamily {
    std::vector<HeckeElement> lambdas;  // lambda_{n,1} .. lambda_{n,k}
    HeckeElement gamma;
    HeckeElement Lambda;
};

/// Memoized constructor for the shuffle elements. Each element lives in its
/// natural algebra (B_{n,k}, R_{n,k}, ... in H_n); the ambient-rank overloads lift.
class ShuffleSession {
public:
    /// B_n = sum_{i=1}^n T_{n-1} ... T_i; zero for n <= 0.
    HeckeElement b(int n) { return b(n, std::max(n, 0)); }
    HeckeElement b(int n, int ambient) {
        if (n <= 0) return HeckeElement::zero(ambient);
        return memo('b', n, 0, [&] {
            HeckeElement sum(n);
            HeckeElement word = HeckeElement::one(n);
            sum += word;
            // T_{n-1} ... T_i, growing to the right
            for (int i = n - 1; i >= 1; --i) {
                word.mul_generator_right(i);
                sum += word;
            }
            return sum;
        }).lift(ambient);
    }
    HeckeElement b_star(int n) { return b_star(n, std::max(n, 0)); }
    HeckeElement b_star(int n, int ambient) {
        if (n <= 0) return HeckeElement::zero(ambient);
        return memo('c', n, 0, [&] { return b(n).star(); }).lift(ambient);
    }

    /// B_{n,k} = B_{n-k+1} ... B_{n-1} B_n; 1 for k = 0 and 0 for k > n.
    HeckeElement b(int n, int k, int ambient) {
        check_nk(n, k);
        return memo('B', n, k, [&] {
            if (k == 0) return HeckeElement::one(n);
            if (k > n) return HeckeElement::zero(n);
            return b(n - 1, k - 1, n) * b(n);
        }).lift(ambient);
    }
    HeckeElement b_nk(int n, int k) { return b(n, k, n); }
    HeckeElement b_star_nk(int n, int k, int ambient) {
        check_nk(n, k);
        return memo('S', n, k, [&] { return b_nk(n, k).star(); }).lift(ambient);
    }
    HeckeElement b_star_nk(int n, int k) { return b_star_nk(n, k, n); }

    /// R_{n,k} = B*_{n,k} B_{n,k} / [k]!_q
    HeckeElement r(int n, int k, int ambient) {
        check_nk(n, k);
        return memo('R', n, k, [&] {
            if (k > n) return HeckeElement::zero(n);
            return exact_divide(b_star_nk(n, k) * b_nk(n, k), q_factorial(k));
        }).lift(ambient);
    }
    HeckeElement r(int n, int k) { return r(n, k, n); }

    /// lambda_{n,i} = (T_{n-1} ... T_{n-i+1}) ([n-i+1] + q^{n-i+1} J_{n-i+1}), 1 <= i <= n.
    HeckeElement lambda(int n, int i) {
        if (n < 1 || i < 1 || i > n) throw OutOfRange("lambda_{n,i} needs 1 <= i <= n");
        return memo('l', n, i, [&] { return descending_product(n, n - 1, n - i + 1) * content_shift(n, n - i + 1); });
    }
    HeckeElement gamma(int n, int k) {
        check_family(n, k);
        return memo('g', n, k, [&] {
            HeckeElement g(n);
            for (int i = 1; i <= k; ++i) g += lambda(n, i);
            return g;
        });
    }
    /// Lambda_{n,k} = B*_{n-1,k-1} gamma_{n,k}; zero for k = 0.
    HeckeElement Lambda(int n, int k) {
        check_family(n, k);
        return memo('L', n, k, [&] {
            if (k == 0) return HeckeElement::zero(n);
            return b_star_nk(n - 1, k - 1, n) * gamma(n, k);
        });
    }
    GammaFamily gamma_family(int n, int k) {
        check_family(n, k);
        GammaFamily f{{}, gamma(n, k), Lambda(n, k)};
        for (int i = 1; i <= k; ++i) f.lambdas.push_back(lambda(n, i));
        return f;
    }

    void clear() {
        std::lock_guard<std::mutex> lock(mu_);
        cache_.clear();
    }

private:
    static void check_nk(int n, int k) {
        if (n < 0 || k < 0) throw OutOfRange("shuffle elements need n >= 0 and k >= 0");
    }
    static void check_family(int n, int k) {
        if (n < 1 || k < 0 || k > n) throw OutOfRange("gamma family needs n >= 1 and 0 <= k <= n");
    }

    // The builder may recurse into the session, so the lock is not held while building.
    template <class Build>
    HeckeElement memo(char kind, int n, int k, Build build) {
        auto key = std::make_tuple(kind, n, k);
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return it->second;
        }
        HeckeElement value = build();
        std::lock_guard<std::mutex> lock(mu_);
        return cache_.emplace(key, std::move(value)).first->second;
    }

    std::mutex mu_;
    std::map<std::tuple<char, int, int>, HeckeElement> cache_;
};

inline ShuffleSession& default_session() {
    static ShuffleSession session;
    return session;
}

inline HeckeElement b_n(int n) { return default_session().b(n); }
inline HeckeElement b_star_n(int n) { return default_session().b_star(n); }
inline HeckeElement b_nk(int n, int k) { return default_session().b_nk(n, k); }
inline HeckeElement b_star_nk(int n, int k) { return default_session().b_star_nk(n, k); }
inline HeckeElement r_nk(int n, int k) { return default_session().r(n, k); }
inline GammaFamily gamma_family(int n, int k) { return default_session().gamma_family(n, k); }

}  // namespace qshuffle
