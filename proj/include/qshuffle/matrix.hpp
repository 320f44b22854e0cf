#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qshuffle/errors.hpp"
#include "qshuffle/laurent.hpp"

namespace qshuffle {

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw SizeMismatch("matrix product with incompatible shapes");
        Matrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const T& xik = x(i, k);
                if (xik == T(0)) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += xik * y(k, j);
            }
        return r;
    }
    friend Matrix operator+(Matrix x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw SizeMismatch("matrix sum with incompatible shapes");
        for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
        return x;
    }
    friend Matrix operator-(Matrix x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw SizeMismatch("matrix difference with incompatible shapes");
        for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] -= y.a_[i];
        return x;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) { return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_; }

    [[nodiscard]] bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(), [](const T& v) { return v == T(0); });
    }
    [[nodiscard]] bool is_diagonal() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (i != j && !((*this)(i, j) == T(0))) return false;
        return true;
    }

    /// [A | B]
    [[nodiscard]] Matrix hstack(const Matrix& b) const {
        if (rows_ != b.rows_) throw SizeMismatch("hstack with different row counts");
        Matrix r(rows_, cols_ + b.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, cols_ + j) = b(i, j);
        }
        return r;
    }
    /// [A ; B]
    [[nodiscard]] Matrix vstack(const Matrix& b) const {
        if (cols_ != b.cols_) throw SizeMismatch("vstack with different column counts");
        Matrix r(rows_ + b.rows_, cols_);
        std::copy(a_.begin(), a_.end(), r.a_.begin());
        std::copy(b.a_.begin(), b.a_.end(), r.a_.begin() + static_cast<std::ptrdiff_t>(a_.size()));
        return r;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> a_;
};

/// Polynomial in x with rational coefficients, lowest degree first.
using RationalPoly = std::vector<Rational>;

inline RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b) {
    if (a.empty() || b.empty()) return {};
    RationalPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

/// Π (x - root_i)^{mult_i}
inline RationalPoly poly_from_roots(const std::vector<std::pair<Rational, std::uint64_t>>& roots) {
    RationalPoly r{Rational(1)};
    for (const auto& [root, mult] : roots)
        for (std::uint64_t i = 0; i < mult; ++i) {
            RationalPoly next(r.size() + 1, Rational(0));
            for (std::size_t j = 0; j < r.size(); ++j) {
                next[j + 1] += r[j];
                next[j] -= root * r[j];
            }
            r = std::move(next);
        }
    return r;
}

inline std::string poly_to_string(const RationalPoly& p) {
    std::string s;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i] == 0) continue;
        if (!s.empty()) s += p[i] < 0 ? " - " : " + ";
        else if (p[i] < 0) s += "-";
        Rational mag = abs(p[i]);
        if (mag != 1 || i == 0) s += mag.get_str();
        if (i > 0) s += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

/// Characteristic polynomial det(xI - A) by Berkowitz's division-free algorithm.
template <class T>
std::vector<T> berkowitz_charpoly(const Matrix<T>& a) {
    std::size_t n = a.rows();
    if (n != a.cols()) throw SizeMismatch("characteristic polynomial of a non-square matrix");
    // vect holds the coefficients of the charpoly of the leading r x r block, highest degree first.
    std::vector<T> vect{T(1)};
    for (std::size_t r = 0; r < n; ++r) {
        // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., where R is row r left of the diagonal,
        // C the column r above it, and A the leading r x r block.
        std::vector<T> col(r + 2, T(0));
        col[0] = T(1);
        col[1] = -a(r, r);
        std::vector<T> v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = a(i, r);
        for (std::size_t step = 2; step < r + 2; ++step) {
            T acc(0);
            for (std::size_t i = 0; i < r; ++i) acc += a(r, i) * v[i];
            col[step] = -acc;
            std::vector<T> nv(r, T(0));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) nv[i] += a(i, j) * v[j];
            v = std::move(nv);
        }
        std::vector<T> next(r + 2, T(0));
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= i && j < vect.size(); ++j) next[i] += col[i - j] * vect[j];
        vect = std::move(next);
    }
    std::reverse(vect.begin(), vect.end());
    return vect;
}

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    for (a %= p; e; e >>= 1, a = mulmod(a, a, p))
        if (e & 1) r = mulmod(r, a, p);
    return r;
}
/// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
        if (n % p == 0) return n == p;
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s && composite; ++r) {
            x = mulmod(x, x, n);
            composite = x != n - 1;
        }
        if (composite) return false;
    }
    return true;
}

inline std::uint64_t mpz_mod_u64(const mpz_class& v, std::uint64_t p) {
    mpz_class r;
    mpz_class pm;
    mpz_import(pm.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), pm.get_mpz_t());
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
    return out;
}

/// Charpoly mod p via reduction to upper Hessenberg form; coefficients lowest degree first.
inline std::vector<std::uint64_t> hessenberg_charpoly_mod(std::vector<std::uint64_t> h, std::size_t n, std::uint64_t p) {
    auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return h[i * n + j]; };
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t piv = j + 1;
        while (piv < n && at(piv, j) == 0) ++piv;
        if (piv == n) continue;
        if (piv != j + 1) {
            for (std::size_t c = 0; c < n; ++c) std::swap(at(piv, c), at(j + 1, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(at(r, piv), at(r, j + 1));
        }
        std::uint64_t inv = powmod(at(j + 1, j), p - 2, p);
        for (std::size_t i = j + 2; i < n; ++i) {
            if (at(i, j) == 0) continue;
            std::uint64_t u = mulmod(at(i, j), inv, p);
            std::uint64_t neg_u = p - u;
            for (std::size_t c = 0; c < n; ++c)
                if (at(j + 1, c)) at(i, c) = (at(i, c) + mulmod(neg_u, at(j + 1, c), p)) % p;
            for (std::size_t r = 0; r < n; ++r)
                if (at(r, i)) at(r, j + 1) = (at(r, j + 1) + mulmod(u, at(r, i), p)) % p;
        }
    }
    // p_m = (x - h_mm) p_{m-1} - Σ_{i<m} h_im (Π_{l=i+1}^{m} h_{l,l-1}) p_{i-1}
    std::vector<std::vector<std::uint64_t>> polys(n + 1);
    polys[0] = {1};
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<std::uint64_t> pm(m + 1, 0);
        const auto& prev = polys[m - 1];
        std::uint64_t hmm = at(m - 1, m - 1);
        for (std::size_t d = 0; d < prev.size(); ++d) {
            pm[d + 1] = (pm[d + 1] + prev[d]) % p;
            pm[d] = (pm[d] + mulmod(p - hmm, prev[d], p)) % p;
        }
        std::uint64_t t = 1;
        for (std::size_t i = m - 1; i-- > 0;) {
            t = mulmod(t, at(i + 1, i), p);
            if (t == 0) break;
            std::uint64_t coef = mulmod(at(i, m - 1), t, p);
            if (coef == 0) continue;
            const auto& pi = polys[i];
            for (std::size_t d = 0; d < pi.size(); ++d) pm[d] = (pm[d] + mulmod(p - coef, pi[d], p)) % p;
        }
        polys[m] = std::move(pm);
    }
    return polys[n];
}

}  // namespace detail

/// Exact characteristic polynomial of an integer matrix: Hessenberg form modulo
/// enough 62-bit primes to exceed a Hadamard-type coefficient bound, then CRT.
inline std::vector<mpz_class> integer_charpoly(const Matrix<mpz_class>& a) {
    std::size_t n = a.rows();
    if (n != a.cols()) throw SizeMismatch("characteristic polynomial of a non-square matrix");
    // |coefficient| <= Π (1 + ||row_i||_2)
    double bits = 2;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class sq = 0;
        for (std::size_t j = 0; j < n; ++j) sq += a(i, j) * a(i, j);
        mpz_class norm = sqrt(sq) + 2;
        bits += static_cast<double>(mpz_sizeinbase(norm.get_mpz_t(), 2));
    }
    std::vector<mpz_class> residue(n + 1, 0);
    mpz_class modulus = 1;
    std::uint64_t p = (1ULL << 62);
    while (static_cast<double>(mpz_sizeinbase(modulus.get_mpz_t(), 2)) < bits + 1) {
        do --p;
        while (!detail::is_prime64(p));
        std::vector<std::uint64_t> h(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) h[i * n + j] = detail::mpz_mod_u64(a(i, j), p);
        auto cp = detail::hessenberg_charpoly_mod(std::move(h), n, p);
        mpz_class pm;
        mpz_import(pm.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
        mpz_class minv;
        mpz_invert(minv.get_mpz_t(), mpz_class(modulus % pm).get_mpz_t(), pm.get_mpz_t());
        for (std::size_t d = 0; d <= n; ++d) {
            mpz_class r;
            mpz_import(r.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &cp[d]);
            // x = x + M * ((r - x) * M^-1 mod p)
            mpz_class t = (r - residue[d]) * minv;
            mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), pm.get_mpz_t());
            residue[d] += modulus * t;
        }
        modulus *= pm;
    }
    mpz_class half = modulus / 2;
    for (auto& c : residue)
        if (c > half) c -= modulus;
    return residue;
}

/// Exact characteristic polynomial of a rational matrix. With D a common
/// denominator, det(xI - A) = D^{-N} det(Dx I - DA), so c_k = c'_k D^{k-N}.
inline RationalPoly rational_charpoly(const Matrix<Rational>& a) {
    std::size_t n = a.rows();
    mpz_class den = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) den = lcm(den, mpz_class(a(i, j).get_den()));
    Matrix<mpz_class> scaled(n, a.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) scaled(i, j) = a(i, j).get_num() * (den / a(i, j).get_den());
    auto ic = integer_charpoly(scaled);
    RationalPoly out(n + 1);
    Rational scale = 1;
    for (std::size_t k = n + 1; k-- > 0;) {
        out[k] = Rational(ic[k]) * scale;
        out[k].canonicalize();
        scale /= Rational(den);
    }
    return out;
}

/// Exact rank by fraction-free (Bareiss) elimination, updating mpz entries in place.
inline std::size_t bareiss_rank(Matrix<mpz_class> m) {
    std::size_t rows = m.rows();
    std::size_t cols = m.cols();
    std::size_t rank = 0;
    mpz_class prev = 1;
    mpz_class t;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(rank, j));
        const mpz_class& pv = m(rank, c);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            mpz_class& lead = m(i, c);
            bool lead_zero = lead == 0;
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_ptr x = m(i, j).get_mpz_t();
                mpz_mul(x, x, pv.get_mpz_t());
                if (!lead_zero) mpz_submul(x, lead.get_mpz_t(), m(rank, j).get_mpz_t());
                mpz_divexact(x, x, prev.get_mpz_t());
            }
            lead = 0;
        }
        prev = pv;
        ++rank;
    }
    return rank;
}

/// Rank of a rational matrix; each row is cleared of denominators first.
inline std::size_t exact_rank(const Matrix<Rational>& a) {
    Matrix<mpz_class> m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        mpz_class den = 1;
        for (std::size_t j = 0; j < a.cols(); ++j) den = lcm(den, mpz_class(a(i, j).get_den()));
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j).get_num() * (den / a(i, j).get_den());
    }
    return bareiss_rank(std::move(m));
}

}  // namespace qshuffle
