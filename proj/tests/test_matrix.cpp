#include <gtest/gtest.h>

#include <random>

#include "qshuffle/matrix.hpp"

using namespace qshuffle;

namespace {

// det by rational Gaussian elimination
Rational det(Matrix<Rational> m) {
    std::size_t n = m.rows();
    Rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

std::size_t rank_by_elimination(Matrix<Rational> m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            Rational f = m(i, c) / m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

Rational eval(const RationalPoly& p, const Rational& x) {
    Rational v = 0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

Matrix<Rational> random_rational(std::size_t n, std::size_t m, std::mt19937_64& rng, bool fractions) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 6);
    Matrix<Rational> a(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            a(i, j) = Rational(num(rng), fractions ? den(rng) : 1);
            a(i, j).canonicalize();
        }
    return a;
}

}  // namespace

TEST(Charpoly, AgreesWithDeterminantAtSamplePoints) {
    std::mt19937_64 rng(7);
    for (std::size_t n = 1; n <= 7; ++n)
        for (int trial = 0; trial < 3; ++trial) {
            auto a = random_rational(n, n, rng, trial > 0);
            auto cp = rational_charpoly(a);
            ASSERT_EQ(cp.size(), n + 1);
            EXPECT_EQ(cp[n], Rational(1));
            EXPECT_EQ(berkowitz_charpoly(a), cp);
            for (int x = -2; x <= 2; ++x) {
                auto shifted = a;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) shifted(i, j) = (i == j ? Rational(x) : Rational(0)) - a(i, j);
                EXPECT_EQ(eval(cp, x), det(shifted));
            }
        }
}

TEST(Charpoly, IntegerPathMatchesBerkowitz) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> big(-1000000000L, 1000000000L);
    for (std::size_t n = 1; n <= 12; ++n) {
        Matrix<mpz_class> a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = big(rng);
        EXPECT_EQ(integer_charpoly(a), berkowitz_charpoly(a));
    }
}

TEST(Charpoly, SpecialMatrices) {
    auto id = Matrix<Rational>::identity(5);
    EXPECT_EQ(rational_charpoly(id), poly_from_roots({{Rational(1), 5}}));
    EXPECT_EQ(rational_charpoly(Matrix<Rational>(4, 4)), poly_from_roots({{Rational(0), 4}}));
    Matrix<Rational> d(3, 3);
    d(0, 0) = Rational(1, 2);
    d(1, 1) = -3;
    d(2, 2) = Rational(1, 2);
    EXPECT_EQ(rational_charpoly(d), poly_from_roots({{Rational(1, 2), 2}, {Rational(-3), 1}}));
    EXPECT_EQ(poly_to_string(poly_from_roots({{Rational(1), 2}})), "x^2 - 2x + 1");
    EXPECT_EQ(rational_charpoly(Matrix<Rational>()), RationalPoly{Rational(1)});
    EXPECT_THROW(berkowitz_charpoly(Matrix<Rational>(2, 3)), SizeMismatch);
}

TEST(Rank, AgreesWithElimination) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 1 + rng() % 7;
        std::size_t cols = 1 + rng() % 7;
        std::size_t inner = 1 + rng() % 4;
        // low-rank products exercise dependent rows
        auto a = random_rational(rows, inner, rng, true) * random_rational(inner, cols, rng, true);
        EXPECT_EQ(exact_rank(a), rank_by_elimination(a));
        EXPECT_LE(exact_rank(a), inner);
    }
    EXPECT_EQ(exact_rank(Matrix<Rational>(3, 4)), 0U);
    EXPECT_EQ(exact_rank(Matrix<Rational>::identity(6)), 6U);
}

TEST(Matrix, Stacking) {
    auto a = Matrix<Rational>::identity(2);
    auto h = a.hstack(a);
    EXPECT_EQ(h.cols(), 4U);
    EXPECT_EQ(h(1, 3), Rational(1));
    auto v = a.vstack(a);
    EXPECT_EQ(v.rows(), 4U);
    EXPECT_EQ(v(3, 1), Rational(1));
    EXPECT_THROW(a.hstack(Matrix<Rational>(3, 1)), SizeMismatch);
    EXPECT_THROW(a * Matrix<Rational>(3, 1), SizeMismatch);
}
