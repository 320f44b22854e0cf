#include <gtest/gtest.h>

#include <thread>

#include "paper_data.hpp"
#include "qshuffle/shuffles.hpp"

using namespace qshuffle;

namespace {

HeckeElement sum_all(int n) {
    HeckeElement s(n);
    for (const auto& w : group_table(n).perms) s.add_term(w, 1);
    return s;
}

// Σ T_w over w whose inverse is increasing on 1..n-k
HeckeElement shuffle_sum(int n, int k, bool star) {
    HeckeElement s(n);
    for (const auto& w : group_table(n).perms) {
        auto u = star ? w : w.inverse();
        bool inc = true;
        for (int i = 1; i + 1 <= n - k; ++i) inc = inc && u(i) < u(i + 1);
        if (inc) s.add_term(w, 1);
    }
    return s;
}

}  // namespace

TEST(Shuffles, SmallExamples) {
    ShuffleSession S;
    HeckeElement b3(3);
    for (const char* c : {"id", "(3,2)", "(3,2,1)"}) b3.add_term(Permutation::from_cycles(3, c), 1);
    EXPECT_EQ(S.b(3), b3);
    HeckeElement bs3(3);
    for (const char* c : {"id", "(2,3)", "(1,2,3)"}) bs3.add_term(Permutation::from_cycles(3, c), 1);
    EXPECT_EQ(S.b_star(3), bs3);

    HeckeElement r31(3);
    for (const auto& [c, p] : ref::r31_terms()) r31.add_term(Permutation::from_cycles(3, c), p);
    EXPECT_EQ(S.r(3, 1), r31);
    EXPECT_EQ(S.b_nk(3, 2), sum_all(3));
    EXPECT_EQ(S.b_star_nk(3, 2), sum_all(3));
    EXPECT_EQ(S.r(3, 2), q_int(3) * sum_all(3));
    EXPECT_EQ(S.r(3, 3), sum_all(3));
    EXPECT_EQ(S.r(3, 0), HeckeElement::one(3));
}

TEST(Shuffles, R42Golden) {
    ShuffleSession S;
    auto r = S.r(4, 2);
    EXPECT_EQ(r.support_size(), 24U);
    for (const auto& t : ref::r42_terms())
        EXPECT_EQ(r.coefficient(Permutation::from_cycles(4, t.cycles)), LaurentPoly::parse(t.coeff)) << t.cycles;
    EXPECT_EQ(r.specialize(1).size(), 23U);
    EXPECT_EQ(r.specialize(1).count(Permutation::from_cycles(4, "(1,4)(2,3)")), 0U);
}

TEST(Shuffles, VanishBeyondN) {
    ShuffleSession S;
    for (int n = 0; n <= 4; ++n)
        for (int k = n + 1; k <= n + 2; ++k) {
            EXPECT_TRUE(S.b_nk(n, k).is_zero());
            EXPECT_TRUE(S.b_star_nk(n, k).is_zero());
            EXPECT_TRUE(S.r(n, k).is_zero());
        }
    EXPECT_TRUE(S.b(0, 3).is_zero());
    EXPECT_THROW(S.b(3, -1, 3), OutOfRange);
}

TEST(Shuffles, CombinatorialSums) {
    ShuffleSession S;
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) {
            EXPECT_EQ(S.b_nk(n, k), shuffle_sum(n, k, false)) << n << "," << k;
            EXPECT_EQ(S.b_star_nk(n, k), shuffle_sum(n, k, true)) << n << "," << k;
        }
}

TEST(Shuffles, DivisibilityAndSymmetry) {
    ShuffleSession S;
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) {
            auto r = S.r(n, k);
            EXPECT_EQ(q_factorial(k) * r, S.b_star_nk(n, k) * S.b_nk(n, k));
            EXPECT_EQ(r.star(), r);
            for (const auto& [w, c] : r.terms()) EXPECT_TRUE(c.is_polynomial());
        }
}

TEST(Shuffles, FactorsThroughParabolicMass) {
    ShuffleSession S;
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) {
            auto [M, X] = parabolic_mass(n, k);
            EXPECT_EQ(S.b_nk(n, k), M * X);
            EXPECT_EQ(S.r(n, k), X.star() * M * X);
        }
}

TEST(Shuffles, QOneNoninv) {
    ShuffleSession S;
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) {
            auto s = S.r(n, n - k).specialize(1);
            for (const auto& w : group_table(n).perms) {
                auto it = s.find(w);
                Rational got = it == s.end() ? Rational(0) : it->second;
                EXPECT_EQ(got, Rational(static_cast<unsigned long>(noninv(w, k))));
            }
        }
}

TEST(Shuffles, DescendingProductAndContentShift) {
    EXPECT_EQ(descending_product(4, 3, 1), HeckeElement::basis_element(4, Permutation::from_cycles(4, "(4,3,2,1)")));
    EXPECT_EQ(descending_product(4, 1, 2), HeckeElement::one(4));
    EXPECT_TRUE(descending_product(4, 3, 0).is_zero());
    EXPECT_EQ(content_shift(3, 1), HeckeElement::one(3));
}

TEST(Shuffles, GammaFamily) {
    ShuffleSession S;
    auto fam = S.gamma_family(4, 3);
    ASSERT_EQ(fam.lambdas.size(), 3U);
    HeckeElement g(4);
    for (const auto& l : fam.lambdas) g += l;
    EXPECT_EQ(fam.gamma, g);
    EXPECT_EQ(fam.Lambda, S.b_star_nk(3, 2, 4) * g);
    EXPECT_THROW(S.gamma(3, 4), OutOfRange);
    EXPECT_THROW(S.lambda(3, 0), OutOfRange);
}

TEST(Shuffles, ExactDivideElement) {
    auto a = q_int(3) * HeckeElement::generator(3, 1);
    EXPECT_EQ(exact_divide(a, q_int(3)), HeckeElement::generator(3, 1));
    EXPECT_THROW(exact_divide(a, q_int(2)), NotDivisible);
}

TEST(Shuffles, ConcurrentSessionAccess) {
    ShuffleSession S;
    std::vector<std::thread> pool;
    std::vector<HeckeElement> got(8);
    for (int t = 0; t < 8; ++t) pool.emplace_back([&, t] { got[static_cast<std::size_t>(t)] = S.r(5, 1 + t % 4); });
    for (auto& th : pool) th.join();
    ShuffleSession fresh;
    for (int t = 0; t < 8; ++t) EXPECT_EQ(got[static_cast<std::size_t>(t)], fresh.r(5, 1 + t % 4));
}
