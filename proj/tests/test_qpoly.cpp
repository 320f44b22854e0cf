#include <gtest/gtest.h>

#include <random>

#include "qshuffle/laurent.hpp"
#include "test_util.hpp"

using namespace qshuffle;

TEST(QInt, SmallValues) {
    EXPECT_EQ(q_int(3), LaurentPoly::parse("1 + q + q^2"));
    EXPECT_TRUE(q_int(0).is_zero());
    EXPECT_EQ(q_int(-2), LaurentPoly::parse("-q^-1 - q^-2"));
    EXPECT_EQ(q_int(1), LaurentPoly(1));
    for (int k = 1; k <= 12; ++k) {
        EXPECT_EQ(q_int(k).degree(), k - 1);
        EXPECT_TRUE(q_int(k).leading_coefficient().is_one());
    }
}

TEST(QInt, AdditionRule) {
    for (int a = -20; a <= 20; ++a)
        for (int b = -20; b <= 20; ++b) EXPECT_EQ(q_int(a + b), q_int(a) + q_int(b).shifted(a)) << a << " " << b;
}

TEST(QInt, TimesOneMinusQ) {
    // (1 - q)[k] = 1 - q^k, also for negative k
    for (int k = -10; k <= 10; ++k) EXPECT_EQ((LaurentPoly(1) - LaurentPoly::q()) * q_int(k), LaurentPoly(1) - LaurentPoly::monomial(1, k));
}

TEST(QFactorial, Values) {
    EXPECT_EQ(q_factorial(0), LaurentPoly(1));
    EXPECT_EQ(q_factorial(2), LaurentPoly::parse("1 + q"));
    EXPECT_EQ(q_factorial(3), LaurentPoly::parse("1 + 2q + 2q^2 + q^3"));
    EXPECT_THROW(q_factorial(-1), OutOfRange);
    // at q = 1 this is k!
    for (int k = 0; k <= 20; ++k) {
        mpz_class f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        EXPECT_EQ(evaluate(q_factorial(k), 1), Rational(f));
    }
}

TEST(QBinomial, Values) {
    EXPECT_EQ(q_binomial(4, 2), LaurentPoly::parse("1 + q + 2q^2 + q^3 + q^4"));
    EXPECT_TRUE(q_binomial(3, 5).is_zero());
    EXPECT_TRUE(q_binomial(3, -1).is_zero());
    for (int n = 0; n <= 10; ++n) EXPECT_EQ(q_binomial(n, 0), LaurentPoly(1));
}

TEST(QBinomial, GaussianRecursion) {
    for (int n = 1; n <= 20; ++n)
        for (int k = 0; k <= n; ++k) EXPECT_EQ(q_binomial(n, k), q_binomial(n - 1, k) + q_binomial(n - 1, k - 1).shifted(n - k)) << n << "," << k;
}

TEST(QBinomial, LargeCoefficientsAgreeWithBinomialAtOne) {
    // coefficients overflow 64 bits long before the value at 1 does for n = 70
    for (int k : {0, 5, 20, 35}) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), 70, static_cast<unsigned long>(k));
        EXPECT_EQ(evaluate(q_binomial(70, k), 1), Rational(b));
    }
}

TEST(ExactDivide, Basics) {
    EXPECT_EQ(exact_divide(LaurentPoly::parse("q^2 - 1"), LaurentPoly::parse("q - 1")), LaurentPoly::parse("q + 1"));
    EXPECT_EQ(exact_divide(q_int(3) * q_int(2), q_int(2)), q_int(3));
    EXPECT_THROW(exact_divide(LaurentPoly::parse("q + 2"), LaurentPoly::parse("q + 1")), NotDivisible);
    EXPECT_THROW(exact_divide(LaurentPoly::parse("q"), LaurentPoly::parse("2")), NotDivisible);
    EXPECT_THROW(exact_divide(LaurentPoly(1), LaurentPoly()), NotDivisible);
}

TEST(ExactDivide, RandomProducts) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        auto a = testutil::random_laurent(rng, 6, 40);
        auto b = testutil::random_laurent(rng, 5, 40);
        if (b.is_zero()) continue;
        EXPECT_EQ(exact_divide(a * b, b), a);
    }
}

TEST(Ring, RandomLaws) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = testutil::random_laurent(rng, 5, 9);
        auto b = testutil::random_laurent(rng, 5, 9);
        auto c = testutil::random_laurent(rng, 5, 9);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
        if (!a.is_zero() && !b.is_zero()) EXPECT_FALSE((a * b).is_zero());
    }
}

TEST(Evaluate, Examples) {
    EXPECT_EQ(evaluate(q_int(3), 1), Rational(3));
    EXPECT_EQ(evaluate(LaurentPoly::parse("q^3 + q - 2"), 1), Rational(0));
    EXPECT_EQ(evaluate(LaurentPoly::parse("-q^-1 - q^-2"), 2), Rational(-3, 4));
    EXPECT_THROW(evaluate(LaurentPoly::parse("q^-1"), 0), ZeroDenominator);
    EXPECT_EQ(evaluate(LaurentPoly::parse("q + 5"), 0), Rational(5));
}

TEST(Evaluate, RingHomomorphism) {
    std::mt19937_64 rng(3);
    const std::vector<Rational> points{Rational(1), Rational(2), Rational(-3), Rational(1, 2), Rational(5, 7), Rational(-2, 9)};
    for (int trial = 0; trial < 100; ++trial) {
        auto a = testutil::random_laurent(rng, 5, 30);
        auto b = testutil::random_laurent(rng, 5, 30);
        for (const auto& x : points) {
            EXPECT_EQ(evaluate(a * b, x), evaluate(a, x) * evaluate(b, x));
            EXPECT_EQ(evaluate(a + b, x), evaluate(a, x) + evaluate(b, x));
        }
    }
}

TEST(Text, RenderAndParse) {
    EXPECT_EQ(LaurentPoly::parse("q^3 + q - 2").to_string(), "q^3 + q - 2");
    EXPECT_EQ(LaurentPoly().to_string(), "0");
    EXPECT_EQ(LaurentPoly::parse("-q").to_string(), "-q");
    EXPECT_EQ(LaurentPoly::parse("2q^2 - 3*q^-1").to_string(), "2q^2 - 3q^-1");
    EXPECT_EQ(LaurentPoly::parse("q - q"), LaurentPoly());
    EXPECT_THROW(LaurentPoly::parse("q^"), ParseError);
    EXPECT_THROW(LaurentPoly::parse("x + 1"), ParseError);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = testutil::random_laurent(rng, 6, 1000000);
        EXPECT_EQ(LaurentPoly::parse(a.to_string()), a) << a.to_string();
    }
}

TEST(Canonical, NoStoredZeros) {
    auto p = LaurentPoly::parse("q^5 + 1") - LaurentPoly::parse("q^5");
    EXPECT_EQ(p.degree(), 0);
    EXPECT_EQ(p.low_degree(), 0);
    EXPECT_EQ(p.terms().size(), 1U);
    for (const auto& [e, c] : (q_int(4) * q_int(-3)).terms()) EXPECT_FALSE(c.is_zero()) << e;
}

TEST(Integer, PromotesInsteadOfWrapping) {
    Integer big = Integer::parse("9223372036854775807");
    Integer sum = big;
    sum += Integer(1);
    EXPECT_EQ(sum.to_string(), "9223372036854775808");
    Integer prod = big;
    prod *= big;
    EXPECT_EQ(prod.to_mpz(), mpz_class("9223372036854775807") * mpz_class("9223372036854775807"));
    Integer neg = Integer::parse("-9223372036854775808");
    EXPECT_EQ((-neg).to_string(), "9223372036854775808");
    EXPECT_EQ(Integer::parse("123456789012345678901234567890").to_string(), "123456789012345678901234567890");
}

TEST(Integer, RandomAgainstMpz) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 2000; ++trial) {
        std::int64_t a = static_cast<std::int64_t>(rng());
        std::int64_t b = static_cast<std::int64_t>(rng()) >> (rng() % 60);
        Integer x(a);
        Integer y(b);
        mpz_class ma(std::to_string(a));
        mpz_class mb(std::to_string(b));
        Integer s = x;
        s += y;
        Integer d = x;
        d -= y;
        Integer p = x;
        p *= y;
        EXPECT_EQ(s.to_mpz(), ma + mb);
        EXPECT_EQ(d.to_mpz(), ma - mb);
        EXPECT_EQ(p.to_mpz(), ma * mb);
        EXPECT_EQ(x < y, ma < mb);
    }
}

TEST(Rational, ParseAndRender) {
    EXPECT_EQ(parse_rational("5/7"), Rational(5, 7));
    EXPECT_EQ(parse_rational("-4/6"), Rational(-2, 3));
    EXPECT_EQ(to_string(parse_rational("10/5")), "2");
    EXPECT_THROW(parse_rational("1/0"), ZeroDenominator);
    EXPECT_THROW(parse_rational("abc"), ParseError);
}
