#include <gtest/gtest.h>

#include "qshuffle/expression.hpp"

using namespace qshuffle;

TEST(Expression, Names) {
    ShuffleSession S;
    EXPECT_EQ(evaluate_expression("R(4,2)", 0, S), S.r(4, 2));
    EXPECT_EQ(evaluate_expression("B(4)", 0, S), S.b(4));
    EXPECT_EQ(evaluate_expression("Bs(4,2)", 0, S), S.b_star_nk(4, 2));
    EXPECT_EQ(evaluate_expression("J(3)", 0, S), jm_element(3, 3));
    EXPECT_EQ(evaluate_expression("M(4,2) X(4,2)", 0, S), S.b_nk(4, 2));
    EXPECT_EQ(evaluate_expression("gamma(4,3)", 0, S), S.gamma(4, 3));
    EXPECT_EQ(evaluate_expression("star(B(3))", 0, S), S.b_star(3));
    EXPECT_EQ(evaluate_expression("T(2)", 0, S), HeckeElement::generator(3, 2));
}

TEST(Expression, ArithmeticAndLifting) {
    ShuffleSession S;
    auto q = LaurentPoly::q();
    // the quadratic relation, with T(1) lifted to H_3 by T(2)
    EXPECT_TRUE(evaluate_expression("T(1)^2 - (q-1)T(1) - q", 0, S).is_zero());
    EXPECT_EQ(evaluate_expression("T(1) + T(2)", 0, S), HeckeElement::generator(3, 1) + HeckeElement::generator(3, 2));
    EXPECT_EQ(evaluate_expression("Bs(3,2) * B(3,2) − 2·R(3,2)", 0, S), S.b_star_nk(3, 2) * S.b_nk(3, 2) - HeckeElement::scalar(3, LaurentPoly(2)) * S.r(3, 2));
    EXPECT_EQ(evaluate_expression("q^-2 J(3)", 0, S), LaurentPoly::monomial(1, -2) * jm_element(3, 3));
    EXPECT_EQ(evaluate_expression("3", 0, S), HeckeElement::scalar(1, LaurentPoly(3)));
    EXPECT_EQ(evaluate_expression("q + 1", 4, S), HeckeElement::scalar(4, q + 1));
    EXPECT_EQ(evaluate_expression("T(1)", 4, S).rank(), 4);
    EXPECT_EQ(evaluate_expression("-R(3,1)", 0, S), -S.r(3, 1));
}

TEST(Expression, Errors) {
    EXPECT_THROW(evaluate_expression("R(3)"), ParseError);
    EXPECT_THROW(evaluate_expression("R(3,1"), ParseError);
    EXPECT_THROW(evaluate_expression("foo(1)"), ParseError);
    EXPECT_THROW(evaluate_expression("T(1) $"), ParseError);
    EXPECT_THROW(evaluate_expression("(q+1)^-1"), ParseError);
    EXPECT_THROW(evaluate_expression("T(1)^-1"), ParseError);
    EXPECT_THROW(evaluate_expression("T(0)"), ParseError);
    EXPECT_THROW(evaluate_expression(""), ParseError);
    EXPECT_THROW(evaluate_expression("T(99999999999)"), ParseError);
}
