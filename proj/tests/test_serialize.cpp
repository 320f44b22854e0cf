#include <gtest/gtest.h>

#include <random>

#include "qshuffle/serialize.hpp"
#include "qshuffle/shuffles.hpp"
#include "test_util.hpp"

using namespace qshuffle;

TEST(Json, LaurentRoundTrip) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        auto p = testutil::random_laurent(rng, 5, 1000);
        EXPECT_EQ(laurent_from_json(to_json(p)), p);
        EXPECT_EQ(laurent_from_json(nlohmann::json::parse(to_json(p).dump())), p);
    }
    EXPECT_EQ(to_json(LaurentPoly()).dump(), "{}");
    EXPECT_EQ(to_json(LaurentPoly::parse("q - 1")).dump(), R"({"0":"-1","1":"1"})");
    auto big = LaurentPoly::monomial(1, 3) * Integer::parse("123456789012345678901234567890");
    EXPECT_EQ(laurent_from_json(to_json(big)), big);
    EXPECT_THROW(laurent_from_json(nlohmann::json::parse(R"({"x":"1"})")), ParseError);
    EXPECT_THROW(laurent_from_json(nlohmann::json::parse(R"({"1":1})")), ParseError);
    EXPECT_THROW(laurent_from_json(nlohmann::json::array()), ParseError);
}

TEST(Json, HeckeRoundTrip) {
    std::mt19937_64 rng(8);
    for (int n = 1; n <= 5; ++n) {
        auto a = testutil::random_element(n, rng);
        EXPECT_EQ(hecke_from_json(nlohmann::json::parse(to_json(a).dump())), a);
    }
    ShuffleSession S;
    auto r = S.r(4, 2);
    EXPECT_EQ(hecke_from_json(to_json(r)), r);
    EXPECT_EQ(to_json(r)["terms"].size(), 24U);
    EXPECT_THROW(hecke_from_json(nlohmann::json::parse(R"({"n":3,"terms":[{"perm":"12","coeff":{}}]})")), SizeMismatch);
    EXPECT_THROW(hecke_from_json(nlohmann::json::parse(R"({"terms":[]})")), ParseError);
}

TEST(Pretty, Terms) {
    ShuffleSession S;
    auto lines = pretty_terms(S.r(3, 1));
    ASSERT_EQ(lines.size(), 6U);
    EXPECT_EQ(lines.front(), "(q^2 + q + 1)·T_id");
    EXPECT_NE(std::find(lines.begin(), lines.end(), "(q - 1)·T_(1,3)"), lines.end());
    EXPECT_EQ(pretty_terms(HeckeElement::generator(3, 2)), std::vector<std::string>{"T_(2,3)"});
    EXPECT_EQ(pretty_terms(-HeckeElement::generator(3, 2)), std::vector<std::string>{"-T_(2,3)"});
    auto at1 = pretty_terms_at(S.r(3, 1), 1);
    EXPECT_EQ(at1.size(), 5U);
    EXPECT_EQ(at1.front(), "3·T_id");
}
