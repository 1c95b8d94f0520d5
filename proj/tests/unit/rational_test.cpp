#include <gtest/gtest.h>

#include "tp3/errors.hpp"
#include "tp3/rational.hpp"
#include "test_support.hpp"

namespace tp3 {
namespace {

TEST(Rational, ParseReducesAndNormalizesSign) {
    EXPECT_EQ(Rational::parse("6/4").str(), "3/2");
    EXPECT_EQ(Rational::parse("-6/4").str(), "-3/2");
    EXPECT_EQ(Rational::parse("+5").str(), "5");
    EXPECT_EQ(Rational::parse("0/7").str(), "0");
    EXPECT_EQ(Rational::parse("123456789012345678901234567890").str(), "123456789012345678901234567890");
}

TEST(Rational, ParseRejectsMalformedText) {
    for (const char* bad : {"", "1/0", "1/", "/2", "1.5", "a", "1/-2", "1 /2", "--1", "1/2/3"})
        EXPECT_THROW(Rational::parse(bad), ParseError) << bad;
}

TEST(Rational, Arithmetic) {
    const Rational a(1, 2), b(-2, 3);
    EXPECT_EQ(a + b, Rational(-1, 6));
    EXPECT_EQ(a - b, Rational(7, 6));
    EXPECT_EQ(a * b, Rational(-1, 3));
    EXPECT_EQ(a / b, Rational(-3, 4));
    EXPECT_THROW(a / Rational(0), Error);
    EXPECT_LT(b, a);
    EXPECT_EQ(abs(b), Rational(2, 3));
    EXPECT_EQ(pow(b, 3), Rational(-8, 27));
}

TEST(Rational, ExactRoots) {
    EXPECT_EQ(exact_root(Rational(16, 81), 4), Rational(2, 3));
    EXPECT_EQ(exact_root(Rational(-8, 27), 3), Rational(-2, 3));
    EXPECT_FALSE(exact_root(Rational(1, 2), 4).has_value());
    EXPECT_FALSE(exact_root(Rational(-4), 2).has_value());
    EXPECT_EQ(exact_root(Rational(0), 4), Rational(0));
}

TEST(Rational, FieldAxiomsOnRandomSamples) {
    testing::Rng rng(11);
    for (int t = 0; t < 500; ++t) {
        const Rational a = rng.rational(50, 40), b = rng.rational(50, 40), c = rng.nonzero(50, 40);
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ((a / c) * c, a);
        EXPECT_EQ(Rational::parse(a.str()), a);
        EXPECT_EQ(a - a, Rational(0));
    }
}

}  // namespace
}  // namespace tp3
