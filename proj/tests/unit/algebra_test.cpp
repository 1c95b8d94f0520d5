#include <gtest/gtest.h>

#include <algorithm>

#include "tp3/algebra.hpp"
#include "tp3/errors.hpp"
#include "tp3/families.hpp"
#include "test_support.hpp"

namespace tp3 {
namespace {

Vector e(int n, int i) { return unit_vector(static_cast<std::size_t>(n), static_cast<std::size_t>(i - 1)); }

TriBracket fi_counterexample() {
    TriBracket b(5);
    b.set(1, 2, 3, e(5, 4));
    b.set(2, 4, 5, e(5, 1));
    return b;
}

// Fundamental identity in structure constants, summed over all basis 5-tuples.
bool oracle_fundamental_identity(const TriBracket& b) {
    const int n = b.dim();
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            for (int z = 1; z <= n; ++z)
                for (int u = 1; u <= n; ++u)
                    for (int v = 1; v <= n; ++v)
                        for (int t = 1; t <= n; ++t) {
                            Rational lhs, rhs;
                            for (int s = 1; s <= n; ++s) {
                                lhs += b.coeff(x, y, z, s) * b.coeff(s, u, v, t);
                                rhs += b.coeff(x, u, v, s) * b.coeff(s, y, z, t) + b.coeff(y, u, v, s) * b.coeff(x, s, z, t) +
                                       b.coeff(z, u, v, s) * b.coeff(x, y, s, t);
                            }
                            if (lhs != rhs) return false;
                        }
    return true;
}

TEST(TriBracket, SkewSymmetricStorage) {
    TriBracket b(3);
    b.set(2, 1, 3, Vector{-1, 0, 0});
    EXPECT_EQ(b, a3_bracket());
    EXPECT_EQ(b.get(3, 2, 1), (Vector{-1, 0, 0}));
    EXPECT_EQ(b.get(2, 3, 1), (Vector{1, 0, 0}));
    EXPECT_EQ(b.get(1, 1, 3), zero_vector(3));
    EXPECT_THROW(b.set(1, 1, 2, e(3, 1)), Error);
    EXPECT_THROW(b.set(1, 2, 4, e(3, 1)), IndexOutOfRange);
}

TEST(TriBracket, Evaluation) {
    const TriBracket a3 = a3_bracket();
    EXPECT_EQ(bracket_eval(a3, e(3, 1), e(3, 2), e(3, 3)), e(3, 1));
    EXPECT_EQ(bracket_eval(a3, e(3, 1), e(3, 1), e(3, 3)), zero_vector(3));
    EXPECT_EQ(bracket_eval(a3, e(3, 1) + e(3, 2), e(3, 2), e(3, 3)), e(3, 1));
}

TEST(TriBracket, AntisymmetryOnRandomArguments) {
    testing::Rng rng(21);
    for (int t = 0; t < 50; ++t) {
        TriBracket b(4);
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j)
                for (int k = j + 1; k <= 4; ++k) b.set(i, j, k, rng.vector(4));
        const Vector x = rng.vector(4), y = rng.vector(4), z = rng.vector(4);
        const Vector v = bracket_eval(b, x, y, z);
        EXPECT_EQ(bracket_eval(b, y, x, z), Rational(-1) * v);
        EXPECT_EQ(bracket_eval(b, x, z, y), Rational(-1) * v);
        EXPECT_TRUE(is_zero(bracket_eval(b, x, x, z)));
    }
}

TEST(CommProduct, Evaluation) {
    const CommProduct t1 = instantiate_family({1, {{"alpha", Rational(2)}}});
    EXPECT_EQ(product_eval(t1, e(3, 3), e(3, 3)), (Vector{0, -6, 0}));
    const CommProduct t9 = instantiate_family({9, {{"gamma", Rational(1)}}});
    EXPECT_EQ(product_eval(t9, e(3, 2), e(3, 3)), (Vector{0, -1, 0}));
    EXPECT_EQ(product_eval(t9, zero_vector(3), e(3, 2)), zero_vector(3));
}

TEST(FundamentalIdentity, A3AndZeroPass) {
    EXPECT_TRUE(check_fundamental_identity(a3_bracket()).passed);
    for (int n = 1; n <= 5; ++n) EXPECT_TRUE(check_fundamental_identity(TriBracket(n)).passed);
}

TEST(FundamentalIdentity, CounterexampleWitness) {
    const CheckReport r = check_fundamental_identity(fi_counterexample());
    ASSERT_FALSE(r.passed);
    const auto it = std::find_if(r.violations.begin(), r.violations.end(),
                                 [](const Violation& v) { return v.witness == std::vector<int>{2, 4, 5, 2, 3}; });
    ASSERT_NE(it, r.violations.end());
    EXPECT_EQ(it->left, e(5, 4));
    EXPECT_EQ(it->right, zero_vector(5));
}

TEST(FundamentalIdentity, AgreesWithStructureConstantOracle) {
    testing::Rng rng(22);
    int passes = 0;
    for (int t = 0; t < 60; ++t) {
        TriBracket b(4);
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j)
                for (int k = j + 1; k <= 4; ++k)
                    if (rng.integer(0, 2) == 0) b.set(i, j, k, e(4, static_cast<int>(rng.integer(1, 4))));
        const bool expected = oracle_fundamental_identity(b);
        passes += expected;
        EXPECT_EQ(check_fundamental_identity(b).passed, expected);
    }
    EXPECT_GT(passes, 0);
    EXPECT_LT(passes, 60);
}

TEST(TransposedLeibniz, Examples) {
    for (long a : {5L, -3L, 0L})
        EXPECT_TRUE(check_transposed_leibniz(a3_bracket(), instantiate_family({1, {{"alpha", Rational(a)}}})).passed);
    EXPECT_TRUE(check_transposed_leibniz(a3_bracket(), CommProduct(3)).passed);

    CommProduct bad(3);
    bad.set(2, 3, e(3, 2));
    const CheckReport r = check_transposed_leibniz(a3_bracket(), bad);
    ASSERT_FALSE(r.passed);
    const auto it = std::find_if(r.violations.begin(), r.violations.end(),
                                 [](const Violation& v) { return v.witness == std::vector<int>{3, 1, 2, 3}; });
    ASSERT_NE(it, r.violations.end());
    EXPECT_EQ(it->left, zero_vector(3));
    EXPECT_EQ(it->right, e(3, 1));
}

TEST(TransposedLeibniz, AgreesWithDeterminantOracle) {
    testing::Rng rng(23);
    for (int t = 0; t < 100; ++t) {
        const CommProduct p = t % 2 ? rng.a3_family_product() : rng.product(3);
        EXPECT_EQ(check_transposed_leibniz(a3_bracket(), p).passed, testing::oracle_a3_leibniz(p));
    }
}

TEST(TransposedLeibniz, DimensionMismatch) {
    EXPECT_THROW(check_transposed_leibniz(a3_bracket(), CommProduct(2)), DimensionMismatch);
}

TEST(Associativity, Examples) {
    EXPECT_TRUE(check_commutative_associative(CommProduct(3)).associative.passed);
    CommProduct idem(3);
    idem.set(1, 1, e(3, 1));
    EXPECT_TRUE(check_commutative_associative(idem).associative.passed);

    const auto r = check_commutative_associative(instantiate_family({1, {{"alpha", Rational(1)}}}));
    EXPECT_TRUE(r.commutative);
    ASSERT_FALSE(r.associative.passed);
    const auto it = std::find_if(r.associative.violations.begin(), r.associative.violations.end(),
                                 [](const Violation& v) { return v.witness == std::vector<int>{2, 2, 3}; });
    ASSERT_NE(it, r.associative.violations.end());
    EXPECT_EQ(it->left, (Vector{0, 0, -1}));
    EXPECT_EQ(it->right, (Vector{0, 0, 1}));
}

TEST(Associativity, ProductFamilyShape) {
    testing::Rng rng(24);
    for (int t = 0; t < 20; ++t) EXPECT_TRUE(in_a3_product_family(rng.a3_family_product()));
    CommProduct off(3);
    off.set(1, 1, e(3, 1));
    EXPECT_FALSE(in_a3_product_family(off));
    EXPECT_THROW(remark_associativity_residuals(off), ShapeMismatch);
}

TEST(AssociativityResiduals, Examples) {
    const auto zero = remark_associativity_residuals(CommProduct(3));
    ASSERT_EQ(zero.size(), 8u);
    for (const auto& r : zero) EXPECT_TRUE(r.is_zero());
    const auto t1 = remark_associativity_residuals(instantiate_family({1, {{"alpha", Rational(1)}}}));
    EXPECT_EQ(t1[5], Rational(2));
}

TEST(AssociativityResiduals, VanishOnAssociativeMembers) {
    testing::Rng rng(25);
    // Products with values in span(e1) are associative.
    for (int t = 0; t < 50; ++t) {
        CommProduct p(3);
        p.set(2, 2, {rng.rational(), 0, 0});
        p.set(2, 3, {rng.rational(), 0, 0});
        p.set(3, 3, {rng.rational(), 0, 0});
        ASSERT_TRUE(check_commutative_associative(p).associative.passed);
        for (const auto& r : remark_associativity_residuals(p)) EXPECT_TRUE(r.is_zero());
    }
}

}  // namespace
}  // namespace tp3
