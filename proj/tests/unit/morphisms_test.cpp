#include <gtest/gtest.h>

#include "tp3/derivations.hpp"
#include "tp3/errors.hpp"
#include "tp3/families.hpp"
#include "tp3/morphisms.hpp"
#include "test_support.hpp"

namespace tp3 {
namespace {

const Matrix kPhi1{{1, 0, 0}, {0, Rational(-1, 2), Rational(1, 2)}, {0, Rational(-3, 2), Rational(-1, 2)}};

Matrix diag(Rational a, Rational b, Rational c) { return Matrix{{a, 0, 0}, {0, b, 0}, {0, 0, c}}; }

FamilyInstance t1(long alpha) { return {1, {{"alpha", Rational(alpha)}}}; }

TEST(Automorphism, A3Examples) {
    EXPECT_TRUE(is_bracket_automorphism(a3_bracket(), kPhi1).passed);
    EXPECT_TRUE(is_bracket_automorphism(a3_bracket(), Matrix::identity(3)).passed);
    Matrix bad = Matrix::identity(3);
    bad(0, 1) = 1;
    EXPECT_FALSE(is_bracket_automorphism(a3_bracket(), bad).passed);
    EXPECT_FALSE(a3_automorphism_check(bad));

    EXPECT_TRUE(a3_automorphism_check(Matrix{{1, 0, 0}, {0, -2, -3}, {0, 1, 1}}));
    EXPECT_TRUE(a3_automorphism_check(diag(7, 1, 1)));
    EXPECT_FALSE(a3_automorphism_check(diag(1, 2, 1)));
    EXPECT_FALSE(is_bracket_automorphism(a3_bracket(), diag(1, 2, 1)).passed);
}

TEST(Automorphism, SingularMapFails) {
    const CheckReport r = is_bracket_automorphism(a3_bracket(), Matrix(3, 3));
    EXPECT_FALSE(r.passed);
    ASSERT_EQ(r.violations.size(), 1u);
    EXPECT_TRUE(r.violations[0].witness.empty());
}

TEST(Automorphism, ClosedFormAgreesWithBracketCheck) {
    testing::Rng rng(41);
    for (int t = 0; t < 1000; ++t) {
        Matrix m = t % 2 ? rng.matrix(3, 3) : rng.a3_automorphism();
        if (t % 4 == 2) m(static_cast<std::size_t>(rng.integer(0, 2)), static_cast<std::size_t>(rng.integer(0, 2))) += 1;
        EXPECT_EQ(a3_automorphism_check(m), is_bracket_automorphism(a3_bracket(), m).passed);
    }
    for (int id = 1; id <= 16; ++id) {
        const Matrix phi = case_automorphism(id);
        EXPECT_TRUE(a3_automorphism_check(phi)) << id;
        EXPECT_TRUE(is_bracket_automorphism(a3_bracket(), phi).passed) << id;
    }
}

TEST(Transport, Examples) {
    testing::Rng rng(42);
    const CommProduct p = rng.product(3);
    EXPECT_EQ(transport_product(p, Matrix::identity(3)), p);
    for (long a : {1L, 2L, -5L}) EXPECT_EQ(transport_product(instantiate_family(t1(a)), kPhi1), instantiate_family(t1(a)));

    CommProduct expected(3);
    expected.set(2, 2, {0, Rational(1, 2), 0});
    expected.set(2, 3, {0, 0, Rational(-1, 2)});
    expected.set(3, 3, {0, -24, 0});
    expected.set(1, 3, {0, 0, 0});
    EXPECT_EQ(transport_product(instantiate_family(t1(1)), diag(1, 2, Rational(1, 2))), expected);
}

TEST(Transport, BracketExamples) {
    EXPECT_EQ(transport_bracket(a3_bracket(), Matrix{{1, 0, 0}, {0, -2, -1}, {0, 3, 1}}), a3_bracket());
    EXPECT_EQ(transport_bracket(a3_bracket(), Matrix::identity(3)), a3_bracket());
    EXPECT_EQ(transport_bracket(a3_bracket(), diag(2, 1, 1)), a3_bracket());
    EXPECT_NE(transport_bracket(a3_bracket(), diag(1, 2, 1)), a3_bracket());
    EXPECT_THROW(transport_product(CommProduct(3), Matrix(3, 3)), Singular);
    EXPECT_THROW(transport_product(CommProduct(3), Matrix::identity(2)), DimensionMismatch);
}

TEST(Transport, AgreesWithCoordinateOracle) {
    testing::Rng rng(43);
    for (int t = 0; t < 100; ++t) {
        const CommProduct p = rng.product(3);
        const Matrix m = rng.invertible(3);
        EXPECT_EQ(transport_product(p, m), testing::oracle_transport3(p, m));
    }
}

TEST(Transport, CompositionAndInverse) {
    testing::Rng rng(44);
    for (int t = 0; t < 100; ++t) {
        const int n = static_cast<int>(rng.integer(2, 4));
        const CommProduct p = rng.product(n);
        const Matrix m1 = rng.invertible(static_cast<std::size_t>(n)), m2 = rng.invertible(static_cast<std::size_t>(n));
        EXPECT_EQ(transport_product(p, m1 * m2), transport_product(transport_product(p, m1), m2));
        EXPECT_EQ(transport_product(transport_product(p, m1), invert(m1)), p);
    }
}

TEST(Transport, IsomorphismPreservesCompatibility) {
    testing::Rng rng(45);
    const ProductSpace space = tp_product_space(a3_bracket());
    for (int t = 0; t < 100; ++t) {
        Vector coords = zero_vector(product_unknown_count(3));
        for (const auto& b : space.basis) coords = coords + rng.rational() * product_coordinates(b);
        const CommProduct p = product_from_coordinates(3, coords);
        const Matrix m = t % 2 ? rng.a3_automorphism() : rng.invertible(3);
        EXPECT_TRUE(check_transposed_leibniz(transport_bracket(a3_bracket(), m), transport_product(p, m)).passed);
    }
}

TEST(ElevenEquations, Examples) {
    testing::Rng rng(46);
    for (int t = 0; t < 20; ++t)
        for (const auto& r : eleven_equation_residuals(rng.a3_family_product(), Matrix::identity(3))) EXPECT_TRUE(r.is_zero());
    for (const auto& r : eleven_equation_residuals(instantiate_family(t1(3)), kPhi1)) EXPECT_TRUE(r.is_zero());

    const auto res = eleven_equation_residuals(instantiate_family(t1(1)), diag(1, 2, Rational(1, 2)));
    ASSERT_EQ(res.size(), 11u);
    EXPECT_EQ(res[6], Rational(-21, 8));

    CommProduct off(3);
    off.set(1, 1, {1, 0, 0});
    EXPECT_THROW(eleven_equation_residuals(off, Matrix::identity(3)), ShapeMismatch);
    EXPECT_THROW(eleven_equation_residuals(CommProduct(3), diag(1, 2, 1)), NotAutomorphism);
}

TEST(ElevenEquations, VanishExactlyOnFixedPoints) {
    testing::Rng rng(47);
    int fixed = 0;
    for (int t = 0; t < 200; ++t) {
        CommProduct p;
        Matrix m;
        if (t % 2) {
            p = rng.a3_family_product();
            m = rng.a3_automorphism();
        } else {
            const int id = 1 + t / 2 % 16;
            std::uint64_t state = rng.engine();
            p = instantiate_family(random_generic_instance(id, state));
            m = case_automorphism(id);
            if (t % 4 == 2) m(1, 0) += 1;
        }
        bool zero = true;
        for (const auto& r : eleven_equation_residuals(p, m)) zero = zero && r.is_zero();
        const bool is_fixed = transport_product(p, m) == p;
        fixed += is_fixed;
        EXPECT_EQ(zero, is_fixed);
    }
    EXPECT_GT(fixed, 20);
}

}  // namespace
}  // namespace tp3
