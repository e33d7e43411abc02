#include <gtest/gtest.h>

#include <cmath>

#include "bohr/extremals.hpp"
#include "bohr/functionals.hpp"
#include "bohr/internals.hpp"
#include "bohr/solver.hpp"

using namespace bohr;
using namespace bohr::internals;

TEST(Internals, Anchors)
{
    EXPECT_EQ(A_gamma(0.0), 3.0 / 8.0);
    EXPECT_EQ(F_thm3(0.0), 3.0);
    EXPECT_EQ(F_thm3(1.0), 0.0);
    EXPECT_DOUBLE_EQ(lemma1_radius(0.0), 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(r0_thm4(1.0, 0.0, 1.0), 0.2);
}

TEST(Internals, FLemmaGrid)
{
    for (int j = 0; j < 1000; ++j) {
        const double g = j / 1000.0;
        for (int i = 0; i <= 999; ++i) {
            ASSERT_LE(F_lemma1(i / 999.0, g, 8.0 / 9.0), 1e-12);
        }
    }
}

TEST(Internals, PsiThm2Root)
{
    for (int j = 0; j < 100; ++j) {
        const double g = j / 100.0;
        EXPECT_NEAR(psi_thm2(fournier_ruscheweyh_radius(g), g), 0.0, 1e-14);
    }
}

TEST(Internals, PsiLemmaAtRadius)
{
    // Psi(r_0) = (1 - x^2)/2 F(x)
    for (double g : {0.0, 0.3, 0.7}) {
        for (double x : {0.0, 0.2, 0.5, 0.99}) {
            EXPECT_NEAR(psi_lemma1(lemma1_radius(g), x, g, 8.0 / 9.0), 0.5 * (1 - x * x) * F_lemma1(x, g, 8.0 / 9.0),
                        1e-14);
        }
    }
}

TEST(Internals, UPolynomial)
{
    const auto c = u_coefficients(0.3, 0.2);
    EXPECT_DOUBLE_EQ(u_thm2(1.0, c), 1.0);
    const double h = 1e-5;
    for (double a : {0.1, 0.5, 0.9}) {
        EXPECT_NEAR(u_thm2_prime(a, c), (u_thm2(a + h, c) - u_thm2(a - h, c)) / (2 * h), 1e-8);
        EXPECT_NEAR(u_thm2_second(a, c), (u_thm2_prime(a + h, c) - u_thm2_prime(a - h, c)) / (2 * h), 1e-8);
    }
}

TEST(Internals, DomainGuards)
{
    EXPECT_THROW(psi_lemma1(0.8, 0.5, 0.2, 8.0 / 9.0), std::domain_error);
    EXPECT_THROW(u_coefficients(1.0, 0.0), std::domain_error);
    EXPECT_THROW(F_thm3(-1.0), std::domain_error);
    EXPECT_THROW(phi_thm2(1.0, 0.5, 0.0), std::domain_error);
    EXPECT_THROW(proof_internals("nope", {}), std::invalid_argument);
}

TEST(Internals, EvaluateByName)
{
    EXPECT_EQ(proof_internals("A_gamma", {{"gamma", 0.0}}), 0.375);
    EXPECT_EQ(proof_internals("F_Thm3", {{"x", 1.0}}), 0.0);
    EXPECT_DOUBLE_EQ(proof_internals("Phi_Thm1", {{"r", 0.3}, {"a", 0.6}, {"gamma", 0.2}}), phi_thm1(0.3, 0.6, 0.2));
    EXPECT_DOUBLE_EQ(proof_internals("Phi_Thm4_lambda", {{"r", 0.3}, {"a", 0.6}, {"k", 0.5}, {"lambda", 0.8}}),
                     phi_thm4(0.3, 0.6, 0.0, 0.5, 0.8, HarmonicMultiplier::lambda_only));
}

TEST(Internals, IdentityExamples)
{
    // a = 0.6, gamma = 0.2, r = 0.3
    {
        const double a = 0.6, g = 0.2, r = 0.3;
        const auto s = mobius_family_coeffs({a, g});
        EXPECT_NEAR(functional_theorem1(s, r, g).total, 1 - (1 - a) * phi_thm1(r, a, g), 1e-10);
        EXPECT_NEAR(functional_theorem2(s, r).total, 1 - (1 - a) / (1 - a * g) * phi_thm2(r, a, g), 1e-10);
    }
    // r -> 0: both sides tend to A_0
    {
        const double a = 0.6, g = 0.2;
        const double A0 = (a - g) / (1 - a * g);
        EXPECT_NEAR(1 - (1 - a) * phi_thm1(0.0, a, g), A0, 1e-15);
        EXPECT_NEAR(1 - (1 - a) / (1 - a * g) * phi_thm2(0.0, a, g), A0, 1e-15);
    }
    // gamma = 0, a = 0.5, r = 1/3
    {
        const auto s = mobius_family_coeffs({0.5, 0.0});
        EXPECT_NEAR(functional_theorem1(s, 1.0 / 3.0, 0.0).total, 1 - 0.5 * phi_thm1(1.0 / 3.0, 0.5, 0.0), 1e-10);
    }
}

TEST(Internals, HarmonicMultiplierConventions)
{
    // the series construction uses k * lambda; lambda_only differs unless k = 1
    const double a = 0.7, g = 0.1, r = 0.25, k = 0.5, l = 0.8;
    const auto hg = harmonic_extremal({a, g, k, l});
    const double pre = (1 - a) / (1 - a * g);
    const double total = functional_theorem4(hg.h, hg.g, r).total;
    EXPECT_NEAR(total, 1 - pre * phi_thm4(r, a, g, k, l), 1e-10);
    EXPECT_GT(std::abs(total - (1 - pre * phi_thm4(r, a, g, k, l, HarmonicMultiplier::lambda_only))), 1e-3);
    EXPECT_DOUBLE_EQ(phi_thm4(r, a, g, 1.0, l), phi_thm4(r, a, g, 1.0, l, HarmonicMultiplier::lambda_only));
}
