#include <gtest/gtest.h>

#include <cmath>

#include "bohr/extremals.hpp"

using namespace bohr;

TEST(Mobius, Validation)
{
    EXPECT_THROW(mobius_family_coeffs({1.0, 0.0}), std::domain_error);
    EXPECT_THROW(mobius_family_coeffs({0.0, 0.0}), std::domain_error);
    EXPECT_THROW(mobius_family_coeffs({0.5, 1.0}), std::domain_error);
    EXPECT_THROW(mobius_family_coeffs({0.5, 0.2}, 0), std::invalid_argument);
    EXPECT_THROW(harmonic_extremal({0.5, 0.2, 1.5, 1.0}), std::domain_error);
    EXPECT_THROW(harmonic_extremal({0.5, 0.2, 0.5, -0.1}), std::domain_error);
}

TEST(Mobius, HalfAtZeroGamma)
{
    // a = 0.5, gamma = 0: A_0 = 0.5, A_n = 1.5 * 0.5^n
    const auto s = mobius_family_coeffs({0.5, 0.0}, 30);
    EXPECT_DOUBLE_EQ(s[0].real(), 0.5);
    for (std::size_t n = 1; n <= 30; ++n) {
        EXPECT_NEAR(s[n].real(), -1.5 * std::pow(0.5, static_cast<double>(n)), 1e-16);
    }
}

TEST(Mobius, ReducesToDiskAutomorphism)
{
    for (double a : {0.1, 0.5, 0.9}) {
        const auto s = mobius_family_coeffs({a, 0.0}, 50);
        EXPECT_DOUBLE_EQ(s[0].real(), a);
        for (std::size_t n = 1; n <= 50; ++n) {
            EXPECT_NEAR(s[n].real(), -(1 - a * a) * std::pow(a, static_cast<double>(n - 1)), 1e-15);
        }
    }
}

TEST(Mobius, SeriesMatchesClosedFormValues)
{
    for (double gamma : {0.0, 0.3, 0.8}) {
        const MobiusFamilyParams p{0.7, gamma};
        const auto s = mobius_family_coeffs(p);
        for (const complex z : {complex(0.3, 0.1), complex(-0.5, 0.2), complex(0.0, 0.6)}) {
            EXPECT_NEAR(std::abs(s(z) - mobius_value(p, z)), 0.0, 1e-13);
        }
        // derivative by central differences
        const complex z(0.2, -0.1);
        const double h = 1e-6;
        const complex fd = (mobius_value(p, z + h) - mobius_value(p, z - h)) / (2 * h);
        EXPECT_NEAR(std::abs(fd - mobius_derivative(p, z)), 0.0, 1e-8);
    }
}

TEST(Mobius, BoundedOnOmegaGamma)
{
    // a = 0.9, gamma = 0.9: |g_0| <= 1 sampled near the boundary of Omega_gamma
    const MobiusFamilyParams p{0.9, 0.9};
    const DiskDomain d(0.9);
    for (int j = 0; j < 720; ++j) {
        const complex z = d.from_unit_disk(std::polar(0.99, 2 * std::numbers::pi * j / 720.0));
        EXPECT_LE(std::abs(mobius_value(p, z)), 1.0);
    }
    for (int j = 0; j < 360; ++j) {
        EXPECT_LE(std::abs(mobius_value(p, std::polar(0.99, 2 * std::numbers::pi * j / 360.0))), 1.0);
    }
}

TEST(Mobius, FirstCoefficientIsExtremal)
{
    // |A_1| = (1 - A_0^2)/(1 + gamma) for every a > gamma
    for (double gamma : {0.0, 0.25, 0.5, 0.9}) {
        for (double a : {gamma + 0.01, 0.95, 1.0 - std::ldexp(1.0, -12)}) {
            const MobiusFamilyParams p{a, gamma};
            const double A0 = p.A0();
            EXPECT_NEAR(p.An(1), (1 - A0 * A0) / (1 + gamma), 1e-14);
        }
    }
}

TEST(Mobius, TailIsExact)
{
    const MobiusFamilyParams p{0.8, 0.4};
    const auto s = mobius_family_coeffs(p, 10);
    ASSERT_TRUE(s.tail());
    for (std::size_t n = 11; n < 500; ++n) {
        EXPECT_NEAR(s.tail()->scale * std::pow(s.tail()->ratio, static_cast<double>(n)), p.An(n), 1e-15);
    }
}

TEST(Harmonic, CoAnalyticPart)
{
    // k = 1, lambda = 1, a = 0.5, gamma = 0: b_n = -1.5 * 0.5^n
    const auto hg = harmonic_extremal({0.5, 0.0, 1.0, 1.0}, 20);
    EXPECT_EQ(hg.g[0], complex(0.0));
    for (std::size_t n = 1; n <= 20; ++n) {
        EXPECT_NEAR(hg.g[n].real(), -1.5 * std::pow(0.5, static_cast<double>(n)), 1e-16);
    }
    const auto zero = harmonic_extremal({0.5, 0.3, 0.0, 1.0}, 20);
    for (std::size_t n = 0; n <= 20; ++n) {
        EXPECT_EQ(zero.g[n], complex(0.0));
    }
}

TEST(Harmonic, DilatationBound)
{
    const double k = 0.6;
    const double lambda = 0.7;
    const auto hg = harmonic_extremal({0.8, 0.2, k, lambda});
    const auto hp = derivative(hg.h);
    const auto gp = derivative(hg.g);
    for (int j = 0; j < 50; ++j) {
        const complex z = std::polar(0.6, 0.3 * j);
        EXPECT_NEAR(std::abs(gp(z)), k * lambda * std::abs(hp(z)), 1e-12);
        EXPECT_LE(std::abs(gp(z)), k * std::abs(hp(z)));
    }
}

TEST(Grid, SharpnessGrid)
{
    const auto g = sharpness_a_grid();
    ASSERT_EQ(g.size(), 14u);
    EXPECT_EQ(g.front(), 0.5);
    EXPECT_EQ(g.back(), 1.0 - 1.0 / 16384.0);
}
