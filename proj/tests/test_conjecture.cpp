#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "bohr/conjecture.hpp"
#include "bohr/io.hpp"
#include "bohr/verify.hpp"

using namespace bohr;

TEST(Conjecture, RatioMatchesSeries)
{
    // closed-form ratio against (1 - M)/area from the series
    for (double gamma : {0.0, 0.3, 0.7}) {
        for (double a : {0.2, 0.6, 0.95}) {
            for (double r : {0.05, 0.2, fournier_ruscheweyh_radius(gamma)}) {
                const auto s = mobius_family_coeffs({a, gamma});
                const double m = majorant(s, r).value;
                const double area = dirichlet_area(s, r * (1 - gamma)).value;
                EXPECT_NEAR(extremal_constant_ratio(a, gamma, r), (1 - m) / area,
                            1e-8 * std::max(1.0, (1 - m) / area));
            }
        }
    }
}

TEST(Conjecture, FloorAndWitness)
{
    const std::vector<double> gammas{0.0, 0.25, 0.5, 0.75, 0.99};
    const auto sweep = sweep_conjecture(gammas);
    ASSERT_EQ(sweep.estimates.size(), gammas.size());
    for (const auto &e : sweep.estimates) {
        EXPECT_GE(e.K_hat, 8.0 / 9.0 - 1e-6) << e.gamma;
        EXPECT_GT(witness_functional(e, e.K_hat + 1e-6).total, 1.0) << e.gamma;
        EXPECT_LE(e.r_witness, fournier_ruscheweyh_radius(e.gamma));
        EXPECT_EQ(e.refinements, 3);
        EXPECT_EQ(e.grid_stats.level_min.size(), 3u);
    }
}

TEST(Conjecture, GammaZeroNearEndpoint)
{
    // reported, not part of the paper's claims: the extremal family alone
    // approaches 16/9 from above as a -> 1
    const auto e = estimate_constant(0.0);
    EXPECT_NEAR(e.K_hat, 16.0 / 9.0, 1e-3);
}

TEST(Conjecture, SingleGammaSweep)
{
    const std::vector<double> g{0.0};
    const auto s = sweep_conjecture(g);
    EXPECT_EQ(s.estimates.size(), 1u);
    EXPECT_TRUE(s.nonmonotone.empty());
}

TEST(Conjecture, DeterministicCsv)
{
    const std::vector<double> g{0.0, 0.25, 0.5, 0.75};
    ConjectureOptions opt;
    opt.augment_samples = 20;
    std::ostringstream a, b;
    write_conjecture_csv(a, sweep_conjecture(g, opt).estimates);
    write_conjecture_csv(b, sweep_conjecture(g, opt).estimates);
    EXPECT_EQ(a.str(), b.str());
    EXPECT_EQ(a.str().substr(0, a.str().find('\n')), "gamma,K_hat,a_witness,r_witness,refinements");
}

TEST(Conjecture, AugmentationOnlyLowers)
{
    ConjectureOptions plain;
    ConjectureOptions aug;
    aug.augment_samples = 50;
    for (double gamma : {0.0, 0.5}) {
        const auto p = estimate_constant(gamma, plain);
        const auto q = estimate_constant(gamma, aug);
        EXPECT_LE(q.K_hat, p.K_hat);
        EXPECT_GE(q.K_hat, 8.0 / 9.0 - 1e-6);
        EXPECT_GT(witness_functional(q, q.K_hat + 1e-6, aug).total, 1.0);
    }
}

TEST(Conjecture, Errors)
{
    EXPECT_THROW(estimate_constant(1.0), std::domain_error);
    ConjectureOptions bad;
    bad.grid = 1;
    EXPECT_THROW(estimate_constant(0.0, bad), std::invalid_argument);
}
