// Acceptance gate: one PASS/FAIL line per criterion of the spec.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bohr/bohr.hpp"
#include "oracles.hpp"

using namespace bohr;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, bool ok, const std::string &detail)
{
    std::printf("%s criterion %2d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
    failures += ok ? 0 : 1;
}

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<double> gamma_grid()
{
    std::vector<double> g;
    for (int i = 0; i < 10; ++i) {
        g.push_back(i / 10.0);
    }
    return g;
}

// 64 radii from 0 to `top` inclusive
std::vector<double> radius_grid(double top)
{
    std::vector<double> r(64);
    for (int i = 0; i < 64; ++i) {
        r[i] = top * i / 63.0;
    }
    return r;
}

std::string fmt(const char *f, double x)
{
    char buf[128];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

double radius_for(Theorem t, double gamma, double k = 0.0, double lambda = 1.0)
{
    return family_infimum_radius(theorem_family_evaluator(t), mobius_family_grid(gamma, k, lambda)).radius;
}

void criterion1()
{
    const auto t0 = Clock::now();
    const double r = radius_for(Theorem::A, 0.0);
    const double dt = seconds_since(t0);
    report(1, std::abs(r - 1.0 / 3.0) <= 1e-3 && dt < 5.0,
           "classical radius " + fmt("%.8f", r) + " vs 1/3, " + fmt("%.3f s", dt));
}

void criterion2()
{
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (double g : gamma_grid()) {
        worst = std::max(worst, std::abs(radius_for(Theorem::B, g) - fournier_ruscheweyh_radius(g)));
    }
    const double dt = seconds_since(t0);
    report(2, worst <= 1e-3 && dt < 30.0,
           "Fournier-Ruscheweyh radii, max |diff| " + fmt("%.2e", worst) + ", " + fmt("%.3f s", dt));
}

// Admissibility on the sweep grid and sharpness just beyond the radius.
struct SweepOutcome {
    int violations = 0;
    std::size_t points = 0;
    bool sharp = true;
};

SweepOutcome sweep(const std::function<FunctionalValue(const PowerSeries &, double, double)> &functional,
                   const std::function<double(double)> &radius)
{
    SweepOutcome out;
    for (double g : gamma_grid()) {
        const double rho = radius(g);
        bool beyond = false;
        for (double a : sharpness_a_grid()) {
            const auto s = mobius_family_coeffs({a, g});
            for (double r : radius_grid(rho)) {
                ++out.points;
                out.violations += functional(s, r, g).within_bound() ? 0 : 1;
            }
            beyond = beyond || functional(s, rho + 0.01, g).total > 1.0;
        }
        out.sharp = out.sharp && beyond;
    }
    return out;
}

void criteria3and4()
{
    const auto o = sweep([](const PowerSeries &s, double r, double g) { return functional_theorem1(s, r, g); },
                         fournier_ruscheweyh_radius);
    report(3, o.violations == 0 && o.points == 10 * 14 * 64,
           "theorem 1 admissible on " + std::to_string(o.points) + " points, " + std::to_string(o.violations) +
               " violations");
    report(4, o.sharp, "theorem 1 violated at rho + 0.01 for every gamma");
}

void criterion5()
{
    const auto o = sweep([](const PowerSeries &s, double r, double) { return functional_theorem2(s, r); },
                         fournier_ruscheweyh_radius);
    const auto samples = random_blaschke_samples(42, 200);
    int bad = 0;
    for (const auto &f : samples) {
        bad += functional_theorem2(f.series(1024), 1.0 / 3.0).within_bound() ? 0 : 1;
    }
    report(5, o.violations == 0 && o.sharp && bad == 0,
           "theorem 2: " + std::to_string(o.violations) + " grid violations, sharp " + (o.sharp ? "yes" : "no") +
               ", " + std::to_string(bad) + "/200 Blaschke violations");
}

void criterion6()
{
    double worst = 0.0;
    for (double g : gamma_grid()) {
        worst = std::max(worst, std::abs(theorem3_radius(omega_lambda(g)) - fournier_ruscheweyh_radius(g)));
    }
    const auto o = sweep(
        [](const PowerSeries &s, double r, double g) { return functional_theorem3(s, r, omega_lambda(g)); },
        [](double g) { return theorem3_radius(omega_lambda(g)); });
    report(6, worst <= 1e-14 && o.violations == 0,
           "theorem 3 threshold gap " + fmt("%.1e", worst) + ", " + std::to_string(o.violations) + " violations");
}

void criterion7()
{
    double worst = 0.0;
    for (double k : {0.0, 0.25, 0.5, 1.0}) {
        for (double g : gamma_grid()) {
            worst = std::max(worst, std::abs(radius_for(Theorem::T4, g, k) - harmonic_radius(g, k)));
        }
    }
    const double cor = radius_for(Theorem::Corollary, 0.0, 1.0);
    report(7, worst <= 1e-3 && std::abs(cor - 0.2) <= 1e-3,
           "harmonic radii max |diff| " + fmt("%.2e", worst) + ", corollary " + fmt("%.6f", cor));
}

void criterion8()
{
    const auto samples = random_blaschke_samples(42, 200);
    const std::span<const BlaschkeSample> all(samples);
    std::vector<CheckReport> reps;
    reps.push_back(check_schwarz_pick(all, polar_grid()));
    reps.push_back(check_coefficient_bounds(all.first(100), 0.0, 16));
    for (double g : {0.25, 0.5, 0.9}) {
        reps.back() = merge(reps.back(), check_coefficient_bounds(all.first(100), g, 16));
    }
    reps.push_back(check_ruscheweyh(all.first(100), default_alpha_grid(), 8));
    CheckReport kp{"kaposha"};
    const std::vector<double> rs{0.1, 0.3, 0.5, 0.7, 0.9};
    for (std::size_t i = 0; i < 100; ++i) {
        const double k = 0.25 + 0.25 * static_cast<double>(i % 4);
        const auto hg = make_dilatation_pair(all[2 * i], all[2 * i + 1], k, 256);
        kp = merge(kp, check_kaposha(hg.h, hg.g, k, rs));
    }
    reps.push_back(kp);
    bool ok = true;
    std::string detail;
    for (const auto &r : reps) {
        ok = ok && r.worst_slack >= -1e-8 && r.samples >= 100;
        detail += r.name + " " + fmt("%.1e", r.worst_slack) + " (" + std::to_string(r.samples) + ") ";
    }
    report(8, ok, detail);
}

void criterion9()
{
    using namespace internals;
    double worst_f = -1.0;
    for (int j = 0; j < 1000; ++j) {
        for (int i = 0; i < 1000; ++i) {
            worst_f = std::max(worst_f, F_lemma1(i / 999.0, j / 1000.0, 8.0 / 9.0));
        }
    }
    double worst_root = 0.0;
    for (double g : gamma_grid()) {
        worst_root = std::max(worst_root, std::abs(psi_thm2(fournier_ruscheweyh_radius(g), g)));
    }
    const bool ok = A_gamma(0.0) == 3.0 / 8.0 && F_thm3(0.0) == 3.0 && F_thm3(1.0) == 0.0 && worst_f <= 1e-12 &&
                    worst_root <= 1e-14;
    report(9, ok, "max F_Lemma1 " + fmt("%.2e", worst_f) + ", Psi_Thm2 root residual " + fmt("%.1e", worst_root));
}

void criterion10()
{
    const auto r = check_identity_random(42, 100);
    report(10, r.passed && r.samples == 100, "identity worst |diff| " + fmt("%.2e", -r.worst_slack));
}

void criterion11()
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> deg(1, 10);
    std::uniform_real_distribution<double> rad(0.05, 0.95);
    double worst_area = 0.0;
    for (int i = 0; i < 50; ++i) {
        const PowerSeries p(oracle::random_poly(rng, static_cast<std::size_t>(deg(rng))));
        const auto dp = derivative(p);
        const double r = rad(rng);
        const double quad = oracle::disk_area([&](complex z) { return dp(z); }, r);
        worst_area = std::max(worst_area, std::abs(dirichlet_area(p, r).value - quad) / std::max(1.0, quad));
    }
    double worst_taylor = 0.0;
    for (const MobiusFamilyParams p : {MobiusFamilyParams{0.5, 0.0}, MobiusFamilyParams{0.5, 0.25},
                                       MobiusFamilyParams{0.8, 0.6}}) {
        const auto t = numeric_taylor([&](complex z) { return mobius_value(p, z); }, 16);
        const auto s = mobius_family_coeffs(p, 16);
        for (std::size_t n = 0; n <= 16; ++n) {
            worst_taylor = std::max(worst_taylor, std::abs(t.series[n] - s[n]));
        }
    }
    report(11, worst_area <= 1e-8 && worst_taylor <= 1e-10,
           "area vs quadrature " + fmt("%.1e", worst_area) + ", numeric_taylor vs Eq. (6) " +
               fmt("%.1e", worst_taylor));
}

void criterion12()
{
    auto grid = gamma_grid();
    grid.push_back(0.99);
    const auto sweep = sweep_conjecture(grid);
    bool ok = true;
    double k0 = 0.0;
    for (const auto &e : sweep.estimates) {
        ok = ok && e.K_hat >= 8.0 / 9.0 - 1e-6;
        ok = ok && witness_functional(e, e.K_hat + 1e-6).total > 1.0;
        if (e.gamma == 0.0) {
            k0 = e.K_hat;
        }
    }
    report(12, ok,
           "K_hat floor and witness validity on " + std::to_string(grid.size()) + " gammas; K_hat(0) = " +
               fmt("%.6f", k0) + " (16/9 = 1.777778, reported only), " +
               std::to_string(sweep.nonmonotone.size()) + " non-monotone pairs reported");
}

} // namespace

int main()
{
    criterion1();
    criterion2();
    criteria3and4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    std::printf("%d of 12 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
