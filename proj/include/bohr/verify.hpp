#pragma once

// Executable checks for the coefficient lemmas, the pointwise Schwarz-Pick
// estimates, the recentred area inequality, the closed-form identities on the
// extremal family and the sign/monotonicity claims about proof-internal
// functions. Every check reports its worst slack (RHS - LHS) and a witness.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bohr/extremals.hpp"
#include "bohr/functionals.hpp"
#include "bohr/internals.hpp"
#include "bohr/samples.hpp"
#include "bohr/series.hpp"
#include "bohr/solver.hpp"

namespace bohr {

using Witness = std::map<std::string, double>;

struct CheckReport {
    CheckReport() = default;
    explicit CheckReport(std::string name_, double tolerance_ = 1e-9)
        : name(std::move(name_)), tolerance(tolerance_)
    {
    }

    std::string name;
    /// Number of functions or parameter tuples checked.
    std::size_t samples = 0;
    /// Number of individual inequality evaluations.
    std::size_t evaluations = 0;
    /// Samples dropped because an intermediate computation failed.
    std::size_t skipped = 0;
    double worst_slack = std::numeric_limits<double>::infinity();
    Witness witness;
    double tolerance = 1e-9;
    bool passed = true;

    void observe(double slack, const Witness &w)
    {
        ++evaluations;
        if (!(slack >= worst_slack)) { // also catches NaN
            worst_slack = slack;
            witness = w;
        }
    }

    CheckReport &finish()
    {
        passed = worst_slack >= -tolerance;
        return *this;
    }
};

inline constexpr double closed_form_tolerance = 1e-9;
inline constexpr double numeric_tolerance = 1e-8;

/// Combine two reports of the same check.
inline CheckReport merge(CheckReport a, const CheckReport &b)
{
    a.samples += b.samples;
    a.evaluations += b.evaluations;
    a.skipped += b.skipped;
    if (!(b.worst_slack >= a.worst_slack)) {
        a.worst_slack = b.worst_slack;
        a.witness = b.witness;
    }
    a.tolerance = std::max(a.tolerance, b.tolerance);
    return a.finish();
}

/// Points r e^{i theta} with r = r_max (i+1)/n_radii and n_angles angles.
inline std::vector<complex> polar_grid(std::size_t n_radii = 25, std::size_t n_angles = 40, double r_max = 0.98)
{
    std::vector<complex> g;
    g.reserve(n_radii * n_angles);
    for (std::size_t i = 0; i < n_radii; ++i) {
        const double r = r_max * static_cast<double>(i + 1) / static_cast<double>(n_radii);
        for (std::size_t j = 0; j < n_angles; ++j) {
            g.push_back(std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_angles)));
        }
    }
    return g;
}

/// |f(z)| <= (|z| + |f(0)|)/(1 + |f(0)||z|) and
/// |f'(z)| <= (1 - |f(z)|^2)/(1 - |z|^2) on the grid.
inline CheckReport check_schwarz_pick(std::span<const BlaschkeSample> samples, std::span<const complex> grid,
                                      double tol = 1e-10)
{
    CheckReport rep{"schwarz_pick", tol};
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto &f = samples[i];
        const double f0 = std::abs(f(0.0));
        for (const auto &z : grid) {
            const double r = std::abs(z);
            const complex fz = f(z);
            const double growth = (r + f0) / (1.0 + f0 * r) - std::abs(fz);
            const double deriv = (1.0 - std::norm(fz)) / (1.0 - r * r) - std::abs(f.derivative(z));
            const Witness w{{"sample", static_cast<double>(i)}, {"re_z", z.real()}, {"im_z", z.imag()}};
            rep.observe(growth, w);
            rep.observe(deriv, w);
        }
        ++rep.samples;
    }
    return rep.finish();
}

/// |a_n| <= (1 - |a_0|^2)/(1 + gamma) for 1 <= n <= n_max. With gamma = 0 this
/// is the classical coefficient bound.
inline CheckReport check_coefficient_bounds(std::span<const PowerSeries> series, double gamma, std::size_t n_max,
                                            double tol = closed_form_tolerance)
{
    const DiskDomain dom(gamma);
    CheckReport rep{"coefficient_bounds", tol};
    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto &p = series[i];
        const double bound = (1.0 - std::norm(p[0])) / (1.0 + dom.gamma());
        for (std::size_t n = 1; n <= n_max; ++n) {
            rep.observe(bound - std::abs(p[n]),
                        {{"sample", static_cast<double>(i)}, {"n", static_cast<double>(n)}, {"gamma", gamma}});
        }
        ++rep.samples;
    }
    return rep.finish();
}

/// Coefficient bounds for Blaschke samples transplanted to Omega_gamma.
inline CheckReport check_coefficient_bounds(std::span<const BlaschkeSample> samples, double gamma, std::size_t n_max,
                                            double tol = closed_form_tolerance)
{
    std::vector<PowerSeries> series;
    series.reserve(samples.size());
    for (const auto &s : samples) {
        series.push_back(s.series(n_max, gamma));
    }
    return check_coefficient_bounds(std::span<const PowerSeries>(series), gamma, n_max, tol);
}

/// |f^{(n)}(alpha)|/n! <= (1 - |f(alpha)|^2) / ((1-|alpha|)^{n-1} (1-|alpha|^2)),
/// derivatives taken from numeric_taylor of z -> f(alpha + z).
inline CheckReport check_ruscheweyh(std::span<const BlaschkeSample> samples, std::span<const complex> alphas,
                                    std::size_t n_max, double tol = numeric_tolerance)
{
    CheckReport rep{"ruscheweyh", tol};
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto &f = samples[i];
        bool any = false;
        for (const auto &alpha : alphas) {
            const double ra = std::abs(alpha);
            NumericTaylor t;
            try {
                t = numeric_taylor([&](complex z) { return f(alpha + z); }, n_max, 0.5 * (1.0 - ra));
            } catch (const std::exception &) {
                ++rep.skipped;
                continue;
            }
            any = true;
            const double fa = std::norm(f(alpha));
            for (std::size_t n = 1; n <= n_max; ++n) {
                const double bound =
                    (1.0 - fa) / (std::pow(1.0 - ra, static_cast<double>(n - 1)) * (1.0 - ra * ra));
                rep.observe(bound - std::abs(t.series[n]), {{"sample", static_cast<double>(i)},
                                                            {"re_alpha", alpha.real()},
                                                            {"im_alpha", alpha.imag()},
                                                            {"n", static_cast<double>(n)}});
            }
        }
        rep.samples += any ? 1 : 0;
    }
    return rep.finish();
}

/// Default alpha points for the higher-derivative lemma.
inline std::vector<complex> default_alpha_grid()
{
    return {0.0, 0.3, complex(0.0, -0.5), std::polar(0.6, std::numbers::pi / 3.0), -0.7};
}

/// sum_n |b_n|^2 r^n <= k^2 sum_n |a_n|^2 r^n on the radius grid.
inline CheckReport check_kaposha(const PowerSeries &h, const PowerSeries &g, double k, std::span<const double> r_grid,
                                 double tol = closed_form_tolerance)
{
    CheckReport rep{"kaposha", tol};
    for (double r : r_grid) {
        detail::CompensatedSum lhs;
        detail::CompensatedSum rhs;
        double rn = 1.0;
        const std::size_t n_max = std::max(h.order(), g.order());
        for (std::size_t n = 0; n <= n_max; ++n) {
            lhs.add(std::norm(g[n]) * rn);
            rhs.add(std::norm(h[n]) * rn);
            rn *= r;
        }
        rep.observe(k * k * rhs.value() - lhs.value(), {{"r", r}, {"k", k}});
    }
    rep.samples = 1;
    return rep.finish();
}

/// h from a sample and g with g' = k omega h', g(0) = 0, built by series
/// arithmetic; |omega| <= 1 so |g'| <= k |h'|.
inline HarmonicPair make_dilatation_pair(const BlaschkeSample &h, const BlaschkeSample &omega, double k,
                                         std::size_t order)
{
    auto hs = h.series(order);
    auto gp = scale(mul(derivative(hs), omega.series(order)), k);
    return {std::move(hs), integrate(gp)};
}

/// The recentred area functional from G(w) = g(gamma + (1-gamma) w), i.e.
/// b_n = alpha_n (1-gamma)^n: sum |b_n| (r/(1-gamma))^n + K sum n |b_n|^2 r^{2n}.
inline FunctionalValue functional_lemma1_recentred(const PowerSeries &G, double r, double gamma,
                                                   double K = theorem1_constant)
{
    const DiskDomain dom(gamma);
    return detail::combine(r, majorant(G, r / (1.0 - dom.gamma())), K, dirichlet_area(G, r));
}

/// Lemma for series about gamma: sum |alpha_n| r^n + K S/pi, where S is the
/// area of the image of D(gamma; r(1-gamma)), evaluated through the
/// recentred series b_n = alpha_n (1-gamma)^n at radius r.
inline FunctionalValue functional_lemma1(const PowerSeries &about_gamma, double r, double gamma,
                                         double K = theorem1_constant)
{
    return functional_lemma1_recentred(recenter_affine(about_gamma, gamma), r, gamma, K);
}

/// Shared driver: functional(series, gamma) + tail <= 1 for Blaschke samples
/// transplanted to Omega_gamma.
inline CheckReport check_functional_bound(std::string name, std::span<const BlaschkeSample> samples,
                                          std::span<const double> gammas, std::size_t order,
                                          const std::function<FunctionalValue(const PowerSeries &, double)> &functional,
                                          double tol = closed_form_tolerance)
{
    CheckReport rep{std::move(name), tol};
    for (double gamma : gammas) {
        for (std::size_t i = 0; i < samples.size(); ++i) {
            const auto s = samples[i].series(order, gamma);
            const auto v = functional(s, gamma);
            rep.observe(1.0 - v.total - v.tail_error,
                        {{"sample", static_cast<double>(i)}, {"gamma", gamma}, {"r", v.r}});
            ++rep.samples;
        }
    }
    return rep.finish();
}

/// The recentred area inequality on random g in B(D), about gamma, at
/// r = (1-gamma^2)/(3+gamma).
inline CheckReport check_lemma1(std::span<const BlaschkeSample> samples, std::span<const double> gammas,
                                std::size_t order = 1024, double tol = closed_form_tolerance)
{
    CheckReport rep{"lemma1_recentred_area", tol};
    for (double gamma : gammas) {
        const double r = internals::lemma1_radius(gamma);
        for (std::size_t i = 0; i < samples.size(); ++i) {
            // series of w -> g(gamma + (1-gamma) w); coefficients about gamma
            // would overflow at high order
            const auto v = functional_lemma1_recentred(samples[i].series(order, gamma), r, gamma);
            rep.observe(1.0 - v.total - v.tail_error, {{"sample", static_cast<double>(i)}, {"gamma", gamma}});
            ++rep.samples;
        }
    }
    return rep.finish();
}

/// Both readings of the area term agree: area of f(D(0; rho)) from the series
/// of f, and area of g(D(gamma; rho)) for g = f o phi via numerically
/// extracted coefficients of g about gamma, recentred.
inline CheckReport check_area_readings(std::span<const BlaschkeSample> samples, std::span<const double> gammas,
                                       std::size_t order = 24, double tol = numeric_tolerance)
{
    CheckReport rep{"area_readings", tol};
    for (double gamma : gammas) {
        const double rho = fournier_ruscheweyh_radius(gamma) * (1.0 - gamma);
        for (std::size_t i = 0; i < samples.size(); ++i) {
            const auto &g = samples[i];
            const auto f = g.series(order, gamma);
            const auto alpha = numeric_taylor([&](complex w) { return g(gamma + w); }, order, 0.5 * (1.0 - gamma));
            const auto G = recenter_affine(truncate(alpha.series, order), gamma);
            const double direct = dirichlet_area(truncate(f, order), rho).value;
            const double lemma = dirichlet_area(PowerSeries({G.coeffs().begin(), G.coeffs().end()}), rho).value;
            rep.observe(-std::abs(direct - lemma), {{"sample", static_cast<double>(i)}, {"gamma", gamma}});
            ++rep.samples;
        }
    }
    return rep.finish();
}

/// Parseval area never exceeds the area bound (1-|a_0|^2)^2 r^2/(1-r^2)^2.
inline CheckReport check_area_bound(std::span<const BlaschkeSample> samples, std::span<const double> r_grid,
                                    std::size_t order = 1024, double tol = closed_form_tolerance)
{
    CheckReport rep{"area_upper_bound", tol};
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto s = samples[i].series(order);
        for (double r : r_grid) {
            const auto area = dirichlet_area(s, r);
            rep.observe(area_upper_bound(std::abs(s[0]), r) - area.value - area.tail_error,
                        {{"sample", static_cast<double>(i)}, {"r", r}});
        }
        ++rep.samples;
    }
    return rep.finish();
}

/// Functional values on the extremal series against the closed forms
/// 1 - (1-a) Phi_1(r), 1 - (1-a)/(1-a gamma) Phi_2(r) and
/// 1 - (1-a)/(1-a gamma) Phi_4(r). Requires a > gamma.
inline CheckReport check_identity_majorant_vs_phi(double a, double gamma, double r, double k = 1.0,
                                                  double lambda = 1.0, double K = theorem1_constant,
                                                  std::size_t order = default_order, double tol = 1e-10)
{
    CheckReport rep{"identity_majorant_vs_phi", tol};
    const MobiusFamilyParams p{a, gamma};
    if (!p.a_exceeds_gamma()) {
        throw std::domain_error("check_identity_majorant_vs_phi: need a > gamma");
    }
    const auto s = mobius_family_coeffs(p, order);
    const double pre = (1.0 - a) / (1.0 - a * gamma);
    const Witness w{{"a", a}, {"gamma", gamma}, {"r", r}, {"k", k}, {"lambda", lambda}};

    const auto v1 = functional_theorem1(s, r, gamma, K);
    rep.observe(-std::abs(v1.total - (1.0 - (1.0 - a) * internals::phi_thm1(r, a, gamma, K))), w);

    const auto v2 = functional_theorem2(s, r);
    rep.observe(-std::abs(v2.total - (1.0 - pre * internals::phi_thm2(r, a, gamma))), w);

    const auto hg = harmonic_extremal({a, gamma, k, lambda}, order);
    const auto v4 = functional_theorem4(hg.h, hg.g, r);
    rep.observe(-std::abs(v4.total - (1.0 - pre * internals::phi_thm4(r, a, gamma, k, lambda))), w);

    rep.samples = 1;
    return rep.finish();
}

/// Random triples with gamma in [0, 0.9], a in (gamma, 0.999], r in (0, 0.9].
inline CheckReport check_identity_random(std::uint64_t seed, std::size_t count, std::size_t order = default_order)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    CheckReport total{"identity_majorant_vs_phi", 1e-10};
    for (std::size_t i = 0; i < count; ++i) {
        const double gamma = 0.9 * unit(rng);
        const double a = gamma + (0.999 - gamma) * (0.001 + 0.999 * unit(rng));
        const double r = 0.9 * (0.001 + 0.999 * unit(rng));
        const double k = unit(rng);
        const double lambda = unit(rng);
        total = merge(total, check_identity_majorant_vs_phi(a, gamma, r, k, lambda, theorem1_constant, order));
    }
    return total.finish();
}

namespace detail {

inline std::vector<double> linspace(double lo, double hi, std::size_t n)
{
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return v;
}

// slack = sign * (f(x_{i+1}) - f(x_i)) for consecutive grid points.
template <class F>
void observe_monotone(CheckReport &rep, std::span<const double> xs, F &&f, double sign, Witness base)
{
    double prev = f(xs[0]);
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const double cur = f(xs[i]);
        base["x"] = xs[i];
        rep.observe(sign * (cur - prev), base);
        prev = cur;
    }
    ++rep.samples;
}

} // namespace detail

/// Sign and monotonicity claims about the proof-internal functions, each on
/// grids of 10^3 points per scalar argument.
inline std::vector<CheckReport> check_internal_claims(std::size_t n = 1000)
{
    using internals::A_gamma, internals::F_lemma1, internals::F_thm3, internals::lemma1_radius,
        internals::phi_thm1, internals::phi_thm2, internals::phi_thm4, internals::psi_lemma1, internals::psi_thm2,
        internals::u_coefficients, internals::u_thm2, internals::u_thm2_prime, internals::u_thm2_second;
    const double K = theorem1_constant;
    const std::vector<double> gammas{0.0, 0.25, 0.5, 0.75, 0.9};
    const std::vector<double> unit = detail::linspace(0.0, 1.0, n);
    std::vector<CheckReport> out;

    {
        CheckReport rep{"psi_lemma1_increasing", 1e-12};
        for (double g : gammas) {
            const auto rs = detail::linspace(0.0, 0.999 * (1.0 - g), n);
            for (double a0 : {0.0, 0.5, 0.9, 1.0}) {
                detail::observe_monotone(rep, rs, [&](double r) { return psi_lemma1(r, a0, g, K); }, 1.0,
                                         {{"gamma", g}, {"alpha0", a0}});
            }
        }
        out.push_back(rep.finish());
    }
    {
        // Psi(r_0) = (1 - x^2)/2 F(x)
        CheckReport rep{"psi_lemma1_at_r0", 1e-12};
        for (double g : gammas) {
            for (double x : unit) {
                const double lhs = psi_lemma1(lemma1_radius(g), x, g, K);
                rep.observe(-std::abs(lhs - 0.5 * (1.0 - x * x) * F_lemma1(x, g, K)), {{"gamma", g}, {"x", x}});
            }
            ++rep.samples;
        }
        out.push_back(rep.finish());
    }
    {
        CheckReport rep{"f_lemma1_increasing", 1e-12};
        for (double g : gammas) {
            for (double k : {0.5, K}) {
                detail::observe_monotone(rep, unit, [&](double x) { return F_lemma1(x, g, k); }, 1.0,
                                         {{"gamma", g}, {"K", k}});
            }
        }
        out.push_back(rep.finish());
    }
    {
        CheckReport rep{"f_lemma1_nonpositive", 1e-12};
        for (std::size_t j = 0; j < n; ++j) {
            const double g = static_cast<double>(j) / static_cast<double>(n);
            for (double x : unit) {
                rep.observe(-F_lemma1(x, g, K), {{"gamma", g}, {"x", x}});
            }
            ++rep.samples;
        }
        out.push_back(rep.finish());
    }
    {
        CheckReport rep{"a_gamma_decreasing", 1e-12};
        const auto gs = detail::linspace(0.0, 1.0 - 1e-9, n);
        detail::observe_monotone(rep, gs, [](double g) { return A_gamma(g); }, -1.0, {});
        rep.observe(-std::abs(A_gamma(0.0) - 0.375), {{"gamma", 0.0}});
        rep.observe(1e-6 - std::abs(A_gamma(1.0 - 1e-9)), {{"gamma", 1.0 - 1e-9}});
        out.push_back(rep.finish());
    }
    {
        CheckReport rep{"phi_decreasing", 1e-12};
        const auto rs = detail::linspace(0.0, 0.999, n);
        for (double g : gammas) {
            for (double a : {0.3, 0.6, 0.9, 0.99, 1.0 - std::ldexp(1.0, -14)}) {
                const Witness w{{"gamma", g}, {"a", a}};
                auto w1 = w;
                w1["variant"] = 1;
                detail::observe_monotone(rep, rs, [&](double r) { return phi_thm1(r, a, g); }, -1.0, w1);
                auto w2 = w;
                w2["variant"] = 2;
                detail::observe_monotone(rep, rs, [&](double r) { return phi_thm2(r, a, g); }, -1.0, w2);
                for (double k : {0.0, 0.5, 1.0}) {
                    auto w4 = w;
                    w4["variant"] = 4;
                    w4["k"] = k;
                    detail::observe_monotone(rep, rs, [&](double r) { return phi_thm4(r, a, g, k, 1.0); }, -1.0, w4);
                }
            }
        }
        out.push_back(rep.finish());
    }
    {
        // At r = r_0 the deficit functions vanish like O(1 - a). The 1e-3
        // threshold at a = 1 - 2^-14 holds for gamma <= 1/2 only; the
        // constant grows like (1-gamma)^-2, so all gammas get a rate check.
        CheckReport rep{"phi_limit_at_r0", 0.0};
        CheckReport rate{"phi_rate_at_r0", 0.0};
        const double a13 = 1.0 - std::ldexp(1.0, -13);
        const double a14 = 1.0 - std::ldexp(1.0, -14);
        for (double g : gammas) {
            const double r0 = fournier_ruscheweyh_radius(g);
            std::vector<std::pair<Witness, std::function<double(double)>>> phis{
                {{{"gamma", g}, {"variant", 1}}, [&](double a) { return phi_thm1(r0, a, g); }},
                {{{"gamma", g}, {"variant", 2}}, [&](double a) { return phi_thm2(r0, a, g); }}};
            for (double k : {0.0, 0.5, 1.0}) {
                const double rk = harmonic_radius(g, k);
                phis.push_back({{{"gamma", g}, {"variant", 4}, {"k", k}},
                                [=](double a) { return phi_thm4(rk, a, g, k, 1.0); }});
            }
            for (const auto &[w, phi] : phis) {
                if (g <= 0.5) {
                    rep.observe(1e-3 - std::abs(phi(a14)), w);
                }
                // halving 1 - a should roughly halve |Phi|
                rate.observe(0.75 * std::abs(phi(a13)) - std::abs(phi(a14)), w);
            }
            rep.samples += g <= 0.5 ? 1 : 0;
            ++rate.samples;
        }
        out.push_back(rep.finish());
        out.push_back(rate.finish());
    }
    {
        CheckReport concave{"u_thm2_concave", 1e-12};
        CheckReport increasing{"u_thm2_increasing", 1e-12};
        CheckReport bounded{"u_thm2_bounded", 1e-12};
        for (double g : gammas) {
            const double rho = fournier_ruscheweyh_radius(g);
            for (std::size_t j = 1; j <= 10; ++j) {
                const double r = rho * static_cast<double>(j) / 10.0;
                const auto c = u_coefficients(r, g);
                const double top = u_thm2(1.0, c);
                for (double a : unit) {
                    const Witness w{{"gamma", g}, {"r", r}, {"a", a}};
                    concave.observe(-u_thm2_second(a, c), w);
                    increasing.observe(u_thm2_prime(a, c), w);
                    bounded.observe(top - u_thm2(a, c), w);
                }
                concave.samples += 1;
                increasing.samples += 1;
                bounded.samples += 1;
                bounded.observe(-std::abs(top - 1.0), {{"gamma", g}, {"r", r}, {"a", 1.0}});
            }
        }
        out.push_back(concave.finish());
        out.push_back(increasing.finish());
        out.push_back(bounded.finish());
    }
    {
        CheckReport mono{"f_thm3_nonincreasing", 1e-12};
        detail::observe_monotone(mono, unit, [](double x) { return F_thm3(x); }, -1.0, {});
        out.push_back(mono.finish());
        CheckReport pos{"f_thm3_nonnegative", 1e-12};
        for (double x : unit) {
            pos.observe(F_thm3(x), {{"x", x}});
        }
        pos.samples = 1;
        pos.observe(-std::abs(F_thm3(0.0) - 3.0), {{"x", 0.0}});
        pos.observe(-std::abs(F_thm3(1.0)), {{"x", 1.0}});
        out.push_back(pos.finish());
    }
    {
        CheckReport rep{"psi_thm2_root", 1e-14};
        for (double g : detail::linspace(0.0, 0.99, 100)) {
            rep.observe(-std::abs(psi_thm2(fournier_ruscheweyh_radius(g), g)), {{"gamma", g}});
            ++rep.samples;
        }
        out.push_back(rep.finish());
    }
    return out;
}

/// Options for the full verification batch.
struct VerifyOptions {
    std::uint64_t seed = 42;
    std::size_t samples = 200;
    std::size_t order = 1024;
};

/// Every check, in a fixed order.
inline std::vector<CheckReport> run_all_checks(const VerifyOptions &opt = {})
{
    std::mt19937_64 rng(opt.seed);
    std::vector<BlaschkeSample> samples;
    for (std::size_t i = 0; i < opt.samples; ++i) {
        samples.push_back(random_blaschke(rng));
    }
    const std::span<const BlaschkeSample> all(samples);
    const auto first = [&](std::size_t n) { return all.first(std::min(n, all.size())); };
    const std::vector<double> gammas{0.0, 0.25, 0.5, 0.75, 0.9};
    const std::vector<double> zero{0.0};
    std::vector<CheckReport> out;

    out.push_back(check_schwarz_pick(all, polar_grid()));

    {
        CheckReport coeff{"coefficient_bounds"};
        for (double g : gammas) {
            coeff = merge(coeff, check_coefficient_bounds(first(100), g, 16));
        }
        out.push_back(coeff);
    }

    out.push_back(check_ruscheweyh(first(100), default_alpha_grid(), 8));

    {
        CheckReport kp{"kaposha"};
        const auto rs = detail::linspace(0.0, 0.9, 19);
        for (std::size_t i = 0; i + 1 < std::min<std::size_t>(all.size(), 201); i += 2) {
            const double k = 0.25 + 0.75 * static_cast<double>(i % 4) / 3.0;
            const auto hg = make_dilatation_pair(all[i], all[i + 1], k, 256);
            kp = merge(kp, check_kaposha(hg.h, hg.g, k, rs));
        }
        out.push_back(kp);
    }

    out.push_back(check_area_bound(first(100), std::vector<double>{0.1, 0.2, 1.0 / 3.0, 0.5, 0.7, 0.9}, opt.order));
    out.push_back(check_lemma1(first(100), gammas, opt.order));
    out.push_back(check_area_readings(first(50), gammas));

    out.push_back(check_functional_bound("theorem1_samples", first(100), gammas, opt.order,
                                         [](const PowerSeries &s, double g) {
                                             return functional_theorem1(s, fournier_ruscheweyh_radius(g), g);
                                         }));
    out.push_back(check_functional_bound("theorem2_samples", all, zero, opt.order, [](const PowerSeries &s, double) {
        return functional_theorem2(s, 1.0 / 3.0);
    }));
    out.push_back(check_functional_bound("theorem3_samples", all, zero, opt.order, [](const PowerSeries &s, double) {
        return functional_theorem3(s, theorem3_radius(1.0), 1.0);
    }));

    out.push_back(check_identity_random(opt.seed, 100));

    for (auto &r : check_internal_claims()) {
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace bohr
