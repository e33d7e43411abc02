#pragma once

// Sharp-radius solvers: bisection for the largest admissible radius of one
// function and the infimum of those radii over an extremal family.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bohr/extremals.hpp"
#include "bohr/functionals.hpp"

namespace bohr {

/// Parameters of one member of an extremal family.
struct FamilyParams {
    double a = 0.5;
    double gamma = 0.0;
    double k = 0.0;
    double lambda = 1.0;

    friend bool operator==(const FamilyParams &, const FamilyParams &) = default;
};

enum class RadiusStatus {
    constrained,   // the functional exceeds 1 just above `radius`
    unconstrained, // admissible on the whole search bracket
    infeasible,    // already exceeds 1 at r = 0
};

inline std::string_view to_string(RadiusStatus s) noexcept
{
    switch (s) {
    case RadiusStatus::constrained:
        return "constrained";
    case RadiusStatus::unconstrained:
        return "unconstrained";
    case RadiusStatus::infeasible:
        return "infeasible";
    }
    return "unknown";
}

struct RadiusResult {
    double radius = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    double tol = 0.0;
    int iterations = 0;
    RadiusStatus status = RadiusStatus::constrained;
    std::optional<FamilyParams> witness;
    /// |r(last grid point) - r(second to last)|, an estimate of the distance
    /// to the a -> 1 limit for geometric a-grids.
    double limit_error = 0.0;
    /// Adjacent grid pairs where the radius increased along the grid.
    int monotone_violations = 0;
    std::size_t evaluations = 0;
};

/// Upper end of the bisection bracket [0, 1 - 1e-6].
inline constexpr double solver_upper = 1.0 - 1e-6;
inline constexpr double default_radius_tol = 1e-10;

/// Largest r in [0, 1 - 1e-6] with F(r) + tail_error <= 1, for F
/// nondecreasing in r. Flat stretches where F == 1 resolve to their right end.
template <class Evaluator>
RadiusResult bohr_radius_of_function(Evaluator &&f, double tol = default_radius_tol,
                                     std::optional<FamilyParams> witness = std::nullopt)
{
    if (!(tol > 0.0)) {
        throw std::invalid_argument("bohr_radius_of_function: tol must be positive");
    }
    RadiusResult res;
    res.tol = tol;
    res.witness = witness;
    const auto ok = [&](double r) {
        ++res.evaluations;
        const FunctionalValue v = f(r);
        return v.total + v.tail_error <= 1.0;
    };
    if (!ok(0.0)) {
        res.status = RadiusStatus::infeasible;
        return res;
    }
    double lo = 0.0;
    double hi = solver_upper;
    if (ok(hi)) {
        res.status = RadiusStatus::unconstrained;
        res.radius = res.lo = res.hi = hi;
        return res;
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (ok(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
        ++res.iterations;
    }
    res.radius = lo;
    res.lo = lo;
    res.hi = hi;
    return res;
}

/// Minimum of the per-function radii over `grid`, followed by one local
/// refinement pass at the midpoints between the argmin and its grid
/// neighbours. `make` maps FamilyParams to an evaluator r -> FunctionalValue.
template <class Factory>
RadiusResult family_infimum_radius(Factory &&make, std::span<const FamilyParams> grid,
                                   double tol = default_radius_tol)
{
    if (grid.empty()) {
        throw std::invalid_argument("family_infimum_radius: empty family");
    }
    std::vector<RadiusResult> per;
    per.reserve(grid.size());
    std::size_t evaluations = 0;
    for (const auto &p : grid) {
        per.push_back(bohr_radius_of_function(make(p), tol, p));
        evaluations += per.back().evaluations;
        if (per.back().status == RadiusStatus::infeasible) {
            per.back().evaluations = evaluations;
            return per.back();
        }
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < per.size(); ++i) {
        if (per[i].radius < per[best].radius) {
            best = i;
        }
    }
    int violations = 0;
    for (std::size_t i = 0; i + 1 < per.size(); ++i) {
        if (per[i + 1].radius > per[i].radius + tol) {
            ++violations;
        }
    }
    const double limit_error =
        per.size() >= 2 ? std::abs(per[per.size() - 1].radius - per[per.size() - 2].radius) : 0.0;

    RadiusResult result = per[best];
    const auto midpoint = [](const FamilyParams &x, const FamilyParams &y) {
        return FamilyParams{0.5 * (x.a + y.a), 0.5 * (x.gamma + y.gamma), 0.5 * (x.k + y.k),
                            0.5 * (x.lambda + y.lambda)};
    };
    std::vector<FamilyParams> refined;
    if (best > 0) {
        refined.push_back(midpoint(grid[best - 1], grid[best]));
    }
    if (best + 1 < grid.size()) {
        refined.push_back(midpoint(grid[best], grid[best + 1]));
    }
    for (const auto &p : refined) {
        auto r = bohr_radius_of_function(make(p), tol, p);
        evaluations += r.evaluations;
        if (r.status == RadiusStatus::infeasible) {
            r.evaluations = evaluations;
            return r;
        }
        if (r.radius < result.radius) {
            result = r;
        }
    }
    result.limit_error = limit_error;
    result.monotone_violations = violations;
    result.evaluations = evaluations;
    return result;
}

// --- theorem catalogue --------------------------------------------------

enum class Theorem { A, B, T1, T2, T3, T4, Corollary };

inline Theorem parse_theorem(std::string_view s)
{
    if (s == "A") return Theorem::A;
    if (s == "B") return Theorem::B;
    if (s == "1") return Theorem::T1;
    if (s == "2") return Theorem::T2;
    if (s == "3") return Theorem::T3;
    if (s == "4") return Theorem::T4;
    if (s == "corollary") return Theorem::Corollary;
    throw std::invalid_argument("unknown theorem '" + std::string(s) + "'");
}

/// Identifier used in CSV output.
inline std::string_view functional_id(Theorem t) noexcept
{
    switch (t) {
    case Theorem::A:
        return "classical";
    case Theorem::B:
        return "majorant";
    case Theorem::T1:
        return "area";
    case Theorem::T2:
        return "norm";
    case Theorem::T3:
        return "lambda-area";
    case Theorem::T4:
        return "harmonic";
    case Theorem::Corollary:
        return "harmonic-k1";
    }
    return "unknown";
}

/// lambda(Omega_gamma) = 1/(1+gamma).
inline double omega_lambda(double gamma) noexcept { return 1.0 / (1.0 + gamma); }

/// (1+gamma)/(3+gamma)
inline double fournier_ruscheweyh_radius(double gamma) noexcept { return (1.0 + gamma) / (3.0 + gamma); }

/// (1+gamma)/(3+2k+gamma)
inline double harmonic_radius(double gamma, double k) noexcept
{
    return (1.0 + gamma) / (3.0 + 2.0 * k + gamma);
}

/// Closed-form radius for a theorem. For T3, `lambda` is the coefficient
/// constant; for T4 it is ignored (the radius does not depend on the mix).
inline double closed_form_radius(Theorem t, double gamma, double k = 0.0, double lambda = 1.0)
{
    switch (t) {
    case Theorem::A:
        return 1.0 / 3.0;
    case Theorem::B:
    case Theorem::T1:
    case Theorem::T2:
        return fournier_ruscheweyh_radius(gamma);
    case Theorem::T3:
        return theorem3_radius(lambda);
    case Theorem::T4:
        return harmonic_radius(gamma, k);
    case Theorem::Corollary:
        return harmonic_radius(gamma, 1.0);
    }
    throw std::invalid_argument("closed_form_radius: unknown theorem");
}

/// Evaluator factory for the extremal family of a theorem. The series is
/// built once per family member.
inline std::function<std::function<FunctionalValue(double)>(const FamilyParams &)>
theorem_family_evaluator(Theorem t, double K = theorem1_constant, std::size_t order = default_order)
{
    return [t, K, order](const FamilyParams &p) -> std::function<FunctionalValue(double)> {
        switch (t) {
        case Theorem::A:
        case Theorem::B: {
            auto s = mobius_family_coeffs({p.a, t == Theorem::A ? 0.0 : p.gamma}, order);
            return [s = std::move(s)](double r) { return functional_majorant(s, r); };
        }
        case Theorem::T1: {
            auto s = mobius_family_coeffs({p.a, p.gamma}, order);
            return [s = std::move(s), g = p.gamma, K](double r) { return functional_theorem1(s, r, g, K); };
        }
        case Theorem::T2: {
            auto s = mobius_family_coeffs({p.a, p.gamma}, order);
            return [s = std::move(s)](double r) { return functional_theorem2(s, r); };
        }
        case Theorem::T3: {
            auto s = mobius_family_coeffs({p.a, p.gamma}, order);
            return [s = std::move(s), l = p.lambda](double r) { return functional_theorem3(s, r, l); };
        }
        case Theorem::T4:
        case Theorem::Corollary: {
            const double k = t == Theorem::Corollary ? 1.0 : p.k;
            auto hg = harmonic_extremal({p.a, p.gamma, k, p.lambda}, order);
            return [hg = std::move(hg)](double r) { return functional_theorem4(hg.h, hg.g, r); };
        }
        }
        throw std::invalid_argument("theorem_family_evaluator: unknown theorem");
    };
}

/// The geometric a-grid a_j = 1 - 2^{-j} at fixed (gamma, k, lambda).
inline std::vector<FamilyParams> mobius_family_grid(double gamma, double k = 0.0, double lambda = 1.0,
                                                    int jmax = 14)
{
    std::vector<FamilyParams> g;
    for (double a : sharpness_a_grid(jmax)) {
        g.push_back({a, gamma, k, lambda});
    }
    return g;
}

} // namespace bohr
