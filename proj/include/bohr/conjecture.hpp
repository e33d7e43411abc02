#pragma once

// Explorer for the best constant t(gamma) that can replace 8/9 in the
// area-improved inequality. K_hat is the infimum over the extremal family of
// (1 - M(r)) / (S_{r(1-gamma)} / pi), evaluated in closed form with the
// factor (1 - a) cancelled so that a close to 1 stays accurate.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "bohr/extremals.hpp"
#include "bohr/functionals.hpp"
#include "bohr/samples.hpp"
#include "bohr/solver.hpp"

namespace bohr {

struct ConjectureOptions {
    /// Coarse grid size in each of (a, r).
    std::size_t grid = 64;
    int refinements = 3;
    /// Window shrink factor per refinement.
    double shrink = 4.0;
    double r_min = 1e-3;
    /// a is parametrised by s = -log2(1 - a) in [s_min, s_max].
    double s_min = 0.25;
    double s_max = 14.0;
    /// Random Blaschke samples added to the witness family (0 = off).
    std::size_t augment_samples = 0;
    std::uint64_t seed = 42;
    std::size_t order = 1024;
};

struct GridStats {
    double coarse_min = 0.0;
    /// Minimum after each refinement level.
    std::vector<double> level_min;
    std::size_t evaluations = 0;
    /// Estimate from the Moebius family alone.
    double family_min = 0.0;
};

struct ConstantEstimate {
    double gamma = 0.0;
    double K_hat = 0.0;
    double a_witness = 0.0;
    double r_witness = 0.0;
    int refinements = 0;
    /// Index of the random sample attaining K_hat, if augmentation won.
    std::optional<std::size_t> sample_index;
    GridStats grid_stats;
};

inline double a_from_s(double s) { return 1.0 - std::exp2(-s); }
inline double s_from_a(double a) { return -std::log2(1.0 - a); }

/// (1 - M(r)) / (S/pi) on the extremal family at (a, gamma, r), r > 0.
inline double extremal_constant_ratio(double a, double gamma, double r)
{
    const MobiusFamilyParams p{a, gamma};
    p.validate();
    if (!(r > 0.0 && r < 1.0)) {
        throw std::domain_error("extremal_constant_ratio: r must lie in (0, 1)");
    }
    const double c = p.denom();
    const double g1 = 1.0 - gamma;
    const double g4 = g1 * g1 * g1 * g1;
    const double lin = c - a * g1 * r;
    const double quad = c * c - a * a * g4 * r * r;
    // (1 - |A_0|)/(1 - a) and (1 - a^2)(1-gamma) r / (c (c - d r)) / (1 - a)
    const double head = a >= gamma ? (1.0 + gamma) / c : (1.0 + a) * (1.0 - gamma) / ((1.0 - a) * c);
    const double deficit = head - (1.0 + a) * g1 * r / (c * lin);
    const double area = (1.0 - a) * (1.0 + a) * (1.0 + a) * g4 * r * r / (quad * quad);
    return deficit / area;
}

namespace detail {

struct Cell {
    double value = std::numeric_limits<double>::infinity();
    double s = 0.0;
    double r = 0.0;
};

inline Cell scan_window(double gamma, double s_lo, double s_hi, double r_lo, double r_hi, std::size_t n,
                        std::size_t &evaluations)
{
    Cell best;
    for (std::size_t i = 0; i < n; ++i) {
        const double s = n == 1 ? s_lo : s_lo + (s_hi - s_lo) * static_cast<double>(i) / static_cast<double>(n - 1);
        const double a = a_from_s(s);
        for (std::size_t j = 0; j < n; ++j) {
            const double r =
                n == 1 ? r_lo : r_lo + (r_hi - r_lo) * static_cast<double>(j) / static_cast<double>(n - 1);
            const double v = extremal_constant_ratio(a, gamma, r);
            ++evaluations;
            if (v < best.value) {
                best = {v, s, r};
            }
        }
    }
    return best;
}

} // namespace detail

/// Minimum over the random samples of (1 - M(r)) / (S/pi) on an r grid.
struct SampleWitness {
    double value = std::numeric_limits<double>::infinity();
    std::size_t index = 0;
    double r = 0.0;
};

inline SampleWitness sample_constant_min(std::span<const BlaschkeSample> samples, double gamma,
                                         std::span<const double> r_grid, std::size_t order)
{
    SampleWitness best;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto s = samples[i].series(order, gamma);
        for (double r : r_grid) {
            const auto m = majorant(s, r);
            const auto area = dirichlet_area(s, r * (1.0 - gamma));
            if (!(area.value > 1e-300)) {
                continue;
            }
            const double v = (1.0 - m.value - m.tail_error) / (area.value + area.tail_error);
            if (v < best.value) {
                best = {v, i, r};
            }
        }
    }
    return best;
}

inline ConstantEstimate estimate_constant(double gamma, const ConjectureOptions &opt = {})
{
    const DiskDomain dom(gamma);
    if (opt.grid < 2 || !(opt.shrink > 1.0) || opt.refinements < 0) {
        throw std::invalid_argument("estimate_constant: need grid >= 2, shrink > 1, refinements >= 0");
    }
    const double rho = fournier_ruscheweyh_radius(dom.gamma());
    if (!(opt.r_min > 0.0 && opt.r_min < rho) || !(opt.s_min > 0.0 && opt.s_min < opt.s_max)) {
        throw std::invalid_argument("estimate_constant: empty search window");
    }

    ConstantEstimate est;
    est.gamma = gamma;
    std::size_t evals = 0;
    auto best = detail::scan_window(gamma, opt.s_min, opt.s_max, opt.r_min, rho, opt.grid, evals);
    est.grid_stats.coarse_min = best.value;

    double ws = opt.s_max - opt.s_min;
    double wr = rho - opt.r_min;
    for (int level = 0; level < opt.refinements; ++level) {
        ws /= opt.shrink;
        wr /= opt.shrink;
        const double s_lo = std::max(opt.s_min, best.s - 0.5 * ws);
        const double s_hi = std::min(opt.s_max, best.s + 0.5 * ws);
        const double r_lo = std::max(opt.r_min, best.r - 0.5 * wr);
        const double r_hi = std::min(rho, best.r + 0.5 * wr);
        const auto cell = detail::scan_window(gamma, s_lo, s_hi, r_lo, r_hi, opt.grid, evals);
        if (cell.value < best.value) {
            best = cell;
        }
        est.grid_stats.level_min.push_back(best.value);
        ++est.refinements;
    }
    est.K_hat = best.value;
    est.a_witness = a_from_s(best.s);
    est.r_witness = best.r;
    est.grid_stats.family_min = best.value;

    if (opt.augment_samples > 0) {
        const auto samples = random_blaschke_samples(opt.seed, opt.augment_samples);
        std::vector<double> rs(opt.grid);
        for (std::size_t j = 0; j < opt.grid; ++j) {
            rs[j] = opt.r_min + (rho - opt.r_min) * static_cast<double>(j) / static_cast<double>(opt.grid - 1);
        }
        const auto w = sample_constant_min(samples, gamma, rs, opt.order);
        evals += samples.size() * rs.size();
        if (w.value < est.K_hat) {
            est.K_hat = w.value;
            est.sample_index = w.index;
            est.a_witness = std::numeric_limits<double>::quiet_NaN();
            est.r_witness = w.r;
        }
    }
    est.grid_stats.evaluations = evals;
    return est;
}

/// functional_theorem1 at the witness of `est` with constant K. Augmented
/// witnesses are rebuilt from the same seed.
inline FunctionalValue witness_functional(const ConstantEstimate &est, double K, const ConjectureOptions &opt = {})
{
    if (est.sample_index) {
        const auto samples = random_blaschke_samples(opt.seed, *est.sample_index + 1);
        return functional_theorem1(samples[*est.sample_index].series(opt.order, est.gamma), est.r_witness,
                                   est.gamma, K);
    }
    return functional_theorem1(mobius_family_coeffs({est.a_witness, est.gamma}, opt.order), est.r_witness,
                               est.gamma, K);
}

struct SweepResult {
    std::vector<ConstantEstimate> estimates;
    /// i such that K_hat(gamma_{i+1}) > K_hat(gamma_i), against the
    /// conjectured decrease of t(gamma). Reported, not asserted.
    std::vector<std::size_t> nonmonotone;
};

inline SweepResult sweep_conjecture(std::span<const double> gammas, const ConjectureOptions &opt = {})
{
    SweepResult res;
    for (double g : gammas) {
        res.estimates.push_back(estimate_constant(g, opt));
    }
    for (std::size_t i = 0; i + 1 < res.estimates.size(); ++i) {
        if (res.estimates[i + 1].K_hat > res.estimates[i].K_hat) {
            res.nonmonotone.push_back(i);
        }
    }
    return res;
}

} // namespace bohr
