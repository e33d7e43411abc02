#pragma once

// Random bounded analytic functions: finite Blaschke products with zeros in
// |z| <= 0.9, a unimodular rotation and an optional scale in [1/2, 1].

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "bohr/series.hpp"

namespace bohr {

struct BlaschkeSample {
    std::vector<complex> zeros;
    complex rotation{1.0, 0.0};
    double scale = 1.0;

    [[nodiscard]] complex operator()(complex z) const noexcept
    {
        complex v = scale * rotation;
        for (const auto &z0 : zeros) {
            v *= (z - z0) / (1.0 - std::conj(z0) * z);
        }
        return v;
    }

    [[nodiscard]] complex derivative(complex z) const noexcept
    {
        // product rule over the factors
        complex total{};
        for (std::size_t k = 0; k < zeros.size(); ++k) {
            const complex z0 = zeros[k];
            const complex den = 1.0 - std::conj(z0) * z;
            complex term = (1.0 - std::norm(z0)) / (den * den);
            for (std::size_t j = 0; j < zeros.size(); ++j) {
                if (j != k) {
                    term *= (z - zeros[j]) / (1.0 - std::conj(zeros[j]) * z);
                }
            }
            total += term;
        }
        return scale * rotation * total;
    }

    /// Taylor series about 0 of w -> f((1-gamma) w + gamma), i.e. the sample
    /// transplanted to a bounded analytic function on Omega_gamma. The tail
    /// is the Cauchy estimate on a circle between |w| = 1 and the nearest pole.
    [[nodiscard]] PowerSeries series(std::size_t order, double gamma = 0.0) const
    {
        const DiskDomain dom(gamma);
        const double g = dom.gamma();
        std::vector<complex> c(order + 1, complex{});
        c[0] = scale * rotation;
        double nearest_pole = std::numeric_limits<double>::infinity();
        for (const auto &z0 : zeros) {
            // factor = (p0 + p1 w) / (s - t w)
            const complex p0 = g - z0;
            const double p1 = 1.0 - g;
            const complex s = 1.0 - std::conj(z0) * g;
            const complex t = std::conj(z0) * (1.0 - g);
            // s G_n - t G_{n-1} = p0 F_n + p1 F_{n-1}
            complex prev_f{};
            complex prev_g{};
            for (std::size_t n = 0; n <= order; ++n) {
                const complex fn = c[n];
                const complex gn = (p0 * fn + p1 * prev_f + t * prev_g) / s;
                prev_f = fn;
                prev_g = gn;
                c[n] = gn;
            }
            if (std::abs(t) > 0.0) {
                nearest_pole = std::min(nearest_pole, std::abs(s) / std::abs(t));
            }
        }
        if (!std::isfinite(nearest_pole)) {
            return truncate(PowerSeries(std::move(c)), order);
        }
        const double radius = std::sqrt(nearest_pole);
        double bound = scale;
        for (const auto &z0 : zeros) {
            const double p0 = std::abs(g - z0);
            const double s = std::abs(1.0 - std::conj(z0) * g);
            const double t = std::abs(z0) * (1.0 - g);
            bound *= (p0 + (1.0 - g) * radius) / (s - t * radius);
        }
        return PowerSeries(std::move(c), GeometricTail{1.0 / radius, bound});
    }
};

/// Random sample: 1..max_factors zeros uniform in |z| <= max_zero, uniform
/// rotation, and with probability 1/2 a scale drawn from [1/2, 1].
inline BlaschkeSample random_blaschke(std::mt19937_64 &rng, int max_factors = 4, double max_zero = 0.9)
{
    std::uniform_int_distribution<int> count(1, max_factors);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    BlaschkeSample s;
    const int m = count(rng);
    for (int i = 0; i < m; ++i) {
        const double rad = max_zero * std::sqrt(unit(rng));
        const double ang = 2.0 * std::numbers::pi * unit(rng);
        s.zeros.push_back(std::polar(rad, ang));
    }
    s.rotation = std::polar(1.0, 2.0 * std::numbers::pi * unit(rng));
    s.scale = unit(rng) < 0.5 ? 1.0 : 0.5 + 0.5 * unit(rng);
    return s;
}

inline std::vector<BlaschkeSample> random_blaschke_samples(std::uint64_t seed, std::size_t count)
{
    std::mt19937_64 rng(seed);
    std::vector<BlaschkeSample> v;
    v.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        v.push_back(random_blaschke(rng));
    }
    return v;
}

} // namespace bohr
