#pragma once

// Extremal families: the disk automorphism (a - z)/(1 - a z) precomposed with
// the affine map of Omega_gamma onto the unit disk, and the harmonic mapping
// built from it.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "bohr/series.hpp"

namespace bohr {

/// g_0(z) = (a - gamma - (1-gamma) z) / (1 - a gamma - a (1-gamma) z).
struct MobiusFamilyParams {
    double a = 0.5;
    double gamma = 0.0;

    void validate() const
    {
        if (!(a > 0.0 && a < 1.0)) {
            throw std::domain_error("MobiusFamilyParams: a must lie in (0, 1)");
        }
        if (!(gamma >= 0.0 && gamma < 1.0)) {
            throw std::domain_error("MobiusFamilyParams: gamma must lie in [0, 1)");
        }
    }

    /// The sharpness arguments work with a > gamma, where A_0 >= 0.
    [[nodiscard]] bool a_exceeds_gamma() const noexcept { return a > gamma; }

    /// 1 - a gamma
    [[nodiscard]] double denom() const noexcept { return 1.0 - a * gamma; }
    /// q = a (1-gamma) / (1 - a gamma), the decay ratio of A_n.
    [[nodiscard]] double ratio() const noexcept { return a * (1.0 - gamma) / denom(); }
    /// A_0 = (a - gamma) / (1 - a gamma)
    [[nodiscard]] double A0() const noexcept { return (a - gamma) / denom(); }
    /// (1 - a^2) / (a (1 - a gamma)), so that A_n = scale * q^n.
    [[nodiscard]] double scale() const noexcept { return (1.0 - a) * (1.0 + a) / (a * denom()); }
    [[nodiscard]] double An(std::size_t n) const noexcept
    {
        return scale() * std::pow(ratio(), static_cast<double>(n));
    }
};

struct HarmonicExtremalParams {
    double a = 0.5;
    double gamma = 0.0;
    double k = 1.0;
    /// Multiplier in f_0 = h_0 + conj(k lambda (h_0 - A_0)).
    double lambda = 1.0;

    void validate() const
    {
        MobiusFamilyParams{a, gamma}.validate();
        if (!(k >= 0.0 && k <= 1.0)) {
            throw std::domain_error("HarmonicExtremalParams: k must lie in [0, 1]");
        }
        if (!(lambda >= 0.0 && lambda <= 1.0)) {
            throw std::domain_error("HarmonicExtremalParams: lambda must lie in [0, 1]");
        }
    }
    [[nodiscard]] MobiusFamilyParams mobius() const noexcept { return {a, gamma}; }
};

inline complex mobius_value(const MobiusFamilyParams &p, complex z)
{
    return (p.a - p.gamma - (1.0 - p.gamma) * z) / (p.denom() - p.a * (1.0 - p.gamma) * z);
}

inline complex mobius_derivative(const MobiusFamilyParams &p, complex z)
{
    const complex d = p.denom() - p.a * (1.0 - p.gamma) * z;
    return -(1.0 - p.gamma) * (1.0 - p.a) * (1.0 + p.a) / (d * d);
}

/// A_0 - sum_{n>=1} A_n z^n with the exact geometric tail (q, A_n / q^n).
inline PowerSeries mobius_family_coeffs(const MobiusFamilyParams &p, std::size_t order = default_order)
{
    p.validate();
    if (order < 1) {
        throw std::invalid_argument("mobius_family_coeffs: order must be >= 1");
    }
    const double q = p.ratio();
    const double s = p.scale();
    std::vector<complex> c(order + 1);
    c[0] = p.A0();
    double an = s;
    for (std::size_t n = 1; n <= order; ++n) {
        an *= q;
        c[n] = -an;
    }
    return PowerSeries(std::move(c), GeometricTail{q, s});
}

struct HarmonicPair {
    PowerSeries h;
    PowerSeries g;
};

/// h = g_0 and g = k lambda (g_0 - A_0), so b_0 = 0 and b_n = -k lambda A_n.
inline HarmonicPair harmonic_extremal(const HarmonicExtremalParams &p, std::size_t order = default_order)
{
    p.validate();
    auto h = mobius_family_coeffs(p.mobius(), order);
    const double m = p.k * p.lambda;
    std::vector<complex> b(h.coeffs().begin(), h.coeffs().end());
    b[0] = 0.0;
    for (auto &x : b) {
        x *= m;
    }
    GeometricTail tail = *h.tail();
    tail.scale *= m;
    return {std::move(h), PowerSeries(std::move(b), tail)};
}

/// a_j = 1 - 2^{-j}, j = 1..jmax.
inline std::vector<double> sharpness_a_grid(int jmax = 14)
{
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(std::max(jmax, 0)));
    for (int j = 1; j <= jmax; ++j) {
        v.push_back(1.0 - std::ldexp(1.0, -j));
    }
    return v;
}

} // namespace bohr
