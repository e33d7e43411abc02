#pragma once

// Independent oracles used by the tests: tensor Gauss-Legendre x trapezoid
// quadrature on a disk and plain (uncompensated) long sums.

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using complex = std::complex<double>;

// Nodes and weights on [-1, 1] by Newton iteration on P_n.
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(std::size_t n)
{
    std::vector<double> x(n), w(n);
    for (std::size_t i = 0; i < n; ++i) {
        double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (std::size_t j = 1; j <= n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / static_cast<double>(j);
            }
            dp = static_cast<double>(n) * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) {
                break;
            }
        }
        x[i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
    return {x, w};
}

// (1/pi) int_{|z|<r} |fp(z)|^2 dA, Gauss-Legendre in rho, trapezoid in theta.
inline double disk_area(const std::function<complex(complex)> &fp, double r, std::size_t n_rho = 40,
                        std::size_t n_theta = 256)
{
    const auto [x, w] = gauss_legendre(n_rho);
    double total = 0.0;
    for (std::size_t i = 0; i < n_rho; ++i) {
        const double rho = 0.5 * r * (x[i] + 1.0);
        double ring = 0.0;
        for (std::size_t j = 0; j < n_theta; ++j) {
            const double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_theta);
            ring += std::norm(fp(std::polar(rho, t)));
        }
        ring *= 2.0 * std::numbers::pi / static_cast<double>(n_theta);
        total += 0.5 * r * w[i] * rho * ring;
    }
    return total / std::numbers::pi;
}

// sum_{n=first}^{last} term(n), naive left-to-right.
inline double long_sum(const std::function<double(std::size_t)> &term, std::size_t first, std::size_t last)
{
    double s = 0.0;
    for (std::size_t n = first; n <= last; ++n) {
        s += term(n);
    }
    return s;
}

inline std::vector<complex> random_poly(std::mt19937_64 &rng, std::size_t degree, double scale = 1.0)
{
    std::normal_distribution<double> g(0.0, scale);
    std::vector<complex> c(degree + 1);
    for (auto &x : c) {
        x = {g(rng), g(rng)};
    }
    return c;
}

} // namespace oracle
