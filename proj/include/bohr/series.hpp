#pragma once

// Truncated complex power series about the origin, with optional geometric
// tail bounds, plus the affine recentring used for series about a point
// gamma of the unit disk.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bohr {

using complex = std::complex<double>;

/// Truncation order used when the caller does not specify one.
inline constexpr std::size_t default_order = 2048;

namespace detail {

// Neumaier compensated summation.
class CompensatedSum {
public:
    void add(double x) noexcept
    {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline bool finite(complex z) noexcept
{
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

} // namespace detail

/// Geometric bound |a_n| <= scale * ratio^n, valid for every n above the
/// truncation order of the series that carries it.
///
/// Series about 0 built from functions analytic beyond the closed unit disk
/// have ratio < 1. Cauchy estimates on a circle of radius rho < 1 and
/// series about a point gamma != 0 legitimately carry ratio >= 1; the bound
/// is then only useful at radii r < 1 / ratio.
struct GeometricTail {
    double ratio = 0.0;
    double scale = 0.0;

    /// sum_{n > order} scale * (ratio * r)^n, or +inf when it diverges.
    [[nodiscard]] double majorant_bound(std::size_t order, double r) const noexcept
    {
        if (scale == 0.0 || r == 0.0) {
            return 0.0;
        }
        const double x = ratio * r;
        if (!(x < 1.0) || !std::isfinite(scale)) {
            return std::numeric_limits<double>::infinity();
        }
        return scale * std::pow(x, static_cast<double>(order + 1)) / (1.0 - x);
    }

    /// sum_{n > order} scale^2 * w^n * weight(n), weight(n) = n or 1, with
    /// w = (ratio * r)^2. Used for the Dirichlet area and the f_0 norm.
    [[nodiscard]] double square_bound(std::size_t order, double r, bool weighted) const noexcept
    {
        if (scale == 0.0 || r == 0.0) {
            return 0.0;
        }
        const double w = (ratio * r) * (ratio * r);
        if (!(w < 1.0) || !std::isfinite(scale)) {
            return std::numeric_limits<double>::infinity();
        }
        const auto n1 = static_cast<double>(order + 1);
        const double head = scale * scale * std::pow(w, n1);
        if (!weighted) {
            return head / (1.0 - w);
        }
        return head * (n1 - static_cast<double>(order) * w) / ((1.0 - w) * (1.0 - w));
    }

    friend bool operator==(const GeometricTail &, const GeometricTail &) = default;
};

/// Truncated power series sum_{n=0}^{N} a_n z^n.
class PowerSeries {
public:
    PowerSeries() : coeffs_(1, complex{}) {}

    explicit PowerSeries(std::vector<complex> coeffs, std::optional<GeometricTail> tail = std::nullopt)
        : coeffs_(std::move(coeffs)), tail_(tail)
    {
        if (coeffs_.empty()) {
            throw std::invalid_argument("PowerSeries: need at least one coefficient");
        }
        for (const auto &c : coeffs_) {
            if (!detail::finite(c)) {
                throw std::invalid_argument("PowerSeries: non-finite coefficient");
            }
        }
        if (tail_) {
            if (!(tail_->ratio >= 0.0) || !std::isfinite(tail_->ratio) || !(tail_->scale >= 0.0)) {
                throw std::invalid_argument("PowerSeries: tail needs ratio >= 0 and scale >= 0");
            }
        }
    }

    static PowerSeries constant(complex c, std::size_t order = 0)
    {
        std::vector<complex> v(order + 1, complex{});
        v[0] = c;
        return PowerSeries(std::move(v));
    }

    /// z (the identity map), truncated at `order` >= 1.
    static PowerSeries identity(std::size_t order = 1)
    {
        std::vector<complex> v(std::max<std::size_t>(order, 1) + 1, complex{});
        v[1] = 1.0;
        return PowerSeries(std::move(v));
    }

    [[nodiscard]] std::size_t order() const noexcept { return coeffs_.size() - 1; }
    [[nodiscard]] std::span<const complex> coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] const std::optional<GeometricTail> &tail() const noexcept { return tail_; }

    /// Coefficient n, zero beyond the truncation order.
    [[nodiscard]] complex operator[](std::size_t n) const noexcept
    {
        return n < coeffs_.size() ? coeffs_[n] : complex{};
    }

    /// Horner evaluation of the stored polynomial part.
    [[nodiscard]] complex operator()(complex z) const noexcept
    {
        complex acc{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * z + *it;
        }
        return acc;
    }

    friend bool operator==(const PowerSeries &, const PowerSeries &) = default;

private:
    std::vector<complex> coeffs_;
    std::optional<GeometricTail> tail_;
};

/// sum a_n (z - center)^n for a series stored about `center`.
inline complex evaluate_about(const PowerSeries &p, complex center, complex z) noexcept
{
    return p(z - center);
}

namespace detail {

// Bound for a finite run of coefficients a_{first}, ..., treated as a tail.
// Picks the smallest candidate ratio that keeps the scale finite.
inline std::optional<GeometricTail> bound_coefficients(std::span<const complex> c, std::size_t first)
{
    bool any = false;
    for (const auto &x : c) {
        any = any || x != complex{};
    }
    if (!any) {
        return std::nullopt;
    }
    for (double q : {0.5, 0.9, 0.99, 0.999}) {
        double scale = 0.0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            const double lg = std::log(std::abs(c[i])) - static_cast<double>(first + i) * std::log(q);
            scale = std::max(scale, std::exp(lg));
        }
        if (std::isfinite(scale)) {
            return GeometricTail{q, scale};
        }
    }
    return GeometricTail{0.999, std::numeric_limits<double>::infinity()};
}

// Scale E such that |a_n| <= E * q^n for every n, stored or not (q > 0).
inline double global_scale(const PowerSeries &p, double q)
{
    double e = p.tail() ? p.tail()->scale : 0.0;
    const auto c = p.coeffs();
    for (std::size_t n = 0; n < c.size(); ++n) {
        if (c[n] != complex{}) {
            e = std::max(e, std::exp(std::log(std::abs(c[n])) - static_cast<double>(n) * std::log(q)));
        }
    }
    return e;
}

// Ratio s > q with q / s < 1, used to absorb a polynomial factor (n+1).
inline double inflate_ratio(double q)
{
    return q < 1.0 ? std::sqrt(q) : q * 1.0001;
}

// max_{m >= 0} (m + 1) t^m for 0 <= t < 1.
inline double linear_geometric_peak(double t)
{
    double peak = 1.0;
    for (std::size_t m = 1; m < 1000000; ++m) {
        const double v = static_cast<double>(m + 1) * std::pow(t, static_cast<double>(m));
        peak = std::max(peak, v);
        if (v < peak * 1e-3) {
            break;
        }
    }
    return peak;
}

inline std::optional<GeometricTail> combine_sum(const std::optional<GeometricTail> &a,
                                                const std::optional<GeometricTail> &b)
{
    if (!a) {
        return b;
    }
    if (!b) {
        return a;
    }
    return GeometricTail{std::max(a->ratio, b->ratio), a->scale + b->scale};
}

} // namespace detail

/// Truncate to order n (n <= p.order()); dropped coefficients are folded into
/// the tail bound.
inline PowerSeries truncate(const PowerSeries &p, std::size_t n)
{
    if (n >= p.order()) {
        return p;
    }
    const auto c = p.coeffs();
    std::vector<complex> kept(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n + 1));
    const auto dropped = c.subspan(n + 1);
    std::optional<GeometricTail> tail;
    if (p.tail()) {
        // Keep the existing ratio; raise the scale to cover the dropped run.
        const double q = p.tail()->ratio;
        double scale = p.tail()->scale;
        for (std::size_t i = 0; i < dropped.size(); ++i) {
            if (dropped[i] != complex{}) {
                scale = std::max(scale, std::exp(std::log(std::abs(dropped[i])) -
                                                 static_cast<double>(n + 1 + i) * std::log(q)));
            }
        }
        tail = GeometricTail{q, scale};
    } else {
        tail = detail::bound_coefficients(dropped, n + 1);
    }
    return PowerSeries(std::move(kept), tail);
}

/// Coefficient-wise sum, truncated to the smaller order.
inline PowerSeries add(const PowerSeries &p, const PowerSeries &q)
{
    const std::size_t n = std::min(p.order(), q.order());
    const auto pt = truncate(p, n);
    const auto qt = truncate(q, n);
    std::vector<complex> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        c[i] = pt[i] + qt[i];
    }
    return PowerSeries(std::move(c), detail::combine_sum(pt.tail(), qt.tail()));
}

inline PowerSeries scale(const PowerSeries &p, complex s)
{
    std::vector<complex> c(p.coeffs().begin(), p.coeffs().end());
    for (auto &x : c) {
        x *= s;
    }
    auto tail = p.tail();
    if (tail) {
        tail->scale *= std::abs(s);
    }
    return PowerSeries(std::move(c), tail);
}

/// Cauchy product truncated at the smaller order.
///
/// With tails on both sides the product tail uses |c_n| <= E_p E_q (n+1) Q^n,
/// Q = max ratio, rewritten as a geometric bound with ratio sqrt(Q).
inline PowerSeries mul(const PowerSeries &p, const PowerSeries &q)
{
    const std::size_t n = std::min(p.order(), q.order());
    const auto no_tail = [](const PowerSeries &x) {
        return !x.tail() || x.tail()->scale == 0.0 || x.tail()->ratio == 0.0;
    };
    const bool exact = no_tail(p) && no_tail(q);
    // Exact inputs: compute the full product so the dropped part can be bounded.
    const std::size_t full = exact ? p.order() + q.order() : n;
    std::vector<complex> c(full + 1, complex{});
    for (std::size_t i = 0; i <= std::min(p.order(), full); ++i) {
        const complex pi = p[i];
        if (pi == complex{}) {
            continue;
        }
        for (std::size_t j = 0; i + j <= full && j <= q.order(); ++j) {
            c[i + j] += pi * q[j];
        }
    }
    if (exact) {
        return truncate(PowerSeries(std::move(c)), n);
    }

    const double big_q = std::max(p.tail() ? p.tail()->ratio : 0.0, q.tail() ? q.tail()->ratio : 0.0);
    const double s = detail::inflate_ratio(big_q);
    const double peak = detail::linear_geometric_peak(big_q / s);
    const double scale = detail::global_scale(p, big_q) * detail::global_scale(q, big_q) * peak;
    const std::optional<GeometricTail> tail = GeometricTail{s, scale};
    c.resize(n + 1);
    return PowerSeries(std::move(c), tail);
}

/// Term-wise derivative; the result has order N - 1 (at least 0).
inline PowerSeries derivative(const PowerSeries &p)
{
    const auto c = p.coeffs();
    if (c.size() == 1) {
        return PowerSeries::constant(0.0);
    }
    std::vector<complex> d(c.size() - 1);
    for (std::size_t n = 1; n < c.size(); ++n) {
        d[n - 1] = static_cast<double>(n) * c[n];
    }
    std::optional<GeometricTail> tail;
    if (p.tail() && p.tail()->scale > 0.0) {
        // (n+1) a_{n+1} <= scale q (n+1) q^n <= scale q peak s^n, with s = sqrt(q)
        // when q < 1 and s slightly above q otherwise.
        const double q = p.tail()->ratio;
        const double s = detail::inflate_ratio(q);
        const double peak = q == 0.0 ? 1.0 : detail::linear_geometric_peak(q / s);
        tail = GeometricTail{s, p.tail()->scale * q * peak};
    } else if (p.tail()) {
        tail = GeometricTail{p.tail()->ratio, 0.0};
    }
    return PowerSeries(std::move(d), tail);
}

/// Antiderivative vanishing at 0; order N + 1.
inline PowerSeries integrate(const PowerSeries &p)
{
    const auto c = p.coeffs();
    std::vector<complex> v(c.size() + 1, complex{});
    for (std::size_t n = 0; n < c.size(); ++n) {
        v[n + 1] = c[n] / static_cast<double>(n + 1);
    }
    auto tail = p.tail();
    if (tail) {
        // |a_{n-1}| / n <= scale q^{n-1} = (scale / q) q^n
        tail->scale = tail->ratio > 0.0 ? tail->scale / tail->ratio : 0.0;
    }
    return PowerSeries(std::move(v), tail);
}

/// The domain Omega_gamma = { z : |z + gamma/(1-gamma)| < 1/(1-gamma) }.
class DiskDomain {
public:
    explicit DiskDomain(double gamma) : gamma_(gamma)
    {
        if (!(gamma >= 0.0 && gamma < 1.0)) {
            throw std::domain_error("DiskDomain: gamma must lie in [0, 1)");
        }
    }

    [[nodiscard]] double gamma() const noexcept { return gamma_; }
    [[nodiscard]] double center() const noexcept { return -gamma_ / (1.0 - gamma_); }
    [[nodiscard]] double radius() const noexcept { return 1.0 / (1.0 - gamma_); }
    [[nodiscard]] bool contains(complex z) const noexcept { return std::abs(z - center()) < radius(); }

    /// Affine map of the unit disk onto the domain, z -> (z - gamma)/(1 - gamma).
    [[nodiscard]] complex from_unit_disk(complex z) const noexcept { return (z - gamma_) / (1.0 - gamma_); }
    /// Inverse of from_unit_disk, w -> (1 - gamma) w + gamma.
    [[nodiscard]] complex to_unit_disk(complex w) const noexcept { return (1.0 - gamma_) * w + gamma_; }

private:
    double gamma_;
};

/// Coefficients alpha_n of g about gamma mapped to b_n = alpha_n (1-gamma)^n,
/// so that g(z) = G(w) with w = (z - gamma)/(1 - gamma).
inline PowerSeries recenter_affine(const PowerSeries &about_gamma, double gamma)
{
    const DiskDomain dom(gamma);
    const double s = 1.0 - dom.gamma();
    std::vector<complex> c(about_gamma.coeffs().begin(), about_gamma.coeffs().end());
    double f = 1.0;
    for (auto &x : c) {
        x *= f;
        f *= s;
    }
    auto tail = about_gamma.tail();
    if (tail) {
        tail->ratio *= s;
    }
    return PowerSeries(std::move(c), tail);
}

/// Inverse of recenter_affine: alpha_n = b_n / (1-gamma)^n.
inline PowerSeries recenter_inverse(const PowerSeries &unit_series, double gamma)
{
    const DiskDomain dom(gamma);
    const double s = 1.0 - dom.gamma();
    std::vector<complex> c(unit_series.coeffs().begin(), unit_series.coeffs().end());
    double f = 1.0;
    for (auto &x : c) {
        x /= f;
        f *= s;
    }
    auto tail = unit_series.tail();
    if (tail) {
        tail->ratio /= s;
    }
    return PowerSeries(std::move(c), tail);
}

/// Result of sampling a function on a circle and extracting its Taylor
/// coefficients.
struct NumericTaylor {
    PowerSeries series;
    /// Bound on |f(z) - series(z)| for |z| <= rho / 2.
    double error_estimate = 0.0;
};

/// Taylor coefficients of f by the trapezoid rule on |z| = rho with
/// M = 8N equispaced samples: a_n = (1/M) sum_j f(rho w^j) w^{-nj} / rho^n.
inline NumericTaylor numeric_taylor(const std::function<complex(complex)> &f, std::size_t order,
                                    double rho = 0.5)
{
    if (order < 1) {
        throw std::invalid_argument("numeric_taylor: order must be >= 1");
    }
    if (!(rho > 0.0 && rho < 1.0)) {
        throw std::domain_error("numeric_taylor: rho must lie in (0, 1)");
    }
    const std::size_t m = 8 * order;
    std::vector<complex> roots(m);
    for (std::size_t j = 0; j < m; ++j) {
        roots[j] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m));
    }
    std::vector<complex> samples(m);
    double fmax = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        samples[j] = f(rho * roots[j]);
        if (!detail::finite(samples[j])) {
            throw std::invalid_argument("numeric_taylor: non-finite sample");
        }
        fmax = std::max(fmax, std::abs(samples[j]));
    }
    std::vector<complex> c(order + 1);
    double rn = 1.0;
    for (std::size_t n = 0; n <= order; ++n) {
        complex acc{};
        for (std::size_t j = 0; j < m; ++j) {
            acc += samples[j] * std::conj(roots[(n * j) % m]);
        }
        c[n] = acc / (static_cast<double>(m) * rn);
        rn *= rho;
    }
    // Rounding in the DFT is amplified by rho^{-n} and damped by (rho/2)^n on
    // the evaluation disk; the neglected tail obeys the Cauchy bound.
    const double eps = std::numeric_limits<double>::epsilon();
    const double rounding = 2.0 * eps * std::sqrt(static_cast<double>(m)) * fmax * 2.0;
    const double tail = fmax * std::pow(0.5, static_cast<double>(order));
    return {PowerSeries(std::move(c), GeometricTail{1.0 / rho, fmax}), rounding + tail};
}

} // namespace bohr
