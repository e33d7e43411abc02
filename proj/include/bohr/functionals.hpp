#pragma once

// Bohr-type functionals: majorant series, Dirichlet (multiplicity-counted)
// image area, the f_0 norm, and their combinations for the analytic and
// harmonic inequalities.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "bohr/series.hpp"

namespace bohr {

/// A truncated sum together with a bound on what truncation left out.
struct SeriesSum {
    double value = 0.0;
    double tail_error = 0.0;
};

struct FunctionalValue {
    double total = 0.0;
    /// sum |a_n| r^n (plus sum |b_n| r^n for harmonic maps)
    double majorant = 0.0;
    /// area, norm or zero
    double correction = 0.0;
    double r = 0.0;
    double tail_error = 0.0;

    /// Admissibility with the tail counted on the unsafe side.
    [[nodiscard]] bool within_bound(double bound = 1.0) const noexcept { return total + tail_error <= bound; }
};

inline constexpr double theorem1_constant = 8.0 / 9.0;

namespace detail {

inline void require_radius(double r, const char *who)
{
    if (!(r >= 0.0 && r < 1.0)) {
        throw std::domain_error(std::string(who) + ": r must lie in [0, 1)");
    }
}

inline SeriesSum majorant_from(const PowerSeries &p, double r, std::size_t first)
{
    CompensatedSum acc;
    double rn = 1.0;
    const auto c = p.coeffs();
    for (std::size_t n = 0; n < c.size(); ++n) {
        if (n >= first) {
            acc.add(std::abs(c[n]) * rn);
        }
        rn *= r;
    }
    const double tail = p.tail() ? p.tail()->majorant_bound(p.order(), r) : 0.0;
    return {acc.value(), tail};
}

inline FunctionalValue combine(double r, SeriesSum maj, double factor, SeriesSum corr)
{
    FunctionalValue v;
    v.r = r;
    v.majorant = maj.value;
    v.correction = factor * corr.value;
    v.total = v.majorant + v.correction;
    v.tail_error = maj.tail_error + (factor == 0.0 ? 0.0 : factor * corr.tail_error);
    return v;
}

} // namespace detail

/// M_f(r) = sum_{n>=0} |a_n| r^n.
inline SeriesSum majorant(const PowerSeries &p, double r)
{
    detail::require_radius(r, "majorant");
    return detail::majorant_from(p, r, 0);
}

/// sum_{n>=1} |a_n| r^n, the co-analytic part of a harmonic majorant.
inline SeriesSum majorant_nonconstant(const PowerSeries &p, double r)
{
    detail::require_radius(r, "majorant_nonconstant");
    return detail::majorant_from(p, r, 1);
}

/// (1/pi) times the image area of |z| < r counted with multiplicity,
/// sum_{n>=1} n |a_n|^2 r^{2n}.
inline SeriesSum dirichlet_area(const PowerSeries &p, double r)
{
    detail::require_radius(r, "dirichlet_area");
    detail::CompensatedSum acc;
    const double r2 = r * r;
    double rn = 1.0;
    const auto c = p.coeffs();
    for (std::size_t n = 1; n < c.size(); ++n) {
        rn *= r2;
        acc.add(static_cast<double>(n) * std::norm(c[n]) * rn);
    }
    const double tail = p.tail() ? p.tail()->square_bound(p.order(), r, true) : 0.0;
    return {acc.value(), tail};
}

/// ||f_0||_r = sum_{n>=1} |a_n|^2 r^{2n}.
inline SeriesSum norm_f0(const PowerSeries &p, double r)
{
    detail::require_radius(r, "norm_f0");
    detail::CompensatedSum acc;
    const double r2 = r * r;
    double rn = 1.0;
    const auto c = p.coeffs();
    for (std::size_t n = 1; n < c.size(); ++n) {
        rn *= r2;
        acc.add(std::norm(c[n]) * rn);
    }
    const double tail = p.tail() ? p.tail()->square_bound(p.order(), r, false) : 0.0;
    return {acc.value(), tail};
}

/// (1 - |a_0|^2)^2 r^2 / (1 - r^2)^2, the area bound for bounded analytic f.
inline double area_upper_bound(double a0_abs, double r)
{
    if (!(a0_abs >= 0.0 && a0_abs <= 1.0)) {
        throw std::domain_error("area_upper_bound: |a_0| must lie in [0, 1]");
    }
    detail::require_radius(r, "area_upper_bound");
    const double s = (1.0 - a0_abs * a0_abs) * r / (1.0 - r * r);
    return s * s;
}

/// Plain majorant as a functional value (classical and Fournier-Ruscheweyh
/// inequalities).
inline FunctionalValue functional_majorant(const PowerSeries &p, double r)
{
    return detail::combine(r, majorant(p, r), 0.0, {});
}

/// sum |a_n| r^n + K S_{r(1-gamma)} / pi, area taken over |z| < r(1-gamma).
inline FunctionalValue functional_theorem1(const PowerSeries &p, double r, double gamma,
                                           double K = theorem1_constant)
{
    const DiskDomain dom(gamma);
    return detail::combine(r, majorant(p, r), K, dirichlet_area(p, r * (1.0 - dom.gamma())));
}

/// sum |a_n| r^n + (1/(1+|a_0|) + r/(1-r)) ||f_0||_r.
inline FunctionalValue functional_theorem2(const PowerSeries &p, double r)
{
    const auto maj = majorant(p, r);
    const double factor = 1.0 / (1.0 + std::abs(p[0])) + r / (1.0 - r);
    return detail::combine(r, maj, factor, norm_f0(p, r));
}

/// B_1(r) = sum |a_n| r^n + 2 ((1+lambda)/(1+2 lambda))^2 S_r / pi.
inline FunctionalValue functional_theorem3(const PowerSeries &p, double r, double lambda)
{
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw std::domain_error("functional_theorem3: lambda must be positive");
    }
    const double w = (1.0 + lambda) / (1.0 + 2.0 * lambda);
    return detail::combine(r, majorant(p, r), 2.0 * w * w, dirichlet_area(p, r));
}

/// 1 / (1 + 2 lambda), the radius of the lambda-based inequality.
inline double theorem3_radius(double lambda)
{
    return 1.0 / (1.0 + 2.0 * lambda);
}

/// Harmonic f = h + conj(g): sum_{n>=0} |a_n| r^n + sum_{n>=1} |b_n| r^n.
/// The co-analytic sum is reported in `majorant`; `correction` is zero.
inline FunctionalValue functional_theorem4(const PowerSeries &h, const PowerSeries &g, double r)
{
    const auto mh = majorant(h, r);
    const auto mg = majorant_nonconstant(g, r);
    return detail::combine(r, {mh.value + mg.value, mh.tail_error + mg.tail_error}, 0.0, {});
}

} // namespace bohr
