#pragma once

// Closed-form scalar functions that appear inside the proofs of the Bohr-type
// inequalities. Each is evaluated exactly as written; monotonicity and sign
// claims about them are checked in verify.hpp.

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bohr::internals {

namespace detail {

inline void require(bool cond, const char *msg)
{
    if (!cond) {
        throw std::domain_error(msg);
    }
}

} // namespace detail

/// A(gamma) = (3+gamma)(1-gamma^2) / ((3+gamma)^2 - (1-gamma^2)^2).
inline double A_gamma(double gamma)
{
    const double u = 3.0 + gamma;
    const double v = 1.0 - gamma * gamma;
    const double den = u * u - v * v;
    detail::require(den != 0.0, "A_gamma: degenerate denominator");
    return u * v / den;
}

/// Psi(r) = |alpha_0| + (1-|alpha_0|^2) r / ((1+gamma)(1-gamma-r))
///          + K (1-|alpha_0|^2)^2 r^2 / (1-r^2)^2 - 1,   0 <= r < 1 - gamma.
inline double psi_lemma1(double r, double alpha0, double gamma, double K)
{
    detail::require(r >= 0.0 && r < 1.0 - gamma, "psi_lemma1: need 0 <= r < 1 - gamma");
    const double w = 1.0 - alpha0 * alpha0;
    const double s = w * r / (1.0 - r * r);
    return alpha0 + w * r / ((1.0 + gamma) * (1.0 - gamma - r)) + K * s * s - 1.0;
}

/// r_0 = (1-gamma^2)/(3+gamma), the radius in the recentred lemma.
inline double lemma1_radius(double gamma)
{
    return (1.0 - gamma * gamma) / (3.0 + gamma);
}

/// F(x) = 1 + 2 K A(gamma)^2 (1-x^2) - 2/(1+x).
inline double F_lemma1(double x, double gamma, double K)
{
    detail::require(x > -1.0, "F_lemma1: need x > -1");
    const double A = A_gamma(gamma);
    return 1.0 + 2.0 * K * A * A * (1.0 - x * x) - 2.0 / (1.0 + x);
}

struct UCoefficients {
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
};

/// A = r/((1+gamma)(1-r)), B = r^2/((1+gamma)^2 (1-r^2)),
/// C = r^3/((1+gamma)^2 (1-r)(1-r^2)).
inline UCoefficients u_coefficients(double r, double gamma)
{
    detail::require(r >= 0.0 && r < 1.0, "u_coefficients: need 0 <= r < 1");
    const double g1 = 1.0 + gamma;
    return {r / (g1 * (1.0 - r)), r * r / (g1 * g1 * (1.0 - r * r)),
            r * r * r / (g1 * g1 * (1.0 - r) * (1.0 - r * r))};
}

/// u(a) = a + A(1-a^2) + B(1-a)(1-a^2) + C(1-a^2)^2.
inline double u_thm2(double a, const UCoefficients &k)
{
    const double w = 1.0 - a * a;
    return a + k.A * w + k.B * (1.0 - a) * w + k.C * w * w;
}

inline double u_thm2_prime(double a, const UCoefficients &k)
{
    return 1.0 - 2.0 * k.A * a + k.B * (3.0 * a * a - 2.0 * a - 1.0) + 4.0 * k.C * (a * a * a - a);
}

inline double u_thm2_second(double a, const UCoefficients &k)
{
    return -2.0 * k.A + 2.0 * k.B * (3.0 * a - 1.0) + 4.0 * k.C * (3.0 * a * a - 1.0);
}

/// Psi(r) = (1+r)(r(3+gamma) - (1+gamma)).
inline double psi_thm2(double r, double gamma)
{
    return (1.0 + r) * (r * (3.0 + gamma) - (1.0 + gamma));
}

/// F(x) = 8/(1+x) - 5 + x^2.
inline double F_thm3(double x)
{
    detail::require(x > -1.0, "F_thm3: need x > -1");
    return 8.0 / (1.0 + x) - 5.0 + x * x;
}

/// r_0(a) = (1+gamma) / (1+gamma+(1+a)(1+k)).
inline double r0_thm4(double a, double gamma, double k)
{
    return (1.0 + gamma) / (1.0 + gamma + (1.0 + a) * (1.0 + k));
}

/// Deficit function of the area inequality on the extremal family:
/// functional = 1 - (1-a) Phi(r).
inline double phi_thm1(double r, double a, double gamma, double K = 8.0 / 9.0)
{
    const double c = 1.0 - a * gamma;
    const double g1 = 1.0 - gamma;
    const double lin = c - a * r * g1;
    detail::require(lin > 0.0, "phi_thm1: r beyond the pole of the extremal series");
    const double g4 = g1 * g1 * g1 * g1;
    const double quad = c * c - a * a * r * r * g4;
    detail::require(quad > 0.0, "phi_thm1: degenerate area denominator");
    return (1.0 + gamma) / c - (1.0 + a) / c * (r * g1) / lin -
           K * (1.0 - a) * (1.0 + a) * (1.0 + a) * g4 * r * r / (quad * quad);
}

/// Deficit function of the f_0-norm inequality:
/// functional = 1 - (1-a)/(1-a gamma) Phi(r).
inline double phi_thm2(double r, double a, double gamma)
{
    detail::require(r >= 0.0 && r < 1.0, "phi_thm2: need 0 <= r < 1");
    const double c = 1.0 - a * gamma;
    const double g1 = 1.0 - gamma;
    const double lin = c - a * g1 * r;
    detail::require(lin > 0.0, "phi_thm2: r beyond the pole of the extremal series");
    const double quad = c * c - a * a * g1 * g1 * r * r;
    const double factor = c / ((1.0 + a) * g1) + r / (1.0 - r);
    return 1.0 + gamma - (1.0 + a) * g1 * r / lin -
           factor * (1.0 + a) * (1.0 - a * a) / c * (g1 * g1 * r * r) / quad;
}

/// Which multiplier multiplies the co-analytic sum in the harmonic deficit.
/// The construction f_0 = h_0 + conj(k lambda (h_0 - A_0)) gives k*lambda;
/// the alternative uses lambda alone. Both are exposed.
enum class HarmonicMultiplier { k_lambda, lambda_only };

/// Deficit function of the harmonic inequality:
/// functional = 1 - (1-a)/(1-a gamma) Phi(r).
inline double phi_thm4(double r, double a, double gamma, double k, double lambda,
                       HarmonicMultiplier m = HarmonicMultiplier::k_lambda)
{
    const double c = 1.0 - a * gamma;
    const double g1 = 1.0 - gamma;
    const double lin = c - a * g1 * r;
    detail::require(lin > 0.0, "phi_thm4: r beyond the pole of the extremal series");
    const double mult = m == HarmonicMultiplier::k_lambda ? k * lambda : lambda;
    return 1.0 + gamma - (1.0 + mult) * (1.0 + a) * g1 * r / lin;
}

/// Name-based access, for reports and the command line. Missing parameters
/// default to zero except K (8/9), k (1) and lambda (1).
inline double proof_internals(std::string_view name, const std::map<std::string, double> &params)
{
    const auto get = [&](const char *key, double def) {
        const auto it = params.find(key);
        return it == params.end() ? def : it->second;
    };
    const double r = get("r", 0.0);
    const double x = get("x", 0.0);
    const double a = get("a", 0.0);
    const double gamma = get("gamma", 0.0);
    const double K = get("K", 8.0 / 9.0);
    const double k = get("k", 1.0);
    const double lambda = get("lambda", 1.0);
    if (name == "PsiLemma1") return psi_lemma1(r, get("alpha0", 0.0), gamma, K);
    if (name == "F_Lemma1") return F_lemma1(x, gamma, K);
    if (name == "A_gamma") return A_gamma(gamma);
    if (name == "u_Thm2") return u_thm2(a, u_coefficients(r, gamma));
    if (name == "Psi_Thm2") return psi_thm2(r, gamma);
    if (name == "F_Thm3") return F_thm3(x);
    if (name == "r0_Thm4") return r0_thm4(a, gamma, k);
    if (name == "Phi_Thm1") return phi_thm1(r, a, gamma, K);
    if (name == "Phi_Thm2") return phi_thm2(r, a, gamma);
    if (name == "Phi_Thm4") return phi_thm4(r, a, gamma, k, lambda, HarmonicMultiplier::k_lambda);
    if (name == "Phi_Thm4_lambda") return phi_thm4(r, a, gamma, k, lambda, HarmonicMultiplier::lambda_only);
    throw std::invalid_argument("unknown proof internal '" + std::string(name) + "'");
}

} // namespace bohr::internals
