#pragma once

// JSON and CSV serialisation of series, functional values, radius results,
// check reports and conjecture estimates.

#include <cmath>
#include <cstddef>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bohr/conjecture.hpp"
#include "bohr/functionals.hpp"
#include "bohr/series.hpp"
#include "bohr/solver.hpp"
#include "bohr/verify.hpp"

namespace bohr {

using json = nlohmann::json;

namespace detail {

// NaN and infinities are not representable in JSON; they become null.
inline json number(double x)
{
    return std::isfinite(x) ? json(x) : json(nullptr);
}

} // namespace detail

inline json to_json(const PowerSeries &p)
{
    json coeffs = json::array();
    for (const auto &c : p.coeffs()) {
        coeffs.push_back({c.real(), c.imag()});
    }
    json tail = nullptr;
    if (p.tail()) {
        tail = {{"q", p.tail()->ratio}, {"C", detail::number(p.tail()->scale)}};
    }
    return {{"coeffs", coeffs}, {"order", p.order()}, {"tail", tail}};
}

inline PowerSeries series_from_json(const json &j)
{
    try {
        std::vector<complex> c;
        for (const auto &x : j.at("coeffs")) {
            if (!x.is_array() || x.size() != 2) {
                throw std::invalid_argument("series_from_json: coefficient must be [re, im]");
            }
            c.emplace_back(x[0].get<double>(), x[1].get<double>());
        }
        if (j.contains("order") && j.at("order").get<std::size_t>() + 1 != c.size()) {
            throw std::invalid_argument("series_from_json: order does not match coefficient count");
        }
        std::optional<GeometricTail> tail;
        if (j.contains("tail") && !j.at("tail").is_null()) {
            const auto &t = j.at("tail");
            const double scale = t.at("C").is_null() ? std::numeric_limits<double>::infinity() : t.at("C").get<double>();
            tail = GeometricTail{t.at("q").get<double>(), scale};
        }
        return PowerSeries(std::move(c), tail);
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("series_from_json: ") + e.what());
    }
}

inline json to_json(const FunctionalValue &v)
{
    return {{"total", v.total},
            {"majorant", v.majorant},
            {"correction", v.correction},
            {"r", v.r},
            {"tail_error", detail::number(v.tail_error)}};
}

inline json to_json(const FamilyParams &p)
{
    return {{"a", p.a}, {"gamma", p.gamma}, {"k", p.k}, {"lambda", p.lambda}};
}

/// Missing fields keep their defaults.
inline FamilyParams family_params_from_json(const json &j)
{
    FamilyParams p;
    p.a = j.value("a", p.a);
    p.gamma = j.value("gamma", p.gamma);
    p.k = j.value("k", p.k);
    p.lambda = j.value("lambda", p.lambda);
    return p;
}

inline json to_json(const RadiusResult &r)
{
    json j{{"radius", r.radius},
           {"lo", r.lo},
           {"hi", r.hi},
           {"tol", r.tol},
           {"iterations", r.iterations},
           {"status", std::string(to_string(r.status))},
           {"limit_error", r.limit_error},
           {"monotone_violations", r.monotone_violations},
           {"evaluations", r.evaluations}};
    j["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
    return j;
}

inline json to_json(const CheckReport &c)
{
    json w = json::object();
    for (const auto &[k, v] : c.witness) {
        w[k] = detail::number(v);
    }
    return {{"name", c.name},
            {"samples", c.samples},
            {"evaluations", c.evaluations},
            {"skipped", c.skipped},
            {"worst_slack", detail::number(c.worst_slack)},
            {"tolerance", c.tolerance},
            {"passed", c.passed},
            {"witness", w}};
}

inline json to_json(const std::vector<CheckReport> &reports)
{
    json a = json::array();
    for (const auto &r : reports) {
        a.push_back(to_json(r));
    }
    return a;
}

inline json to_json(const ConstantEstimate &e)
{
    json j{{"gamma", e.gamma},
           {"K_hat", e.K_hat},
           {"a_witness", detail::number(e.a_witness)},
           {"r_witness", e.r_witness},
           {"refinements", e.refinements},
           {"grid_stats",
            {{"coarse_min", e.grid_stats.coarse_min},
             {"level_min", e.grid_stats.level_min},
             {"evaluations", e.grid_stats.evaluations},
             {"family_min", e.grid_stats.family_min}}}};
    j["sample_index"] = e.sample_index ? json(*e.sample_index) : json(nullptr);
    return j;
}

// --- CSV ----------------------------------------------------------------

namespace detail {

// Enough digits to read back the same double.
inline std::string fmt(double x)
{
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

} // namespace detail

inline constexpr std::string_view functional_csv_header = "gamma,a,k,lambda,r,total,majorant,correction,tail_error";
inline constexpr std::string_view radius_csv_header = "gamma,k,lambda,functional_id,radius,tol";
inline constexpr std::string_view conjecture_csv_header = "gamma,K_hat,a_witness,r_witness,refinements";

inline std::string functional_csv_row(const FamilyParams &p, const FunctionalValue &v)
{
    using detail::fmt;
    return fmt(p.gamma) + "," + fmt(p.a) + "," + fmt(p.k) + "," + fmt(p.lambda) + "," + fmt(v.r) + "," +
           fmt(v.total) + "," + fmt(v.majorant) + "," + fmt(v.correction) + "," + fmt(v.tail_error);
}

inline std::string radius_csv_row(double gamma, double k, double lambda, Theorem t, const RadiusResult &r)
{
    using detail::fmt;
    return fmt(gamma) + "," + fmt(k) + "," + fmt(lambda) + "," + std::string(functional_id(t)) + "," +
           fmt(r.radius) + "," + fmt(r.tol);
}

inline std::string conjecture_csv_row(const ConstantEstimate &e)
{
    using detail::fmt;
    return fmt(e.gamma) + "," + fmt(e.K_hat) + "," + fmt(e.a_witness) + "," + fmt(e.r_witness) + "," +
           std::to_string(e.refinements);
}

inline void write_conjecture_csv(std::ostream &os, std::span<const ConstantEstimate> estimates)
{
    os << conjecture_csv_header << '\n';
    for (const auto &e : estimates) {
        os << conjecture_csv_row(e) << '\n';
    }
}

} // namespace bohr
