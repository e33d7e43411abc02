#pragma once

// Command-line front end: radius, verify, sweep, conjecture, identity-check.
// Exit codes: 0 success, 1 assertion failure, 2 usage error.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bohr/conjecture.hpp"
#include "bohr/internals.hpp"
#include "bohr/io.hpp"
#include "bohr/solver.hpp"
#include "bohr/verify.hpp"

namespace bohr::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_assertion = 1;
inline constexpr int exit_usage = 2;

/// Tolerance on |computed - closed form| for sharp radii.
inline constexpr double radius_match_tol = 1e-3;

struct RunConfig {
    std::string command;
    std::string theorem = "B";
    double gamma = 0.0;
    double k = 0.0;
    /// Unset: 1/(1+gamma) for theorem 3, 1 otherwise.
    std::optional<double> lambda;
    double K = theorem1_constant;
    double tol = default_radius_tol;
    std::vector<double> grid;
    std::uint64_t seed = 42;
    std::string out;
    std::size_t augment_random_samples = 0;
    bool all = false;
    /// identity-check at one point instead of random triples
    std::optional<double> a;
    std::optional<double> r;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// "lo:hi:n" (n points, endpoints included) or "x,y,z".
inline std::vector<double> parse_grid(const std::string &spec)
{
    std::vector<double> v;
    const auto to_double = [](const std::string &s) {
        std::size_t used = 0;
        double x = 0.0;
        try {
            x = std::stod(s, &used);
        } catch (const std::exception &) {
            throw UsageError("grid: cannot parse '" + s + "'");
        }
        if (used != s.size()) {
            throw UsageError("grid: cannot parse '" + s + "'");
        }
        return x;
    };
    if (spec.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(spec);
        for (std::string p; std::getline(ss, p, ':');) {
            parts.push_back(p);
        }
        if (parts.size() != 3) {
            throw UsageError("grid: range form is lo:hi:n");
        }
        const double lo = to_double(parts[0]);
        const double hi = to_double(parts[1]);
        const double n = to_double(parts[2]);
        if (!(n >= 1.0) || n != std::floor(n)) {
            throw UsageError("grid: n must be a positive integer");
        }
        const auto count = static_cast<std::size_t>(n);
        for (std::size_t i = 0; i < count; ++i) {
            v.push_back(count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1));
        }
        return v;
    }
    std::stringstream ss(spec);
    for (std::string p; std::getline(ss, p, ',');) {
        v.push_back(to_double(p));
    }
    if (v.empty()) {
        throw UsageError("grid: empty");
    }
    return v;
}

/// gamma in {0, 0.1, ..., 0.9}
inline std::vector<double> default_gamma_grid()
{
    std::vector<double> g;
    for (int i = 0; i < 10; ++i) {
        g.push_back(static_cast<double>(i) / 10.0);
    }
    return g;
}

inline void validate(const RunConfig &c)
{
    static const std::vector<std::string> commands{"radius", "verify", "sweep", "conjecture", "identity-check"};
    if (std::find(commands.begin(), commands.end(), c.command) == commands.end()) {
        throw UsageError("unknown command '" + c.command + "'");
    }
    try {
        (void)parse_theorem(c.theorem);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    const auto in_unit = [](double x) { return x >= 0.0 && x < 1.0; };
    if (!in_unit(c.gamma)) {
        throw UsageError("--gamma must lie in [0, 1)");
    }
    for (double g : c.grid) {
        if (!in_unit(g)) {
            throw UsageError("--grid values must lie in [0, 1)");
        }
    }
    if (!(c.k >= 0.0 && c.k <= 1.0)) {
        throw UsageError("--k must lie in [0, 1]");
    }
    if (c.lambda && !(*c.lambda > 0.0 && *c.lambda <= 1.0)) {
        throw UsageError("--lambda must lie in (0, 1]");
    }
    if (!(c.K >= 0.0) || !std::isfinite(c.K)) {
        throw UsageError("--K must be a nonnegative number");
    }
    if (!(c.tol > 0.0 && c.tol < 0.1)) {
        throw UsageError("--tol must lie in (0, 0.1)");
    }
}

namespace detail {

inline double lambda_for(const RunConfig &c, Theorem t, double gamma)
{
    if (c.lambda) {
        return *c.lambda;
    }
    return t == Theorem::T3 ? omega_lambda(gamma) : 1.0;
}

// Whether the extremal family is expected to reach the closed-form radius.
inline bool sharp(Theorem t, double gamma, double lambda)
{
    if (t == Theorem::T3) {
        return std::abs(lambda - omega_lambda(gamma)) < 1e-12;
    }
    return true;
}

struct RadiusRow {
    double gamma;
    double k;
    double lambda;
    Theorem theorem;
    RadiusResult result;
    double closed;
    bool ok;
};

inline RadiusRow compute_radius(const RunConfig &c, Theorem t, double gamma)
{
    const double lambda = lambda_for(c, t, gamma);
    const double k = t == Theorem::Corollary ? 1.0 : c.k;
    const auto grid = mobius_family_grid(t == Theorem::A ? 0.0 : gamma, k, lambda);
    const auto res = family_infimum_radius(theorem_family_evaluator(t, c.K), grid, c.tol);
    const double closed = closed_form_radius(t, gamma, k, lambda);
    // A finite family only witnesses violations, so it cannot undercut the
    // proven radius.
    bool ok = res.status != RadiusStatus::infeasible && res.radius >= closed - 1e-9;
    if (sharp(t, gamma, lambda)) {
        ok = ok && std::abs(res.radius - closed) <= radius_match_tol;
    }
    return {gamma, k, lambda, t, res, closed, ok};
}

inline void append_csv(const std::string &path, std::string_view header, const std::vector<std::string> &rows)
{
    const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    std::ofstream f(path, std::ios::app);
    if (!f) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    if (fresh) {
        f << header << '\n';
    }
    for (const auto &r : rows) {
        f << r << '\n';
    }
}

inline void write_text(const std::string &path, const std::string &text)
{
    std::ofstream f(path);
    if (!f) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    f << text;
}

inline bool ends_with(const std::string &s, std::string_view suffix)
{
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

inline int run_radius(const RunConfig &c, std::ostream &os)
{
    const Theorem t = parse_theorem(c.theorem);
    const auto row = compute_radius(c, t, t == Theorem::A ? 0.0 : c.gamma);
    os << std::setprecision(12);
    os << "theorem " << c.theorem << " (" << functional_id(t) << "), gamma = " << row.gamma << ", k = " << row.k
       << ", lambda = " << row.lambda << '\n';
    os << "computed radius:    " << row.result.radius << '\n';
    os << "closed-form radius: " << row.closed << '\n';
    os << "abs difference:     " << std::abs(row.result.radius - row.closed) << '\n';
    os << "status:             " << to_string(row.result.status) << (row.ok ? "" : "  [ASSERTION FAILED]") << '\n';
    if (!c.out.empty()) {
        if (ends_with(c.out, ".csv")) {
            append_csv(c.out, radius_csv_header, {radius_csv_row(row.gamma, row.k, row.lambda, t, row.result)});
        } else {
            json j = to_json(row.result);
            j["theorem"] = c.theorem;
            j["functional_id"] = std::string(functional_id(t));
            j["gamma"] = row.gamma;
            j["k"] = row.k;
            j["lambda"] = row.lambda;
            j["closed_form"] = row.closed;
            j["passed"] = row.ok;
            write_text(c.out, j.dump(2) + "\n");
        }
    }
    return row.ok ? exit_ok : exit_assertion;
}

inline int run_sweep(const RunConfig &c, std::ostream &os)
{
    const Theorem t = parse_theorem(c.theorem);
    const auto grid = c.grid.empty() ? default_gamma_grid() : c.grid;
    std::vector<std::string> rows;
    bool ok = true;
    for (double g : grid) {
        const auto row = compute_radius(c, t, t == Theorem::A ? 0.0 : g);
        ok = ok && row.ok;
        rows.push_back(radius_csv_row(row.gamma, row.k, row.lambda, t, row.result));
    }
    if (c.out.empty()) {
        os << radius_csv_header << '\n';
        for (const auto &r : rows) {
            os << r << '\n';
        }
    } else {
        append_csv(c.out, radius_csv_header, rows);
        os << "wrote " << rows.size() << " rows to " << c.out << '\n';
    }
    if (!ok) {
        os << "at least one radius missed its closed form\n";
    }
    return ok ? exit_ok : exit_assertion;
}

inline int run_verify(const RunConfig &c, std::ostream &os)
{
    const auto reports = run_all_checks({.seed = c.seed});
    bool ok = true;
    for (const auto &r : reports) {
        ok = ok && r.passed;
        os << (r.passed ? "PASS " : "FAIL ") << r.name << "  samples=" << r.samples
           << "  worst_slack=" << std::setprecision(6) << r.worst_slack << '\n';
    }
    if (!c.out.empty()) {
        write_text(c.out, to_json(reports).dump(2) + "\n");
    }
    return ok ? exit_ok : exit_assertion;
}

inline int run_conjecture(const RunConfig &c, std::ostream &os)
{
    std::vector<double> grid = c.grid;
    if (grid.empty()) {
        grid = default_gamma_grid();
        grid.push_back(0.99);
    }
    ConjectureOptions opt;
    opt.seed = c.seed;
    opt.augment_samples = c.augment_random_samples;
    const auto sweep = sweep_conjecture(grid, opt);

    std::ostringstream csv;
    write_conjecture_csv(csv, sweep.estimates);
    if (c.out.empty()) {
        os << csv.str();
    } else {
        write_text(c.out, csv.str());
        os << "wrote " << sweep.estimates.size() << " rows to " << c.out << '\n';
    }

    bool ok = true;
    for (const auto &e : sweep.estimates) {
        const bool floor = e.K_hat >= theorem1_constant - 1e-6;
        const bool witness = witness_functional(e, e.K_hat + 1e-6, opt).total > 1.0;
        ok = ok && floor && witness;
        if (!floor || !witness) {
            os << "gamma = " << e.gamma << ": " << (floor ? "" : "K_hat below 8/9 ")
               << (witness ? "" : "witness does not violate at K_hat + 1e-6") << '\n';
        }
        if (e.gamma == 0.0) {
            os << std::setprecision(12) << "gamma = 0: K_hat = " << e.K_hat
               << ", conjectured endpoint 16/9 = " << 16.0 / 9.0 << ", deviation = " << e.K_hat - 16.0 / 9.0
               << '\n';
        }
    }
    for (std::size_t i : sweep.nonmonotone) {
        os << "non-monotone: K_hat increases from gamma = " << sweep.estimates[i].gamma
           << " to gamma = " << sweep.estimates[i + 1].gamma << '\n';
    }
    return ok ? exit_ok : exit_assertion;
}

inline int run_identity(const RunConfig &c, std::ostream &os)
{
    CheckReport rep;
    if (c.a || c.r) {
        if (!c.a || !c.r) {
            throw UsageError("identity-check: give both --a and --r, or neither");
        }
        rep = check_identity_majorant_vs_phi(*c.a, c.gamma, *c.r, c.k, c.lambda.value_or(1.0), c.K);
    } else {
        rep = check_identity_random(c.seed, 100);
    }
    os << (rep.passed ? "PASS " : "FAIL ") << rep.name << "  samples=" << rep.samples
       << "  worst_slack=" << std::setprecision(6) << rep.worst_slack << '\n';
    if (!c.out.empty()) {
        write_text(c.out, to_json(std::vector<CheckReport>{rep}).dump(2) + "\n");
    }
    return rep.passed ? exit_ok : exit_assertion;
}

} // namespace detail

inline int run(const RunConfig &c, std::ostream &os)
{
    validate(c);
    if (c.command == "radius") {
        return detail::run_radius(c, os);
    }
    if (c.command == "sweep") {
        return detail::run_sweep(c, os);
    }
    if (c.command == "verify") {
        return detail::run_verify(c, os);
    }
    if (c.command == "conjecture") {
        return detail::run_conjecture(c, os);
    }
    return detail::run_identity(c, os);
}

/// Fill fields not given on the command line from a JSON config whose keys
/// mirror the long flag names.
inline void apply_config(RunConfig &c, const json &j, const std::function<bool(const std::string &)> &given)
{
    if (!j.is_object()) {
        throw UsageError("config: top level must be an object");
    }
    try {
        const auto take = [&](const char *key, auto &field) {
            if (j.contains(key) && !given(key)) {
                field = j.at(key).get<std::remove_reference_t<decltype(field)>>();
            }
        };
        take("command", c.command);
        take("theorem", c.theorem);
        take("gamma", c.gamma);
        take("k", c.k);
        take("K", c.K);
        take("tol", c.tol);
        take("seed", c.seed);
        take("out", c.out);
        take("augment-random-samples", c.augment_random_samples);
        take("all", c.all);
        if (j.contains("lambda") && !given("lambda")) {
            c.lambda = j.at("lambda").get<double>();
        }
        if (j.contains("a") && !given("a")) {
            c.a = j.at("a").get<double>();
        }
        if (j.contains("r") && !given("r")) {
            c.r = j.at("r").get<double>();
        }
        if (j.contains("grid") && !given("grid")) {
            const auto &g = j.at("grid");
            c.grid = g.is_string() ? parse_grid(g.get<std::string>()) : g.get<std::vector<double>>();
        }
    } catch (const json::exception &e) {
        throw UsageError(std::string("config: ") + e.what());
    }
}

/// Parse argv into a RunConfig and run it.
inline int main_entry(int argc, const char *const *argv, std::ostream &os = std::cout, std::ostream &err = std::cerr)
{
    CLI::App app{"Bohr-type inequality laboratory"};
    RunConfig c;
    std::string grid;
    std::string config;
    double lambda = 1.0;
    double a = 0.0;
    double r = 0.0;
    std::string theorem = c.theorem;

    app.add_option("command", c.command, "radius | verify | sweep | conjecture | identity-check");
    auto *o_theorem = app.add_option("--theorem", theorem, "A, B, 1, 2, 3, 4 or corollary");
    auto *o_gamma = app.add_option("--gamma", c.gamma, "domain parameter in [0, 1)");
    auto *o_k = app.add_option("--k", c.k, "dilatation bound in [0, 1]");
    auto *o_lambda = app.add_option("--lambda", lambda, "lambda (theorem 3) or harmonic mix (theorem 4)");
    auto *o_K = app.add_option("--K", c.K, "area constant of theorem 1");
    auto *o_tol = app.add_option("--tol", c.tol, "bisection tolerance");
    auto *o_grid = app.add_option("--grid", grid, "gamma grid, lo:hi:n or a comma list");
    auto *o_seed = app.add_option("--seed", c.seed, "random seed");
    auto *o_out = app.add_option("--out", c.out, "output file (JSON, or CSV for sweeps)");
    auto *o_aug = app.add_option("--augment-random-samples", c.augment_random_samples,
                                 "random Blaschke samples added to the conjecture witnesses");
    auto *o_all = app.add_flag("--all", c.all, "run every check (verify)");
    auto *o_a = app.add_option("--a", a, "family parameter for identity-check");
    auto *o_r = app.add_option("--r", r, "radius for identity-check");
    app.add_option("--config", config, "JSON file whose keys mirror the flags");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        os << app.help();
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << '\n' << app.help();
        return exit_usage;
    }

    try {
        c.theorem = theorem;
        if (o_lambda->count() > 0) {
            c.lambda = lambda;
        }
        if (o_a->count() > 0) {
            c.a = a;
        }
        if (o_r->count() > 0) {
            c.r = r;
        }
        if (o_grid->count() > 0) {
            c.grid = parse_grid(grid);
        }
        if (!config.empty()) {
            std::ifstream f(config);
            if (!f) {
                throw UsageError("cannot read config '" + config + "'");
            }
            json j;
            try {
                j = json::parse(f);
            } catch (const json::exception &e) {
                throw UsageError(std::string("config: ") + e.what());
            }
            const std::map<std::string, CLI::Option *> opts{
                {"theorem", o_theorem}, {"gamma", o_gamma}, {"k", o_k},     {"lambda", o_lambda},
                {"K", o_K},             {"tol", o_tol},     {"grid", o_grid}, {"seed", o_seed},
                {"out", o_out},         {"augment-random-samples", o_aug},  {"all", o_all},
                {"a", o_a},             {"r", o_r}};
            apply_config(c, j, [&](const std::string &key) {
                if (key == "command") {
                    return !c.command.empty();
                }
                const auto it = opts.find(key);
                return it != opts.end() && it->second->count() > 0;
            });
        }
        if (c.command.empty()) {
            throw UsageError("missing command");
        }
        return run(c, os);
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error &e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_assertion;
    }
}

} // namespace bohr::cli
