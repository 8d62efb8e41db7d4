// SPDX-License-Identifier: Apache-2.0
//
// sparsefb: achievable rates of sparse wideband channels with one-bit feedback
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Command-line front end. Subcommands share the parameter flags; a JSON config (--config) is
// read first and explicit flags override it.
//
// Exit codes: 0 success, 1 argument error, 2 verification failure, 3 numeric domain error.

#include "sparsefb/errors.hpp"
#include "sparsefb/feedback.hpp"
#include "sparsefb/planner.hpp"
#include "sparsefb/sweep.hpp"
#include "sparsefb/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace
{

namespace sw = sparsefb::sweep;

constexpr int exit_ok = 0;
constexpr int exit_argument = 1;
constexpr int exit_verify = 2;
constexpr int exit_domain = 3;

struct Flags
{
    std::map<std::string, std::string> values; ///< parameter name -> raw token, only when given
    std::string grid;
    std::string vary;
    std::string out;
    std::string format = "csv";
    std::string config;
    std::string outputs;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    unsigned threads = 0;
};

void add_common(CLI::App &cmd, Flags &f)
{
    for (const char *name :
         {"snr", "lambda", "d", "a", "mu", "nc", "eta", "delta1", "delta2", "tm", "wd", "power"})
    {
        cmd.add_option_function<std::string>(
            std::string("--") + name, [&f, name](const std::string &v) { f.values[name] = v; },
            name == std::string("delta1") || name == std::string("delta2")
                ? "sparsity exponent: number in (0,1), 0+ or 1- for the limits"
                : "parameter value");
    }
    cmd.add_option("--trials", f.trials, "Monte Carlo trials");
    cmd.add_option("--seed", f.seed, "Monte Carlo seed");
    cmd.add_option("--threads", f.threads, "worker threads (0 = hardware); results do not depend on it");
    cmd.add_option("--grid", f.grid, "start:stop:points,log|lin over the --vary variable");
    cmd.add_option("--vary", f.vary, "swept variable: snr, lambda, d, a, mu, delta");
    cmd.add_option("--out", f.out, "output path (default stdout)");
    cmd.add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd.add_option("--config", f.config, "JSON document mirroring the sweep specification");
}

nlohmann::json load_json(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw sparsefb::ArgumentError("cannot open config '" + path + "'");
    try
    {
        return nlohmann::json::parse(in);
    }
    catch (const nlohmann::json::exception &e)
    {
        throw sparsefb::ArgumentError("config '" + path + "': " + e.what());
    }
}

double current_value(const sw::Params &p, sw::Variable v)
{
    switch (v)
    {
    case sw::Variable::snr:
        return p.snr;
    case sw::Variable::lambda:
        return p.lambda;
    case sw::Variable::d:
        return p.d;
    case sw::Variable::a:
        return p.a;
    case sw::Variable::mu:
        return p.mu;
    case sw::Variable::delta:
        if (p.delta1.kind != sparsefb::planner::SparsityExponent::Kind::value)
            throw sparsefb::ArgumentError("cannot sweep delta from a limit value");
        return p.delta1.delta;
    }
    return 0.0;
}

// Config first, then explicit flags.
sw::SweepSpec build_spec(const CLI::App &cmd, const Flags &f, sw::Variable default_var,
                         std::vector<std::string> outputs)
{
    sw::SweepSpec spec;
    spec.variable = default_var;
    spec.outputs = std::move(outputs);
    if (!f.config.empty())
        spec = sw::spec_from_json(load_json(f.config), spec);
    for (const auto &[name, token] : f.values)
        spec.fixed.set_token(name, token);
    if (cmd.count("--trials"))
        spec.trials = f.trials;
    if (cmd.count("--seed"))
        spec.seed = f.seed;
    if (cmd.count("--threads"))
        spec.threads = f.threads;
    if (!f.vary.empty())
        spec.variable = sw::variable_from_string(f.vary);
    if (!f.grid.empty())
        spec.grid = sw::parse_grid(f.grid);
    if (spec.grid.empty())
        spec.grid = {current_value(spec.fixed, spec.variable)};
    if (!f.outputs.empty())
    {
        spec.outputs.clear();
        std::stringstream ss(f.outputs);
        std::string name;
        while (std::getline(ss, name, ','))
            if (!name.empty())
                spec.outputs.push_back(name);
    }
    return spec;
}

void emit(const sw::SweepResult &result, const Flags &f)
{
    std::ofstream file;
    if (!f.out.empty())
    {
        file.open(f.out);
        if (!file)
            throw sparsefb::ArgumentError("cannot write '" + f.out + "'");
    }
    std::ostream &os = f.out.empty() ? std::cout : file;
    if (f.format == "json")
        os << sw::to_json(result).dump(2) << '\n';
    else
        sw::write_csv(os, result);
}

void emit_pi_table(const sw::SweepSpec &spec, const Flags &f)
{
    const auto &p = spec.fixed;
    const auto d = static_cast<std::uint64_t>(std::llround(p.d));
    const double h = p.lambda * std::log(1.0 / p.snr);
    const auto st = sparsefb::feedback::pi_exact(d, h, p.a);
    sw::SweepResult r;
    r.columns = {"i", "p_i", "bernstein_tail"};
    for (std::uint64_t i = 1; i <= d; ++i)
        r.rows.push_back({static_cast<double>(i), st.p[i - 1], sparsefb::feedback::bernstein_tail(i, d, h, p.a)});
    r.metadata = {{"fixed", p.to_json()},
                  {"fraction", st.fraction},
                  {"tail_mass", st.tail_mass},
                  {"lower_bound_l", st.lower_bound_l},
                  {"version", std::string(sw::library_version)}};
    emit(r, f);
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"sparsefb: achievable rates of sparse wideband channels with one-bit feedback"};
    app.require_subcommand(1);
    Flags f;

    auto *rates = app.add_subcommand("rates", "coherent one-bit feedback: closed form, bounds, Monte Carlo");
    add_common(*rates, f);

    auto *shortterm = app.add_subcommand("shortterm", "instantaneous power cap: p_i, fractions, bounds");
    add_common(*shortterm, f);
    bool pi_table = false;
    bool st_mc = false;
    shortterm->add_flag("--pi", pi_table, "print the per-index table p_i instead of a sweep");
    shortterm->add_flag("--mc", st_mc, "add the Monte Carlo short-term rate");

    auto *training = app.add_subcommand("training", "training-based scheme: eta*, closed forms, convergence ratio");
    add_common(*training, f);
    bool train_mc = false;
    training->add_flag("--mc", train_mc, "add the Monte Carlo training rate");

    auto *plan = app.add_subcommand("plan", "packet configurations and C1/C2 verdicts");
    add_common(*plan, f);

    auto *sweep = app.add_subcommand("sweep", "generic sweep runner");
    add_common(*sweep, f);
    bool list_outputs = false;
    sweep->add_option("--outputs", f.outputs, "comma-separated output names");
    sweep->add_flag("--list-outputs", list_outputs, "print the output catalogue and exit");

    auto *verify = app.add_subcommand("verify", "run the acceptance suite");
    std::string level = "fast";
    sparsefb::verify::Options vopts;
    verify->add_option("--level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}));
    verify->add_option("--seed", vopts.seed, "Monte Carlo seed");
    verify->add_option("--threads", vopts.threads, "worker threads (0 = hardware)");
    verify->add_option("--inject-nu-fault", vopts.nu_perturbation,
                       "negative control: scale nu by (1 + value) inside the suite");
    verify->add_option("--out", f.out, "write the JSON report here");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_argument;
    }

    try
    {
        if (*verify)
        {
            vopts.level = level == "full" ? sparsefb::verify::Level::full : sparsefb::verify::Level::fast;
            const auto report = sparsefb::verify::verify_suite(vopts);
            for (const auto &r : report.results)
                std::cout << sparsefb::verify::format_line(r) << '\n';
            if (!f.out.empty())
            {
                std::ofstream file(f.out);
                if (!file)
                    throw sparsefb::ArgumentError("cannot write '" + f.out + "'");
                file << sparsefb::verify::to_json(report, vopts).dump(2) << '\n';
            }
            return report.all_pass() ? exit_ok : exit_verify;
        }

        if (*sweep && list_outputs)
        {
            for (const auto &o : sw::output_catalogue())
                std::cout << o.name << (o.monte_carlo ? " [mc]" : "") << "  " << o.description << '\n';
            return exit_ok;
        }

        sw::SweepSpec spec;
        if (*rates)
            spec = build_spec(*rates, f, sw::Variable::snr,
                              {"snr", "lambda", "h_t", "rate_closed", "rate_lb", "rate_ub", "rate_first_order",
                               "rate_mc"});
        else if (*shortterm)
        {
            std::vector<std::string> outs = {"snr", "lambda", "h_t", "d", "a", "st_fraction",
                                             "st_fraction_conditional", "st_bound_exact", "st_bound_simplified",
                                             "rate_closed", "rate_short_term_closed"};
            if (st_mc)
                outs.emplace_back("rate_mc_short_term");
            spec = build_spec(*shortterm, f, sw::Variable::snr, outs);
            if (pi_table)
            {
                emit_pi_table(spec, f);
                return exit_ok;
            }
        }
        else if (*training)
        {
            std::vector<std::string> outs = {"snr", "lambda", "mu", "nc", "eta", "e_tr", "h_t_train",
                                             "rate_train_closed", "rate_train_per_dimension", "rate_train_lb",
                                             "rate_first_order", "theorem2_ratio", "st_fraction_train"};
            if (train_mc)
                outs.emplace_back("rate_train_mc");
            spec = build_spec(*training, f, sw::Variable::snr, outs);
        }
        else if (*plan)
        {
            spec = build_spec(*plan, f, sw::Variable::mu,
                              {"delta1", "delta2", "mu", "regime_code", "rho", "t_exponent", "w_exponent",
                               "d_exponent", "c1_ok", "c2_ok", "lambda_cap", "rho_min_coherent", "t_canonical"});
        }
        else
        {
            spec = build_spec(*sweep, f, sw::Variable::snr, {});
        }

        auto result = sw::run_sweep(spec);
        if (*plan)
        {
            const auto pl = sparsefb::planner::regime_classify(spec.fixed.delta1, spec.fixed.delta2, spec.fixed.mu);
            result.metadata["regime"] = std::string(sparsefb::planner::to_string(pl.regime));
            result.metadata["narrative"] = pl.narrative;
            if (f.format == "csv" && !f.out.empty())
                std::cerr << to_string(pl.regime) << ": " << pl.narrative << '\n';
        }
        emit(result, f);
        return exit_ok;
    }
    catch (const sparsefb::ArgumentError &e)
    {
        std::cerr << "argument error: " << e.what() << '\n';
        return exit_argument;
    }
    catch (const sparsefb::DomainError &e)
    {
        std::cerr << "domain error: " << e.what() << '\n';
        return exit_domain;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_domain;
    }
}
