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

#include "sparsefb/sweep.hpp"

#include "sparsefb/errors.hpp"
#include "sparsefb/feedback.hpp"
#include "sparsefb/training.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <functional>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace sparsefb::sweep
{
namespace
{

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

struct Value
{
    double v = nan;
    double se = nan;
};

struct Context
{
    Params p;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    nlohmann::json *notes = nullptr;

    [[nodiscard]] double h_t() const { return p.lambda * std::log(1.0 / p.snr); }

    [[nodiscard]] std::uint64_t d() const
    {
        if (!(p.d >= 1.0) || !std::isfinite(p.d))
            throw DomainError("parameter d must be a finite count >= 1");
        return static_cast<std::uint64_t>(std::llround(p.d));
    }

    [[nodiscard]] training::TrainingConfig training() const
    {
        training::TrainingConfig cfg;
        cfg.snr = p.snr;
        cfg.n_c = p.nc ? *p.nc : std::pow(p.snr, -p.mu);
        cfg.eta = p.eta ? *p.eta : training::eta_star(cfg.n_c, p.snr);
        cfg.h_t_train = p.h_t_train ? *p.h_t_train : training::h_t_train_star(cfg.eta, cfg.n_c, p.snr, p.lambda);
        return cfg;
    }

    [[nodiscard]] planner::PacketPlan plan() const { return planner::regime_classify(p.delta1, p.delta2, p.mu); }

    [[nodiscard]] double delta_value(const planner::SparsityExponent &e) const
    {
        using Kind = planner::SparsityExponent::Kind;
        return e.kind == Kind::value ? e.delta : (e.kind == Kind::to_zero ? 0.0 : 1.0);
    }
};

using Evaluator = std::function<Value(const Context &)>;

struct OutputDef
{
    OutputInfo info;
    Evaluator eval;
};

Value val(double x) { return {x, nan}; }

double flag(bool b) { return b ? 1.0 : 0.0; }

feedback::McEstimate feedback_mc(const Context &c, feedback::AllocationMode mode)
{
    feedback::McConfig cfg;
    cfg.mode = mode;
    cfg.d = c.d();
    cfg.snr = c.p.snr;
    cfg.h_t = c.h_t();
    if (mode == feedback::AllocationMode::short_term)
        cfg.a = c.p.a;
    cfg.trials = c.trials;
    cfg.seed = c.seed;
    cfg.threads = c.threads;
    return feedback::mc_rate(cfg);
}

const std::vector<OutputDef> &definitions()
{
    using feedback::AllocationMode;
    static const std::vector<OutputDef> defs = {
        // parameter echo
        {{"snr", false, "signal-to-noise ratio P/W"}, [](const Context &c) { return val(c.p.snr); }},
        {{"lambda", false, "threshold exponent"}, [](const Context &c) { return val(c.p.lambda); }},
        {{"h_t", false, "feedback threshold lambda ln(1/snr)"}, [](const Context &c) { return val(c.h_t()); }},
        {{"d", false, "coherence subspaces D"}, [](const Context &c) { return val(static_cast<double>(c.d())); }},
        {{"a", false, "instantaneous power cap multiplier"}, [](const Context &c) { return val(c.p.a); }},
        {{"mu", false, "coherence exponent"}, [](const Context &c) { return val(c.p.mu); }},
        {{"delta1", false, "Doppler sparsity (0/1 at limits)"},
         [](const Context &c) { return val(c.delta_value(c.p.delta1)); }},
        {{"delta2", false, "delay sparsity (0/1 at limits)"},
         [](const Context &c) { return val(c.delta_value(c.p.delta2)); }},
        // coherent feedback
        {{"rate_closed", false, "exact causal one-bit rate"},
         [](const Context &c) { return val(feedback::rate_closed_form_causal(c.p.snr, c.h_t())); }},
        {{"rate_lb", false, "lower sandwich bound"},
         [](const Context &c) { return val(feedback::rate_bounds_theorem1(c.p.snr, c.p.lambda).lb); }},
        {{"rate_ub", false, "upper sandwich bound"},
         [](const Context &c) { return val(feedback::rate_bounds_theorem1(c.p.snr, c.p.lambda).ub); }},
        {{"rate_first_order", false, "(1 + h_t) snr"},
         [](const Context &c) { return val(feedback::first_order_rate(c.p.snr, c.p.lambda)); }},
        {{"rate_coh0", false, "no-feedback coherent rate"},
         [](const Context &c) { return val(feedback::rate_coh0(c.p.snr).exact); }},
        {{"rate_coh0_approx", false, "snr - snr^2"},
         [](const Context &c) { return val(feedback::rate_coh0(c.p.snr).approx); }},
        {{"stationarity_residual", false, "derivative residual of the causal rate in h_t"},
         [](const Context &c) { return val(feedback::stationarity_residual(c.p.snr, c.h_t())); }},
        {{"expected_deff", false, "D e^{-h_t}"},
         [](const Context &c) { return val(channel::expected_deff(static_cast<double>(c.d()), c.h_t())); }},
        {{"gap_bound", false, "non-causal vs causal gap bound factor"},
         [](const Context &c) { return val(feedback::appendix_a_gap_bound(c.d(), c.h_t())); }},
        {{"rate_mc", true, "Monte Carlo causal rate"},
         [](const Context &c) {
             const auto e = feedback_mc(c, AllocationMode::causal);
             return Value{e.mean, e.stderr_};
         }},
        {{"rate_mc_noncausal", true, "Monte Carlo non-causal rate"},
         [](const Context &c) {
             const auto e = feedback_mc(c, AllocationMode::noncausal);
             return Value{e.mean, e.stderr_};
         }},
        {{"rate_mc_short_term", true, "Monte Carlo rate under the instantaneous cap"},
         [](const Context &c) {
             const auto e = feedback_mc(c, AllocationMode::short_term);
             return Value{e.mean, e.stderr_};
         }},
        {{"gap_relative", true, "paired |C_nc - C_c| / C_nc"},
         [](const Context &c) {
             const auto g = feedback::mc_gap(c.d(), c.p.snr, c.h_t(), c.trials, c.seed, c.threads);
             return Value{g.relative_gap, g.relative_stderr};
         }},
        {{"gap_absolute", true, "paired C_nc - C_c"},
         [](const Context &c) {
             const auto g = feedback::mc_gap(c.d(), c.p.snr, c.h_t(), c.trials, c.seed, c.threads);
             return Value{g.diff_mean, g.diff_stderr};
         }},
        {{"st_fraction", false, "exact binomial fraction sum p_i / D"},
         [](const Context &c) { return val(feedback::pi_exact(c.d(), c.h_t(), c.p.a).fraction); }},
        {{"st_tail_mass", false, "1 - fraction from the upper tails"},
         [](const Context &c) { return val(feedback::pi_exact(c.d(), c.h_t(), c.p.a).tail_mass); }},
        {{"st_fraction_conditional", false, "fraction conditioned on the subspace's own bit"},
         [](const Context &c) {
             const double e = std::exp(-c.h_t());
             return val(
                 feedback::st_fraction_conditional(c.d(), e, feedback::gate_budget(c.d(), e, c.p.a)));
         }},
        {{"st_bound_exact", false, "Bernstein lower bound, exact form"},
         [](const Context &c) {
             return val(feedback::prop1_lower_bound(c.d(), c.p.snr, c.p.lambda, c.p.a).exact_form);
         }},
        {{"st_bound_simplified", false, "Bernstein lower bound, simplified form"},
         [](const Context &c) {
             return val(feedback::prop1_lower_bound(c.d(), c.p.snr, c.p.lambda, c.p.a).simplified);
         }},
        {{"rate_short_term_closed", false, "causal rate times exact fraction"},
         [](const Context &c) {
             return val(feedback::rate_closed_form_causal(c.p.snr, c.h_t()) *
                        feedback::pi_exact(c.d(), c.h_t(), c.p.a).fraction);
         }},
        // training
        {{"nc", false, "coherence dimension (snr^-mu unless fixed)"},
         [](const Context &c) { return val(c.training().n_c); }},
        {{"eta", false, "training energy fraction (eta* unless fixed)"},
         [](const Context &c) { return val(c.training().eta); }},
        {{"eta_star", false, "no-feedback optimal training fraction"},
         [](const Context &c) { return val(training::eta_star(c.training().n_c, c.p.snr)); }},
        {{"e_tr", false, "training energy eta N_c snr"}, [](const Context &c) { return val(c.training().e_tr()); }},
        {{"h_t_train", false, "training threshold"}, [](const Context &c) { return val(c.training().h_t_train); }},
        {{"rate_train_closed", false, "exact training rate per data symbol"},
         [](const Context &c) { return val(training::rate_training_closed_form(c.training())); }},
        {{"rate_train_kernel", false, "training rate via the kernel decomposition"},
         [](const Context &c) { return val(training::rate_training_kernel(c.training())); }},
        {{"rate_train_per_dimension", false, "(1 - 1/N_c) times rate_train_closed"},
         [](const Context &c) { return val(training::rate_training_per_dimension(c.training())); }},
        {{"rate_train_lb", false, "asymptotic training lower bound (low SNR only)"},
         [](const Context &c) {
             const auto cfg = c.training();
             if (c.notes)
                 (*c.notes)["rate_train_lb"] = "asymptotic: low-SNR approximation, asserted only for snr <= 1e-2";
             return val(training::rate_training_lower_bound(cfg.eta, cfg.n_c, c.p.snr, c.p.lambda));
         }},
        {{"theorem2_ratio", false, "training rate / first-order rate along N_c = snr^-mu"},
         [](const Context &c) {
             const double s[] = {c.p.snr};
             return val(training::theorem2_ratio(c.p.mu, c.p.lambda, s).front());
         }},
        {{"st_fraction_train", false, "exact binomial fraction of the training gate"},
         [](const Context &c) {
             const auto cfg = c.training();
             return val(training::st_fraction_training(c.d(), cfg.eta, cfg.n_c, c.p.snr, cfg.h_t_train, c.p.a));
         }},
        {{"rate_train_mc", true, "Monte Carlo training rate with MMSE estimates"},
         [](const Context &c) {
             training::TrainingMcConfig mc;
             mc.cfg = c.training();
             mc.d = c.d();
             mc.trials = c.trials;
             mc.seed = c.seed;
             mc.threads = c.threads;
             const auto e = training::mc_training_rate(mc);
             if (c.notes)
                 (*c.notes)["nc_used"] = e.nc_used;
             return Value{e.mean, e.stderr_};
         }},
        // planner
        {{"rho", false, "T ~ W^rho exponent (NaN when T is not tied to W)"},
         [](const Context &c) { return val(c.plan().rho); }},
        {{"t_exponent", false, "T ~ N^t_exponent"}, [](const Context &c) { return val(c.plan().t_exponent); }},
        {{"w_exponent", false, "W ~ N^w_exponent"}, [](const Context &c) { return val(c.plan().w_exponent); }},
        {{"c1_ok", false, "condition C1 (0/1)"}, [](const Context &c) { return val(flag(c.plan().c1_ok)); }},
        {{"c2_ok", false, "condition C2 (0/1)"}, [](const Context &c) { return val(flag(c.plan().c2_ok)); }},
        {{"lambda_cap", false, "largest admissible lambda"}, [](const Context &c) { return val(c.plan().lambda_cap); }},
        {{"regime_code", false, "0 rich, 1 doppler_sparse, 2 delay_sparse, 3 doubly_sparse"},
         [](const Context &c) { return val(static_cast<double>(static_cast<int>(c.plan().regime))); }},
        {{"d_exponent", false, "D ~ snr^d_exponent"},
         [](const Context &c) {
             if (c.p.delta1.kind == planner::SparsityExponent::Kind::to_one)
                 return val(nan);
             return val(planner::d_scaling_exponent(c.delta_value(c.p.delta1), c.delta_value(c.p.delta2), c.p.mu));
         }},
        {{"rho_min_coherent", false, "(1 - delta2)/delta1 (NaN when delta1 -> 0)"},
         [](const Context &c) {
             const auto r = planner::rho_min_coherent(c.delta_value(c.p.delta1), c.delta_value(c.p.delta2));
             return val(r ? *r : nan);
         }},
        {{"symmetric_rho_min", false, "slowest T ~ W^rho for delta1 = delta2 = delta1"},
         [](const Context &c) {
             if (c.p.delta1.kind != planner::SparsityExponent::Kind::value)
                 return val(nan);
             return val(planner::symmetric_rho_min(c.p.delta1.delta));
         }},
        {{"t_canonical", false, "packet duration T [s] for W = power/snr"},
         [](const Context &c) {
             if (c.p.delta1.kind == planner::SparsityExponent::Kind::to_one)
                 return val(nan);
             channel::ChannelParams cp;
             cp.t_m = c.p.tm;
             cp.w_d = c.p.wd;
             cp.delta1 = c.delta_value(c.p.delta1);
             cp.delta2 = c.delta_value(c.p.delta2);
             return val(planner::t_of_w_canonical(cp, c.p.mu, c.p.power, c.p.power / c.p.snr));
         }},
    };
    return defs;
}

const OutputDef &find_def(std::string_view name)
{
    const auto canon = canonical_output(name);
    for (const auto &d : definitions())
        if (d.info.name == canon)
            return d;
    std::string valid;
    for (const auto &d : definitions())
        valid += (valid.empty() ? "" : ", ") + std::string(d.info.name);
    throw ArgumentError("unknown output '" + std::string(name) + "'; valid outputs: " + valid);
}

void set_variable(Params &p, Variable v, double x)
{
    switch (v)
    {
    case Variable::snr:
        p.snr = x;
        break;
    case Variable::lambda:
        p.lambda = x;
        break;
    case Variable::d:
        p.d = x;
        break;
    case Variable::a:
        p.a = x;
        break;
    case Variable::mu:
        p.mu = x;
        break;
    case Variable::delta:
        p.delta1 = p.delta2 = planner::SparsityExponent::of(x);
        break;
    }
}

nlohmann::json exponent_json(const planner::SparsityExponent &e)
{
    using Kind = planner::SparsityExponent::Kind;
    if (e.kind == Kind::to_zero)
        return "0+";
    if (e.kind == Kind::to_one)
        return "1-";
    return e.delta;
}

double parse_double(std::string_view text)
{
    double x = 0.0;
    const auto *first = text.data();
    const auto *last = text.data() + text.size();
    if (!text.empty() && *first == '+')
        ++first;
    const auto [ptr, ec] = std::from_chars(first, last, x);
    if (ec != std::errc() || ptr != last)
        throw ArgumentError("not a number: '" + std::string(text) + "'");
    return x;
}

} // namespace

std::string_view to_string(Variable v) noexcept
{
    switch (v)
    {
    case Variable::snr:
        return "snr";
    case Variable::lambda:
        return "lambda";
    case Variable::d:
        return "d";
    case Variable::a:
        return "a";
    case Variable::mu:
        return "mu";
    case Variable::delta:
        return "delta";
    }
    return "unknown";
}

Variable variable_from_string(std::string_view name)
{
    for (auto v : {Variable::snr, Variable::lambda, Variable::d, Variable::a, Variable::mu, Variable::delta})
        if (to_string(v) == name)
            return v;
    throw ArgumentError("unknown sweep variable '" + std::string(name) + "' (snr, lambda, d, a, mu, delta)");
}

void Params::set(std::string_view name, double value)
{
    if (name == "snr")
        snr = value;
    else if (name == "lambda")
        lambda = value;
    else if (name == "d")
        d = value;
    else if (name == "a")
        a = value;
    else if (name == "mu")
        mu = value;
    else if (name == "nc")
        nc = value;
    else if (name == "eta")
        eta = value;
    else if (name == "h_t_train")
        h_t_train = value;
    else if (name == "delta")
        delta1 = delta2 = planner::SparsityExponent::of(value);
    else if (name == "delta1")
        delta1 = planner::SparsityExponent::of(value);
    else if (name == "delta2")
        delta2 = planner::SparsityExponent::of(value);
    else if (name == "tm")
        tm = value;
    else if (name == "wd")
        wd = value;
    else if (name == "power")
        power = value;
    else
        throw ArgumentError("unknown parameter '" + std::string(name) + "'");
}

void Params::set_token(std::string_view name, std::string_view token)
{
    if (name != "delta" && name != "delta1" && name != "delta2")
    {
        set(name, parse_double(token));
        return;
    }
    planner::SparsityExponent e;
    if (token == "0+")
        e = planner::SparsityExponent::limit_zero();
    else if (token == "1-")
        e = planner::SparsityExponent::limit_one();
    else
        e = planner::SparsityExponent::of(parse_double(token));
    if (name != "delta2")
        delta1 = e;
    if (name != "delta1")
        delta2 = e;
}

nlohmann::json Params::to_json() const
{
    nlohmann::json j;
    j["snr"] = snr;
    j["lambda"] = lambda;
    j["d"] = d;
    j["a"] = a;
    j["mu"] = mu;
    j["nc"] = nc ? nlohmann::json(*nc) : nlohmann::json("snr^-mu");
    j["eta"] = eta ? nlohmann::json(*eta) : nlohmann::json("eta_star");
    j["h_t_train"] = h_t_train ? nlohmann::json(*h_t_train) : nlohmann::json("h_t_train_star");
    j["delta1"] = exponent_json(delta1);
    j["delta2"] = exponent_json(delta2);
    j["tm"] = tm;
    j["wd"] = wd;
    j["power"] = power;
    return j;
}

void SweepSpec::validate() const
{
    if (grid.empty())
        throw ArgumentError("sweep grid is empty");
    const bool up = grid.size() < 2 || grid[1] > grid[0];
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (up ? !(grid[i] > grid[i - 1]) : !(grid[i] < grid[i - 1]))
            throw ArgumentError("sweep grid must be strictly monotone");
    if (outputs.empty())
        throw ArgumentError("no outputs requested");
    bool any_mc = false;
    for (const auto &name : outputs)
        any_mc = any_mc || find_def(name).info.monte_carlo;
    if (any_mc && trials < 100)
        throw ArgumentError("Monte Carlo outputs need at least 100 trials");
}

const std::vector<OutputInfo> &output_catalogue()
{
    static const std::vector<OutputInfo> cat = [] {
        std::vector<OutputInfo> out;
        for (const auto &d : definitions())
            out.push_back(d.info);
        return out;
    }();
    return cat;
}

std::string canonical_output(std::string_view name)
{
    if (name == "closed_form")
        return "rate_closed";
    if (name == "lb")
        return "rate_lb";
    if (name == "ub")
        return "rate_ub";
    if (name == "first_order")
        return "rate_first_order";
    return std::string(name);
}

SweepResult run_sweep(const SweepSpec &spec)
{
    spec.validate();
    const auto start = std::chrono::steady_clock::now();

    std::vector<const OutputDef *> defs;
    SweepResult result;
    for (const auto &name : spec.outputs)
    {
        const auto &def = find_def(name);
        defs.push_back(&def);
        result.columns.emplace_back(def.info.name);
        if (def.info.monte_carlo)
            result.columns.push_back(std::string(def.info.name) + "_stderr");
    }

    nlohmann::json notes = nlohmann::json::object();
    for (double x : spec.grid)
    {
        Context ctx;
        ctx.p = spec.fixed;
        set_variable(ctx.p, spec.variable, x);
        ctx.trials = spec.trials;
        ctx.seed = spec.seed;
        ctx.threads = spec.threads;
        ctx.notes = &notes;
        std::vector<double> row;
        row.reserve(result.columns.size());
        for (const auto *def : defs)
        {
            const auto v = def->eval(ctx);
            row.push_back(v.v);
            if (def->info.monte_carlo)
                row.push_back(v.se);
        }
        result.rows.push_back(std::move(row));
    }

    bool planner_outputs = false;
    for (const auto *def : defs)
        for (std::string_view n : {"rho", "t_exponent", "w_exponent", "c1_ok", "c2_ok", "lambda_cap", "regime_code",
                                   "d_exponent", "rho_min_coherent", "symmetric_rho_min"})
            planner_outputs = planner_outputs || def->info.name == n;
    if (planner_outputs)
        notes["planner"] = "asymptotic exponents; constants hidden in scaling relations are set to 1";

    auto &m = result.metadata;
    m["library"] = "sparsefb";
    m["version"] = std::string(library_version);
    m["variable"] = std::string(to_string(spec.variable));
    m["grid"] = spec.grid;
    m["fixed"] = spec.fixed.to_json();
    m["trials"] = spec.trials;
    m["seed"] = spec.seed;
    m["outputs"] = result.columns;
    m["notes"] = notes;
    m["runtime_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::vector<double> parse_grid(std::string_view text)
{
    const auto comma = text.find(',');
    const auto body = text.substr(0, comma);
    const auto scale = comma == std::string_view::npos ? std::string_view("lin") : text.substr(comma + 1);
    const auto c1 = body.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : body.find(':', c1 + 1);
    if (c2 == std::string_view::npos)
        throw ArgumentError("grid must look like start:stop:points,log|lin");
    const double start = parse_double(body.substr(0, c1));
    const double stop = parse_double(body.substr(c1 + 1, c2 - c1 - 1));
    const double points_real = parse_double(body.substr(c2 + 1));
    if (!(points_real >= 1.0) || points_real != std::floor(points_real))
        throw ArgumentError("grid point count must be a positive integer");
    const auto points = static_cast<std::size_t>(points_real);
    if (scale != "log" && scale != "lin")
        throw ArgumentError("grid scale must be 'log' or 'lin'");
    const bool log = scale == "log";
    if (log && !(start > 0.0 && stop > 0.0))
        throw ArgumentError("log grid needs positive endpoints");

    std::vector<double> grid(points);
    if (points == 1)
    {
        grid[0] = start;
        return grid;
    }
    const double a = log ? std::log10(start) : start;
    const double b = log ? std::log10(stop) : stop;
    for (std::size_t i = 0; i < points; ++i)
    {
        const double t = static_cast<double>(i) / static_cast<double>(points - 1);
        const double u = a + (b - a) * t;
        grid[i] = log ? std::pow(10.0, u) : u;
    }
    grid.front() = start;
    grid.back() = stop;
    return grid;
}

std::string format_number(double x)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

void write_csv(std::ostream &os, const SweepResult &result)
{
    for (std::size_t i = 0; i < result.columns.size(); ++i)
        os << (i ? "," : "") << result.columns[i];
    os << '\n';
    for (const auto &row : result.rows)
    {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << format_number(row[i]);
        os << '\n';
    }
}

SweepResult read_csv(std::istream &is)
{
    SweepResult r;
    std::string line;
    auto split = [](const std::string &s) {
        std::vector<std::string> cells;
        std::stringstream ss(s);
        std::string cell;
        while (std::getline(ss, cell, ','))
            cells.push_back(cell);
        return cells;
    };
    if (!std::getline(is, line))
        throw ArgumentError("CSV input is empty");
    r.columns = split(line);
    while (std::getline(is, line))
    {
        if (line.empty())
            continue;
        const auto cells = split(line);
        if (cells.size() != r.columns.size())
            throw ArgumentError("CSV row has " + std::to_string(cells.size()) + " cells, header has " +
                                std::to_string(r.columns.size()));
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto &c : cells)
            row.push_back(parse_double(c));
        r.rows.push_back(std::move(row));
    }
    return r;
}

nlohmann::json to_json(const SweepResult &result)
{
    nlohmann::json j;
    j["metadata"] = result.metadata;
    j["columns"] = result.columns;
    auto rows = nlohmann::json::array();
    for (const auto &row : result.rows)
    {
        auto jr = nlohmann::json::array();
        for (double x : row)
            jr.push_back(std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr));
        rows.push_back(std::move(jr));
    }
    j["rows"] = std::move(rows);
    return j;
}

SweepSpec spec_from_json(const nlohmann::json &doc, SweepSpec base)
{
    if (!doc.is_object())
        throw ArgumentError("config must be a JSON object");
    try
    {
        if (doc.contains("variable"))
            base.variable = variable_from_string(doc.at("variable").get<std::string>());
        if (doc.contains("grid"))
        {
            const auto &g = doc.at("grid");
            base.grid = g.is_string() ? parse_grid(g.get<std::string>()) : g.get<std::vector<double>>();
        }
        if (doc.contains("fixed"))
        {
            for (const auto &[key, value] : doc.at("fixed").items())
            {
                if (value.is_string())
                    base.fixed.set_token(key, value.get<std::string>());
                else
                    base.fixed.set(key, value.get<double>());
            }
        }
        if (doc.contains("trials"))
            base.trials = doc.at("trials").get<std::uint64_t>();
        if (doc.contains("seed"))
            base.seed = doc.at("seed").get<std::uint64_t>();
        if (doc.contains("outputs"))
            base.outputs = doc.at("outputs").get<std::vector<std::string>>();
        if (doc.contains("threads"))
            base.threads = doc.at("threads").get<unsigned>();
    }
    catch (const nlohmann::json::exception &e)
    {
        throw ArgumentError(std::string("config: ") + e.what());
    }
    catch (const DomainError &e)
    {
        throw ArgumentError(std::string("config: ") + e.what());
    }
    return base;
}

bool same_payload(const SweepResult &x, const SweepResult &y)
{
    if (x.columns != y.columns || x.rows.size() != y.rows.size())
        return false;
    for (std::size_t i = 0; i < x.rows.size(); ++i)
    {
        if (x.rows[i].size() != y.rows[i].size())
            return false;
        for (std::size_t j = 0; j < x.rows[i].size(); ++j)
        {
            const double a = x.rows[i][j];
            const double b = y.rows[i][j];
            if (!(a == b || (std::isnan(a) && std::isnan(b))))
                return false;
        }
    }
    return true;
}

} // namespace sparsefb::sweep
