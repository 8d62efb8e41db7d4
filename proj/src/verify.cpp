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

#include "sparsefb/verify.hpp"

#include "sparsefb/channel.hpp"
#include "sparsefb/feedback.hpp"
#include "sparsefb/numeric.hpp"
#include "sparsefb/planner.hpp"
#include "sparsefb/rng.hpp"
#include "sparsefb/specfn.hpp"
#include "sparsefb/sweep.hpp"
#include "sparsefb/training.hpp"

#include "sparsefb_oracles/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <sstream>

namespace sparsefb::verify
{
namespace
{

using feedback::AllocationMode;

std::uint64_t trials_for(const Options &o, std::uint64_t stated)
{
    const std::uint64_t cap = o.level == Level::fast ? 10'000 : 1'000'000;
    return std::min(stated, cap);
}

unsigned threads_for(const Options &o) { return o.threads ? o.threads : default_thread_count(); }

std::string num(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

double nu_p(double alpha, const Options &o) { return specfn::nu_value(alpha) * (1.0 + o.nu_perturbation); }

// Causal closed form with the (optionally perturbed) nu; identical to the library when unperturbed.
double closed_causal(double snr, double h, const Options &o)
{
    if (o.nu_perturbation == 0.0)
        return feedback::rate_closed_form_causal(snr, h);
    const double s = snr * std::exp(h);
    const double alpha = (1.0 + s * h) / s;
    return std::exp(-h) * (std::log1p(s * h) + nu_p(alpha, o));
}

double uniform(CounterRng &rng, double lo, double hi) { return lo + (hi - lo) * rng.uniform_open0(); }

double log_uniform(CounterRng &rng, double lo, double hi)
{
    return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

feedback::McEstimate run_mc(AllocationMode mode, std::uint64_t d, double snr, double h, std::optional<double> a,
                            std::uint64_t trials, std::uint64_t seed, unsigned threads)
{
    feedback::McConfig cfg;
    cfg.mode = mode;
    cfg.d = d;
    cfg.snr = snr;
    cfg.h_t = h;
    cfg.a = a;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.threads = threads;
    return feedback::mc_rate(cfg);
}

training::TrainingMcConfig training_mc_point(const Options &o)
{
    training::TrainingMcConfig mc;
    mc.cfg.n_c = 100;
    mc.cfg.snr = 0.05;
    mc.cfg.eta = 0.1;
    mc.cfg.h_t_train = 1.0;
    mc.d = 200;
    mc.trials = trials_for(o, 100'000);
    mc.seed = o.seed;
    mc.threads = threads_for(o);
    return mc;
}

// ---- criteria ---------------------------------------------------------------------------------

CriterionResult c01(const Options &o)
{
    CriterionResult r{1, "special-function fidelity", true, {}, 0.0};
    double worst = 0.0;
    for (double alpha : {0.5, 1.0, 2.0, 10.0, 100.0})
        worst = std::max(worst, rel(nu_p(alpha, o), oracles::nu_quadrature(alpha)));
    std::size_t violations = 0;
    constexpr int points = 1000;
    for (int i = 0; i < points; ++i)
    {
        const double alpha = std::pow(10.0, -3.0 + 10.0 * i / (points - 1.0));
        const double v = nu_p(alpha, o);
        if (!(specfn::nu_lower_bound(alpha) <= v && v <= specfn::nu_upper_bound(alpha)))
            ++violations;
    }
    r.pass = worst <= 1e-10 && violations == 0;
    r.detail = "max rel err vs quadrature " + num(worst) + " (<= 1e-10); sandwich violations " +
               std::to_string(violations) + "/" + std::to_string(points);
    return r;
}

CriterionResult c02(const Options &o)
{
    CriterionResult r{2, "no-feedback reduction", true, {}, 0.0};
    double worst = 0.0;
    for (double snr : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6})
    {
        const double closed = closed_causal(snr, 0.0, o);
        const double nu = nu_p(1.0 / snr, o);
        const double coh0 = feedback::rate_coh0(snr).exact;
        worst = std::max({worst, rel(closed, nu), rel(coh0, nu)});
    }
    const double snr = 1e-3;
    const auto c = feedback::rate_coh0(snr);
    const double scaled = std::abs(closed_causal(snr, 0.0, o) - c.approx) / (snr * snr);
    r.pass = worst <= 1e-12 && scaled <= 2.1 * snr;
    r.detail = "max rel diff " + num(worst) + " (<= 1e-12); |exact - approx|/snr^2 = " + num(scaled) +
               " (<= " + num(2.1 * snr) + ")";
    return r;
}

CriterionResult c03(const Options &o)
{
    CriterionResult r{3, "Monte Carlo vs closed form", true, {}, 0.0};
    const double snr = 1e-3;
    const double h = 0.5 * std::log(1.0 / snr);
    const auto mc = run_mc(AllocationMode::causal, 200, snr, h, std::nullopt, trials_for(o, 100'000), o.seed,
                           threads_for(o));
    const double closed = closed_causal(snr, h, o);
    const double err = rel(mc.mean, closed);
    const double tol = std::max(3.0 * mc.stderr_ / closed, 0.01);
    r.pass = err <= tol;
    r.detail = "MC " + num(mc.mean) + " +- " + num(mc.stderr_) + " vs closed " + num(closed) + ", rel err " +
               num(err) + " (<= " + num(tol) + "), " + std::to_string(mc.trials) + " trials";
    return r;
}

CriterionResult c04(const Options &o)
{
    CriterionResult r{4, "rate sandwich", true, {}, 0.0};
    int bad = 0;
    int total = 0;
    std::string first_bad;
    for (double snr : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6})
        for (double lambda : {0.25, 0.5, 0.75, 0.9})
        {
            ++total;
            const auto b = feedback::rate_bounds_theorem1(snr, lambda);
            const double closed = closed_causal(snr, lambda * std::log(1.0 / snr), o);
            if (!(b.lb <= closed && closed <= b.ub))
            {
                if (bad++ == 0)
                    first_bad = " first at snr=" + num(snr) + " lambda=" + num(lambda) + ": " + num(b.lb) +
                                " <= " + num(closed) + " <= " + num(b.ub);
            }
        }
    r.pass = bad == 0;
    r.detail = std::to_string(total - bad) + "/" + std::to_string(total) + " grid points inside the sandwich" + first_bad;
    return r;
}

CriterionResult c05(const Options &o)
{
    CriterionResult r{5, "first-order convergence", true, {}, 0.0};
    const double grid[] = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
    std::ostringstream os;
    bool monotone = true;
    double final_half = 0.0;
    for (double lambda : {0.25, 0.5, 0.75, 0.9})
    {
        double prev = -1.0;
        bool inc = true;
        os << "lambda=" << lambda << ":";
        for (double snr : grid)
        {
            const double ratio =
                closed_causal(snr, lambda * std::log(1.0 / snr), o) / feedback::first_order_rate(snr, lambda);
            os << ' ' << num(ratio);
            inc = inc && ratio > prev;
            prev = ratio;
            if (lambda == 0.5 && snr == 1e-6)
                final_half = ratio;
        }
        os << (inc ? " (increasing); " : " (NOT increasing); ");
        monotone = monotone && inc;
    }
    const bool final_ok = final_half >= 0.99 && final_half <= 1.0;
    r.pass = monotone && final_ok;
    r.detail = os.str() + "ratio at lambda=0.5, snr=1e-6 is " + num(final_half) + " (in [0.99, 1])";
    return r;
}

CriterionResult c06(const Options &o)
{
    CriterionResult r{6, "non-causal vs causal gap", true, {}, 0.0};
    const std::uint64_t d = 100;
    const auto trials = trials_for(o, 100'000);
    const unsigned threads = threads_for(o);
    const double snr = 1e-3;
    const double h = 0.5 * std::log(1.0 / snr);
    const auto g = feedback::mc_gap(d, snr, h, trials, o.seed, threads);
    const double bound = snr * feedback::appendix_a_gap_bound(d, h);
    const bool rel_ok = g.relative_gap <= bound + 4.0 * g.relative_stderr;
    const bool abs_ok = std::abs(g.diff_mean) <= bound + 4.0 * g.diff_stderr;

    std::ostringstream os;
    os << "relative gap " << num(g.relative_gap) << " +- " << num(g.relative_stderr) << " vs snr*bound " << num(bound)
       << " + 4 sigma " << (rel_ok ? "(ok)" : "(EXCEEDED)") << "; across snr 1e-1..1e-4 relative:";
    double prev_rel = INFINITY;
    double prev_abs = INFINITY;
    bool rel_dec = true;
    bool abs_dec = true;
    std::ostringstream abs_os;
    for (double s : {1e-1, 1e-2, 1e-3, 1e-4})
    {
        const auto gs = feedback::mc_gap(d, s, 0.5 * std::log(1.0 / s), trials, o.seed, threads);
        os << ' ' << num(gs.relative_gap);
        abs_os << ' ' << num(gs.diff_mean);
        rel_dec = rel_dec && gs.relative_gap < prev_rel;
        abs_dec = abs_dec && std::abs(gs.diff_mean) < prev_abs;
        prev_rel = gs.relative_gap;
        prev_abs = std::abs(gs.diff_mean);
    }
    os << (rel_dec ? " (decreasing)" : " (NOT decreasing)");
    os << "; absolute form for reference: gap " << num(g.diff_mean) << " <= " << num(bound) << " + 4 sigma "
       << (abs_ok ? "holds" : "fails") << ", across snr" << abs_os.str()
       << (abs_dec ? " (decreasing)" : " (not decreasing)");
    r.pass = rel_ok && rel_dec;
    r.detail = os.str();
    return r;
}

CriterionResult c07(const Options &o)
{
    CriterionResult r{7, "short-term factorization", true, {}, 0.0};
    const std::uint64_t d = 100;
    const double snr = 1e-2;
    const double h = 0.5 * std::log(1.0 / snr);
    const double e = std::exp(-h);
    const double closed = closed_causal(snr, h, o);
    std::ostringstream os;
    bool ok = true;
    bool cap_ok = true;
    for (double a : {1.5, 3.0})
    {
        const auto mc =
            run_mc(AllocationMode::short_term, d, snr, h, a, trials_for(o, 100'000), o.seed, threads_for(o));
        const auto st = feedback::pi_exact(d, h, a);
        const double pred = closed * st.fraction;
        const double z = (mc.mean - pred) / mc.stderr_;
        const double cond = closed * feedback::st_fraction_conditional(d, e, feedback::gate_budget(d, e, a));
        const double zc = (mc.mean - cond) / mc.stderr_;
        const bool cap = mc.max_power_ratio <= a * (1.0 + 1e-12);
        ok = ok && std::abs(z) <= 3.0;
        cap_ok = cap_ok && cap;
        os << "A=" << a << ": MC " << num(mc.mean) << " +- " << num(mc.stderr_) << " vs closed*fraction "
           << num(pred) << " (z=" << num(z) << "); conditional form " << num(cond) << " (z=" << num(zc)
           << "); max P_inst/P " << num(mc.max_power_ratio) << (cap ? "" : " CAP VIOLATED") << ". ";
    }
    r.pass = ok && cap_ok;
    r.detail = os.str();
    return r;
}

CriterionResult c08(const Options &)
{
    CriterionResult r{8, "short-term lower bounds", true, {}, 0.0};
    int total = 0;
    int bad = 0;
    for (std::uint64_t d : {10u, 100u, 1000u})
        for (double lambda : {0.25, 0.5})
            for (double snr : {1e-2, 1e-3})
                for (double a : {1.5, 3.0})
                {
                    ++total;
                    const double h = lambda * std::log(1.0 / snr);
                    const auto st = feedback::pi_exact(d, h, a);
                    if (!(st.lower_bound_l <= st.fraction))
                        ++bad;
                }
    const std::uint64_t d = 10'000;
    const double h = 0.5 * std::log(1.0 / 1e-4);
    const double e = std::exp(-h);
    const auto st = feedback::pi_exact(d, h, 3.0);
    const auto m = static_cast<std::int64_t>(std::floor(feedback::gate_budget(d, e, 3.0)));
    double oracle_worst = 0.0;
    for (std::int64_t i : {std::int64_t{250}, std::int64_t{301}, std::int64_t{500}, std::int64_t{1000},
                           std::int64_t{5000}, std::int64_t{10000}})
    {
        const auto lib = feedback::binomial_tails(i, e, m);
        const double osf = oracles::binomial_sf(i, e, m);
        const double ocdf = oracles::binomial_cdf(i, e, m);
        const double err_sf = osf == 0.0 ? std::abs(lib.sf) : rel(lib.sf, osf);
        oracle_worst = std::max({oracle_worst, err_sf, rel(lib.cdf, ocdf)});
    }
    const double tail = 1.0 - st.fraction;
    r.pass = bad == 0 && tail <= 1e-6 && st.tail_mass <= 1e-6 && oracle_worst <= 1e-9;
    r.detail = "L <= fraction at " + std::to_string(total - bad) + "/" + std::to_string(total) +
               " points; at D=1e4, snr=1e-4, A=3: 1 - fraction = " + num(tail) + ", summed tail mass " +
               num(st.tail_mass) + " (<= 1e-6); library vs oracle tail rel err " + num(oracle_worst);
    return r;
}

CriterionResult c09(const Options &o)
{
    CriterionResult r{9, "training closed form", true, {}, 0.0};
    CounterRng rng(o.seed, 9);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k)
    {
        training::TrainingConfig cfg;
        cfg.eta = uniform(rng, 0.01, 0.99);
        cfg.n_c = log_uniform(rng, 2.5, 1e6);
        cfg.snr = log_uniform(rng, 1e-6, 0.5);
        cfg.h_t_train = uniform(rng, 0.0, 5.0);
        const double a = training::rate_training_closed_form(cfg);
        const double b = training::rate_training_kernel(cfg);
        worst = std::max(worst, a == b ? 0.0 : rel(a, b));
    }
    const auto mc_cfg = training_mc_point(o);
    const auto mc = training::mc_training_rate(mc_cfg);
    auto cfg = mc_cfg.cfg;
    cfg.n_c = mc.nc_used;
    const double closed = training::rate_training_closed_form(cfg);
    const double z = (mc.mean - closed) / mc.stderr_;
    r.pass = worst <= 1e-12 && std::abs(z) <= 3.0;
    r.detail = "dual-path max rel diff " + num(worst) + " (<= 1e-12) over 100 configs; MC " + num(mc.mean) + " +- " +
               num(mc.stderr_) + " vs closed " + num(closed) + " (z=" + num(z) + "), " + std::to_string(mc.trials) +
               " trials";
    return r;
}

CriterionResult c10(const Options &)
{
    CriterionResult r{10, "training convergence trend", true, {}, 0.0};
    const double grid[] = {1e-3, 1e-4, 1e-5, 1e-6};
    const auto hi = training::theorem2_ratio(1.5, 0.5, grid);
    bool inc = true;
    for (std::size_t i = 1; i < hi.size(); ++i)
        inc = inc && hi[i] > hi[i - 1];
    const double lo_grid[] = {1e-6};
    const double lo = training::theorem2_ratio(0.5, 0.5, lo_grid).front();
    r.pass = inc && hi.back() >= 0.9 && lo <= 0.1;
    std::ostringstream os;
    os << "mu=1.5:";
    for (double x : hi)
        os << ' ' << num(x);
    os << (inc ? " (increasing)" : " (NOT increasing)") << ", final >= 0.9; mu=0.5 at 1e-6: " << num(lo)
       << " (<= 0.1)";
    r.detail = os.str();
    return r;
}

CriterionResult c11(const Options &o)
{
    CriterionResult r{11, "planner round-trip", true, {}, 0.0};
    CounterRng rng(o.seed, 11);
    double worst = 0.0;
    int accepted = 0;
    int attempts = 0;
    while (accepted < 1000 && attempts < 100000)
    {
        ++attempts;
        channel::ChannelParams cp;
        cp.t_m = log_uniform(rng, 1e-7, 1e-5);
        cp.w_d = log_uniform(rng, 1.0, 100.0);
        cp.delta1 = uniform(rng, 0.05, 0.95);
        cp.delta2 = uniform(rng, 0.05, 0.95);
        const double mu = uniform(rng, 0.5, 3.0);
        channel::SignalSpace ss;
        ss.p = log_uniform(rng, 0.1, 10.0);
        ss.w = log_uniform(rng, 1e6, 1e9);
        ss.t = planner::t_of_w_canonical(cp, mu, ss.p, ss.w);
        if (!(ss.t * cp.w_d >= 1.0) || !(cp.t_m * ss.w >= 1.0) || !(ss.p < ss.w) || !std::isfinite(ss.t))
            continue;
        ++accepted;
        const auto prof = channel::coherence_profile(cp, ss);
        worst = std::max(worst, rel(prof.n_c, std::pow(ss.w / ss.p, mu)));
    }
    const auto split = planner::packet_split(1.0);
    const bool split_ok = split.first == 0.5 && split.second == 0.5;
    double best = INFINITY;
    double best_delta = 0.0;
    for (int i = 1; i < 100; ++i)
    {
        const double delta = i / 100.0;
        const double v = planner::symmetric_rho_min(delta);
        if (v < best)
        {
            best = v;
            best_delta = delta;
        }
    }
    const bool sym_ok = best_delta == 0.5 && best == 1.0;

    int mismatches = 0;
    for (int k = 0; k < 100; ++k)
    {
        const double d1 = uniform(rng, 0.05, 0.95);
        const double d2 = uniform(rng, 0.05, 0.95);
        const double mu = uniform(rng, 0.5, 3.0);
        const auto v = planner::conditions_c1_c2(d1, d2, mu);
        const double e = -planner::d_scaling_exponent(d1, d2, mu);
        if (v.c2_ok != (e > 1.0))
            ++mismatches;
        for (int j = 1; j < 20; ++j)
        {
            const double lambda = j / 20.0;
            const bool planner_diverges = lambda < v.lambda_cap;
            bool deff_diverges = false;
            if (e > 0.0)
                deff_diverges = feedback::deff_condition({1.0, e}, lambda) == feedback::DeffVerdict::diverges;
            if (planner_diverges != deff_diverges)
                ++mismatches;
        }
    }
    r.pass = accepted == 1000 && worst <= 1e-9 && split_ok && sym_ok && mismatches == 0;
    r.detail = "N_c round-trip max rel err " + num(worst) + " over " + std::to_string(accepted) +
               " draws (<= 1e-9); packet_split(1) = (" + num(split.first) + ", " + num(split.second) +
               "); symmetric_rho_min minimum " + num(best) + " at delta " + num(best_delta) +
               "; C2/deff cross-check mismatches " + std::to_string(mismatches);
    return r;
}

CriterionResult c12(const Options &o)
{
    CriterionResult r{12, "determinism", true, {}, 0.0};
    const unsigned t1 = threads_for(o);
    const unsigned t2 = 2 * t1;
    const auto trials = trials_for(o, 100'000);
    double worst_rel = 0.0;
    bool identical = true;
    auto compare = [&](double a, double b, double c) {
        identical = identical && a == b;
        worst_rel = std::max(worst_rel, a == c ? 0.0 : rel(c, a));
    };

    const double snr3 = 1e-3;
    const double h3 = 0.5 * std::log(1.0 / snr3);
    const auto a1 = run_mc(AllocationMode::causal, 200, snr3, h3, std::nullopt, trials, o.seed, t1);
    const auto a2 = run_mc(AllocationMode::causal, 200, snr3, h3, std::nullopt, trials, o.seed, t1);
    const auto a3 = run_mc(AllocationMode::causal, 200, snr3, h3, std::nullopt, trials, o.seed, t2);
    compare(a1.mean, a2.mean, a3.mean);
    compare(a1.stderr_, a2.stderr_, a3.stderr_);

    const auto g1 = feedback::mc_gap(100, snr3, h3, trials, o.seed, t1);
    const auto g2 = feedback::mc_gap(100, snr3, h3, trials, o.seed, t1);
    const auto g3 = feedback::mc_gap(100, snr3, h3, trials, o.seed, t2);
    compare(g1.diff_mean, g2.diff_mean, g3.diff_mean);
    compare(g1.relative_gap, g2.relative_gap, g3.relative_gap);

    const double snr7 = 1e-2;
    const double h7 = 0.5 * std::log(1.0 / snr7);
    const auto s1 = run_mc(AllocationMode::short_term, 100, snr7, h7, 1.5, trials, o.seed, t1);
    const auto s2 = run_mc(AllocationMode::short_term, 100, snr7, h7, 1.5, trials, o.seed, t1);
    const auto s3 = run_mc(AllocationMode::short_term, 100, snr7, h7, 1.5, trials, o.seed, t2);
    compare(s1.mean, s2.mean, s3.mean);

    auto tc = training_mc_point(o);
    const auto m1 = training::mc_training_rate(tc);
    const auto m2 = training::mc_training_rate(tc);
    tc.threads = t2;
    const auto m3 = training::mc_training_rate(tc);
    compare(m1.mean, m2.mean, m3.mean);

    r.pass = identical && worst_rel <= 1e-12;
    r.detail = std::string("same-seed reruns ") + (identical ? "bit-identical" : "DIFFER") + "; " +
               std::to_string(t1) + " vs " + std::to_string(t2) + " threads max rel diff " + num(worst_rel) +
               " (<= 1e-12)";
    return r;
}

} // namespace

bool Report::all_pass() const noexcept
{
    return std::all_of(results.begin(), results.end(), [](const CriterionResult &r) { return r.pass; });
}

CriterionResult run_criterion(int id, const Options &opts)
{
    using Fn = CriterionResult (*)(const Options &);
    static constexpr Fn table[] = {c01, c02, c03, c04, c05, c06, c07, c08, c09, c10, c11, c12};
    static constexpr const char *names[] = {"special-function fidelity", "no-feedback reduction",
                                            "Monte Carlo vs closed form", "rate sandwich",
                                            "first-order convergence", "non-causal vs causal gap",
                                            "short-term factorization", "short-term lower bounds",
                                            "training closed form", "training convergence trend",
                                            "planner round-trip", "determinism"};
    if (id < 1 || id > criterion_count)
        return {id, "unknown", false, "no such criterion", 0.0};
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try
    {
        r = table[id - 1](opts);
    }
    catch (const std::exception &e)
    {
        r = {id, names[id - 1], false, std::string("exception: ") + e.what(), 0.0};
    }
    r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

Report verify_suite(const Options &opts)
{
    Report rep;
    for (int id = 1; id <= criterion_count; ++id)
        rep.results.push_back(run_criterion(id, opts));
    return rep;
}

std::string format_line(const CriterionResult &r)
{
    char head[96];
    std::snprintf(head, sizeof head, "[%s] %02d %s: ", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str());
    char tail[48];
    std::snprintf(tail, sizeof tail, " (%.2f s)", r.runtime_seconds);
    return head + r.detail + tail;
}

nlohmann::json to_json(const Report &report, const Options &opts)
{
    nlohmann::json j;
    j["level"] = opts.level == Level::fast ? "fast" : "full";
    j["seed"] = opts.seed;
    j["nu_perturbation"] = opts.nu_perturbation;
    j["version"] = std::string(sweep::library_version);
    j["all_pass"] = report.all_pass();
    auto arr = nlohmann::json::array();
    for (const auto &r : report.results)
        arr.push_back({{"id", r.id},
                       {"name", r.name},
                       {"pass", r.pass},
                       {"detail", r.detail},
                       {"runtime_seconds", r.runtime_seconds}});
    j["criteria"] = arr;
    return j;
}

} // namespace sparsefb::verify
