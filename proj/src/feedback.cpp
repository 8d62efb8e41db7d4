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

#include "sparsefb/feedback.hpp"

#include "sparsefb/errors.hpp"
#include "sparsefb/numeric.hpp"
#include "sparsefb/rng.hpp"
#include "sparsefb/specfn.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sparsefb::feedback
{
namespace
{

void check_snr(double snr)
{
    if (!(snr > 0.0 && snr < 1.0))
        throw DomainError("snr must lie in (0, 1), got " + std::to_string(snr));
}

void check_lambda(double lambda)
{
    if (!(lambda > 0.0 && lambda < 1.0))
        throw DomainError("lambda must lie in (0, 1), got " + std::to_string(lambda));
}

void check_a(double a)
{
    if (!(a > 1.0) || !std::isfinite(a))
        throw DomainError("instantaneous cap multiplier A must be finite and > 1");
}

} // namespace

std::string_view to_string(AllocationMode mode) noexcept
{
    switch (mode)
    {
    case AllocationMode::noncausal:
        return "noncausal";
    case AllocationMode::causal:
        return "causal";
    case AllocationMode::short_term:
        return "short_term";
    }
    return "unknown";
}

AllocationMode allocation_mode_from_string(std::string_view name)
{
    if (name == "noncausal")
        return AllocationMode::noncausal;
    if (name == "causal")
        return AllocationMode::causal;
    if (name == "short_term")
        return AllocationMode::short_term;
    throw ArgumentError("unknown allocation mode '" + std::string(name) + "' (noncausal, causal, short_term)");
}

ThresholdPolicy make_threshold(double lambda, double snr)
{
    check_lambda(lambda);
    check_snr(snr);
    return {lambda, lambda * std::log(1.0 / snr)};
}

FeedbackState feedback_bits(const channel::ChannelRealization &real, const ThresholdPolicy &pol)
{
    FeedbackState fs;
    fs.bits.reserve(real.gains2.size());
    for (double g : real.gains2)
    {
        const bool active = g >= pol.h_t;
        fs.bits.push_back(active);
        fs.d_eff += active ? 1 : 0;
    }
    return fs;
}

double gate_budget(std::uint64_t d, double success_prob, double a) { return a * static_cast<double>(d) * success_prob; }

PowerAllocation allocate(const FeedbackState &fs, AllocationMode mode, const channel::SignalSpace &ss, double nc,
                         double h_t, std::optional<double> a)
{
    ss.validate();
    if (!(nc > 0.0))
        throw DomainError("allocate: coherence dimension must be positive");
    if (!(h_t >= 0.0))
        throw DomainError("allocate: threshold must be nonnegative");
    if (mode == AllocationMode::short_term)
    {
        if (!a)
            throw ArgumentError("allocate: short_term mode requires the cap multiplier A");
        check_a(*a);
    }

    const auto d = static_cast<double>(fs.bits.size());
    const double energy = ss.t * ss.p;
    PowerAllocation alloc;
    alloc.mode = mode;
    alloc.q.assign(fs.bits.size(), 0.0);
    if (mode == AllocationMode::short_term)
        alloc.a = a;

    switch (mode)
    {
    case AllocationMode::noncausal: {
        if (fs.d_eff == 0)
            break;
        const double q_on = energy / (nc * static_cast<double>(fs.d_eff));
        for (std::size_t i = 0; i < fs.bits.size(); ++i)
            alloc.q[i] = fs.bits[i] ? q_on : 0.0;
        break;
    }
    case AllocationMode::causal:
    case AllocationMode::short_term: {
        const double e = std::exp(-h_t);
        const double q_on = energy / (nc * d * e);
        const double budget = mode == AllocationMode::short_term ? gate_budget(fs.bits.size(), e, *a) : 0.0;
        std::uint64_t running = 0;
        for (std::size_t i = 0; i < fs.bits.size(); ++i)
        {
            if (!fs.bits[i])
                continue;
            ++running;
            if (mode == AllocationMode::short_term && static_cast<double>(running) > budget)
                continue;
            alloc.q[i] = q_on;
        }
        break;
    }
    }
    return alloc;
}

double instantaneous_power(const PowerAllocation &alloc, const channel::SignalSpace &ss, double nc)
{
    CompensatedSum acc;
    for (double q : alloc.q)
        acc.add(q);
    return nc / ss.t * acc.value();
}

RateCoh0 rate_coh0(double snr)
{
    if (!(snr > 0.0) || !std::isfinite(snr))
        throw DomainError("rate_coh0 requires snr > 0");
    return {specfn::rate_kernel(snr, 1.0, 0.0), snr - snr * snr};
}

double rate_closed_form_causal(double snr, double h_t)
{
    check_snr(snr);
    if (!(h_t >= 0.0))
        throw DomainError("rate_closed_form_causal: threshold must be nonnegative");
    const double s = snr * std::exp(h_t);
    if (!std::isfinite(s))
        return 0.0;
    return specfn::rate_kernel(s, 1.0, h_t);
}

RateBounds rate_bounds_theorem1(double snr, double lambda)
{
    check_snr(snr);
    check_lambda(lambda);
    const double snr_l = std::pow(snr, lambda);
    const double snr_1l = std::pow(snr, 1.0 - lambda);
    const double excess = lambda * snr_1l * std::log(1.0 / snr);
    const double shared = 1.0 + excess;
    const double log_term = std::log1p(excess);
    RateBounds b;
    b.ub = snr_l * (log_term + std::log1p(snr_1l / shared));
    b.lb = snr_l * (log_term + 0.5 * std::log1p(2.0 * snr_1l / shared));
    return b;
}

double first_order_rate(double snr, double lambda)
{
    check_snr(snr);
    if (!(lambda >= 0.0 && lambda < 1.0))
        throw DomainError("first_order_rate: lambda must lie in [0, 1)");
    return (1.0 + lambda * std::log(1.0 / snr)) * snr;
}

double stationarity_residual(double snr, double h_t)
{
    check_snr(snr);
    const double s = snr * std::exp(h_t);
    const double alpha = (1.0 + s * h_t) / s;
    return 1.0 - std::log1p(s * h_t) - specfn::nu_value(alpha) / s;
}

ShortTermAnalysis gate_analysis(std::uint64_t d, double success_prob, double budget)
{
    if (d == 0)
        throw DomainError("gate_analysis: need at least one subspace");
    if (!(success_prob >= 0.0 && success_prob <= 1.0))
        throw DomainError("gate_analysis: success probability outside [0, 1]");
    const auto m = static_cast<std::int64_t>(std::floor(budget));
    ShortTermAnalysis st;
    st.p.resize(d);
    CompensatedSum p_sum;
    CompensatedSum tail_sum;
    for (std::uint64_t i = 1; i <= d; ++i)
    {
        const auto tails = binomial_tails(static_cast<std::int64_t>(i), success_prob, m);
        st.p[i - 1] = tails.cdf;
        p_sum.add(tails.cdf);
        tail_sum.add(tails.sf);
    }
    st.fraction = p_sum.value() / static_cast<double>(d);
    st.tail_mass = tail_sum.value() / static_cast<double>(d);
    return st;
}

ShortTermAnalysis pi_exact(std::uint64_t d, double h_t, double a)
{
    check_a(a);
    if (!(h_t >= 0.0))
        throw DomainError("pi_exact: threshold must be nonnegative");
    const double e = std::exp(-h_t);
    auto st = gate_analysis(d, e, gate_budget(d, e, a));
    st.lower_bound_l = prop1_exact_form(d, e, a);
    return st;
}

double st_fraction_conditional(std::uint64_t d, double success_prob, double budget)
{
    if (d == 0)
        throw DomainError("st_fraction_conditional: need at least one subspace");
    const auto m = static_cast<std::int64_t>(std::floor(budget)) - 1;
    CompensatedSum acc;
    for (std::uint64_t i = 1; i <= d; ++i)
        acc.add(binomial_tails(static_cast<std::int64_t>(i - 1), success_prob, m).cdf);
    return acc.value() / static_cast<double>(d);
}

double prop1_exact_form(std::uint64_t d, double success_prob, double a)
{
    check_a(a);
    const double e = success_prob;
    if (!(e > 0.0 && e < 1.0))
        throw DomainError("prop1_exact_form: success probability must lie in (0, 1)");
    const double kappa = e / (4.0 * (1.0 - e));
    const auto dd = static_cast<double>(d);
    const double em1k = std::expm1(kappa);
    if (a < 2.0)
    {
        // 1 - [e^{-kappa(AD/2 - 1)} / (e^kappa - 1) + (1 + D(1 - A/2)) e^{-(A-1)^2 D kappa}]
        const double first = std::exp(-kappa * (a * dd / 2.0 - 1.0)) / em1k;
        const double second = (1.0 + dd * (1.0 - a / 2.0)) * std::exp(-(a - 1.0) * (a - 1.0) * dd * kappa);
        return 1.0 - (first + second);
    }
    // A >= 2: 1 - e^{-AD kappa} sum_{i=1}^{D} e^{i kappa} = 1 - e^{-kappa(AD-1)} (e^{D kappa} - 1) / (e^kappa - 1)
    const double dk = dd * kappa;
    const double log_growth = dk > 30.0 ? dk + std::log1p(-std::exp(-dk)) : std::log(std::expm1(dk));
    return 1.0 - std::exp(-kappa * (a * dd - 1.0) + log_growth) / em1k;
}

Prop1Bound prop1_lower_bound(std::uint64_t d, double snr, double lambda, double a)
{
    check_snr(snr);
    check_lambda(lambda);
    check_a(a);
    if (d == 0)
        throw DomainError("prop1_lower_bound: need at least one subspace");
    const double h_t = lambda * std::log(1.0 / snr);
    Prop1Bound b;
    b.exact_form = prop1_exact_form(d, std::exp(-h_t), a);

    const double s = std::pow(snr, lambda);
    const auto dd = static_cast<double>(d);
    const double base = std::log1p(s / 4.0);
    if (a < 2.0)
        b.simplified = 1.0 - 4.0 / s * std::exp(-base * (a * dd / 2.0 - 1.0)) -
                       dd * (1.0 - a / 2.0) * std::exp(-base * dd * (a - 1.0) * (a - 1.0));
    else
        b.simplified = 1.0 - 4.0 / s * std::exp(-base * dd * (a - 1.0));
    return b;
}

double bernstein_tail(std::uint64_t i, std::uint64_t d, double h_t, double a)
{
    check_a(a);
    if (i == 0 || i > d)
        throw DomainError("bernstein_tail: index must lie in [1, D]");
    const double e = std::exp(-h_t);
    const double ad = a * static_cast<double>(d);
    const auto id = static_cast<double>(i);
    const double deviation = ad - id;
    if (!(deviation > 0.0))
        return 1.0;
    if (e >= 1.0)
        return 0.0;
    const double kappa = e / (4.0 * (1.0 - e));
    const auto half = std::floor(ad / 2.0);
    const double bound = id <= half ? std::exp(-deviation * kappa) : std::exp(-deviation * deviation * kappa / id);
    return std::min(1.0, bound);
}

DeffVerdict deff_condition(const DofScaling &d_of_snr, double lambda)
{
    if (!(d_of_snr.exponent >= 0.0))
        throw DomainError("deff_condition: D exponent must be nonnegative");
    if (!(d_of_snr.coefficient > 0.0))
        throw DomainError("deff_condition: D coefficient must be positive");
    check_lambda(lambda);
    return lambda < d_of_snr.exponent ? DeffVerdict::diverges : DeffVerdict::converges_to_minus_infinity;
}

double appendix_a_gap_bound(std::uint64_t d, double h_t)
{
    if (d == 0)
        throw DomainError("appendix_a_gap_bound: need at least one subspace");
    const double e = std::exp(-h_t);
    const auto dd = static_cast<double>(d);
    const double num = dd * dd * e - 4.0 * dd * e + 3.0 * dd - e + 1.0;
    const double den = (dd + 1.0) * (dd * e - e + 1.0);
    return std::sqrt(num / den);
}

// ---- Monte Carlo --------------------------------------------------------------------------

namespace
{

struct TrialRates
{
    double noncausal = 0.0;
    double causal = 0.0;
    double short_term = 0.0;
    double power_ratio = 0.0; ///< P_inst / P of the evaluated mode
};

// Per-dimension rates of one realization. Energies are normalized so that T P / (N_c D) = snr.
TrialRates evaluate_trial(std::span<const double> gains, double snr, double h_t, double e, double budget,
                          AllocationMode mode, bool all_modes)
{
    const auto d = static_cast<double>(gains.size());
    std::uint64_t d_eff = 0;
    for (double g : gains)
        d_eff += g >= h_t ? 1 : 0;

    TrialRates r;
    const double q_causal = snr / e;
    const bool want_nc = all_modes || mode == AllocationMode::noncausal;
    const bool want_c = all_modes || mode == AllocationMode::causal;
    const bool want_st = all_modes || mode == AllocationMode::short_term;
    const double q_nc = d_eff > 0 ? snr * d / static_cast<double>(d_eff) : 0.0;

    CompensatedSum nc, c, st;
    std::uint64_t running = 0;
    std::uint64_t admitted = 0;
    for (double g : gains)
    {
        if (!(g >= h_t))
            continue;
        ++running;
        if (want_nc)
            nc.add(std::log1p(q_nc * g));
        if (want_c || want_st)
        {
            const double term = std::log1p(q_causal * g);
            if (want_c)
                c.add(term);
            if (want_st && static_cast<double>(running) <= budget)
            {
                st.add(term);
                ++admitted;
            }
        }
    }
    r.noncausal = nc.value() / d;
    r.causal = c.value() / d;
    r.short_term = st.value() / d;
    switch (mode)
    {
    case AllocationMode::noncausal:
        r.power_ratio = d_eff > 0 ? 1.0 : 0.0;
        break;
    case AllocationMode::causal:
        r.power_ratio = static_cast<double>(d_eff) / (d * e);
        break;
    case AllocationMode::short_term:
        r.power_ratio = static_cast<double>(admitted) / (d * e);
        break;
    }
    return r;
}

void check_mc(std::uint64_t d, double snr, double h_t, std::uint64_t trials)
{
    if (d == 0)
        throw DomainError("Monte Carlo: need at least one subspace");
    if (!(snr > 0.0) || !std::isfinite(snr))
        throw DomainError("Monte Carlo: snr must be positive");
    if (!(h_t >= 0.0) || !std::isfinite(h_t))
        throw DomainError("Monte Carlo: threshold must be finite and nonnegative");
    if (trials < 100)
        throw ArgumentError("Monte Carlo: at least 100 trials required");
}

} // namespace

McEstimate mc_rate(const McConfig &cfg)
{
    check_mc(cfg.d, cfg.snr, cfg.h_t, cfg.trials);
    if (cfg.mode == AllocationMode::short_term)
    {
        if (!cfg.a)
            throw ArgumentError("mc_rate: short_term mode requires the cap multiplier A");
        check_a(*cfg.a);
    }
    const double e = std::exp(-cfg.h_t);
    const double budget = cfg.mode == AllocationMode::short_term ? gate_budget(cfg.d, e, *cfg.a) : 0.0;
    const unsigned threads = cfg.threads ? cfg.threads : default_thread_count();

    const auto per_trial = parallel_map(cfg.trials, threads, [&](std::size_t t) {
        thread_local std::vector<double> gains;
        channel::sample_realization_into(gains, cfg.d, cfg.seed, t);
        const auto r = evaluate_trial(gains, cfg.snr, cfg.h_t, e, budget, cfg.mode, false);
        double rate = 0.0;
        switch (cfg.mode)
        {
        case AllocationMode::noncausal:
            rate = r.noncausal;
            break;
        case AllocationMode::causal:
            rate = r.causal;
            break;
        case AllocationMode::short_term:
            rate = r.short_term;
            break;
        }
        return std::pair<double, double>{rate, r.power_ratio};
    });

    std::vector<double> rates(per_trial.size());
    McEstimate est;
    for (std::size_t t = 0; t < per_trial.size(); ++t)
    {
        rates[t] = per_trial[t].first;
        est.max_power_ratio = std::max(est.max_power_ratio, per_trial[t].second);
    }
    const auto ms = mean_stderr(rates);
    est.mean = ms.mean;
    est.stderr_ = ms.stderr_;
    est.trials = cfg.trials;
    return est;
}

GapEstimate mc_gap(std::uint64_t d, double snr, double h_t, std::uint64_t trials, std::uint64_t seed, unsigned threads)
{
    check_mc(d, snr, h_t, trials);
    const double e = std::exp(-h_t);
    threads = threads ? threads : default_thread_count();
    const auto per_trial = parallel_map(trials, threads, [&](std::size_t t) {
        thread_local std::vector<double> gains;
        channel::sample_realization_into(gains, d, seed, t);
        return evaluate_trial(gains, snr, h_t, e, 0.0, AllocationMode::causal, true);
    });

    std::vector<double> nc(trials), c(trials), diff(trials);
    for (std::size_t t = 0; t < trials; ++t)
    {
        nc[t] = per_trial[t].noncausal;
        c[t] = per_trial[t].causal;
        diff[t] = nc[t] - c[t];
    }
    GapEstimate g;
    const auto m_nc = mean_stderr(nc);
    const auto m_c = mean_stderr(c);
    const auto m_d = mean_stderr(diff);
    g.noncausal = {m_nc.mean, m_nc.stderr_, trials, 1.0};
    g.causal = {m_c.mean, m_c.stderr_, trials, 0.0};
    g.diff_mean = m_d.mean;
    g.diff_stderr = m_d.stderr_;
    g.relative_gap = std::abs(m_d.mean) / m_nc.mean;
    g.relative_stderr = m_d.stderr_ / m_nc.mean;
    return g;
}

} // namespace sparsefb::feedback
