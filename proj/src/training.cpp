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

#include "sparsefb/training.hpp"

#include "sparsefb/binomial.hpp"
#include "sparsefb/errors.hpp"
#include "sparsefb/feedback.hpp"
#include "sparsefb/numeric.hpp"
#include "sparsefb/rng.hpp"
#include "sparsefb/specfn.hpp"

#include <cmath>
#include <string>

namespace sparsefb::training
{
namespace
{

void check_snr(double snr)
{
    if (!(snr > 0.0 && snr < 1.0))
        throw DomainError("training: snr must lie in (0, 1), got " + std::to_string(snr));
}

void check_eta(double eta)
{
    if (!(eta > 0.0 && eta < 1.0))
        throw DomainError("training: eta must lie in (0, 1), got " + std::to_string(eta));
}

} // namespace

void TrainingConfig::validate() const
{
    check_eta(eta);
    check_snr(snr);
    if (!(n_c > 1.0) || !std::isfinite(n_c))
        throw DomainError("training: coherence dimension must exceed 1, got " + std::to_string(n_c));
    if (!(h_t_train >= 0.0) || !std::isfinite(h_t_train))
        throw DomainError("training: threshold must be finite and nonnegative");
}

TrainingDerived derive(const TrainingConfig &cfg)
{
    cfg.validate();
    const double e = cfg.e_tr();
    const double snr = cfg.snr;
    const double eta = cfg.eta;
    TrainingDerived d;
    d.kappa1 = std::exp(-cfg.h_t_train * (1.0 + e) / e);
    d.kappa2 = eta * (cfg.n_c - 1.0) * snr + (1.0 - 1.0 / cfg.n_c);
    const double lead = (1.0 - eta) * (1.0 + e) * cfg.h_t_train * snr;
    const double k12 = d.kappa1 * d.kappa2;
    d.a1 = lead / ((1.0 - eta) * snr + k12);
    d.a2 = (lead + (1.0 - eta) * snr + k12) / (eta * (1.0 - eta) * cfg.n_c * snr * snr);
    return d;
}

double eta_star(double n_c, double snr)
{
    check_snr(snr);
    if (!(n_c > 2.0) || !std::isfinite(n_c))
        throw DomainError("eta_star: coherence dimension must exceed 2, got " + std::to_string(n_c));
    const double ns = n_c * snr;
    const double base = ns + n_c - 1.0;
    return base / ((n_c - 2.0) * ns) * (std::sqrt(1.0 + ns * (n_c - 2.0) / base) - 1.0);
}

double h_t_train_star(double eta, double n_c, double snr, double lambda)
{
    check_snr(snr);
    if (!(eta >= 0.0 && eta < 1.0))
        throw DomainError("h_t_train_star: eta must lie in [0, 1)");
    if (!(n_c > 0.0))
        throw DomainError("h_t_train_star: coherence dimension must be positive");
    const double e = eta * n_c * snr;
    return e / (1.0 + e) * lambda * std::log(1.0 / snr);
}

double rate_training_closed_form(const TrainingConfig &cfg)
{
    const auto d = derive(cfg);
    if (d.kappa1 == 0.0)
        return 0.0;
    return d.kappa1 * (std::log1p(d.a1) + specfn::nu_value(d.a2));
}

double rate_training_kernel(const TrainingConfig &cfg)
{
    cfg.validate();
    const double e = cfg.e_tr();
    const double kappa1 = std::exp(-cfg.h_t_train * (1.0 + e) / e);
    if (kappa1 == 0.0)
        return 0.0;
    // s = q(1+e)/(1+e+q) written through 1/q, which stays finite when kappa1 is subnormal.
    const double inv_q = (cfg.n_c - 1.0) * kappa1 / ((1.0 - cfg.eta) * cfg.snr * cfg.n_c);
    const double s = (1.0 + e) / (1.0 + (1.0 + e) * inv_q);
    return specfn::rate_kernel(s, cfg.est_var(), cfg.h_t_train);
}

double rate_training_per_dimension(const TrainingConfig &cfg)
{
    return (1.0 - 1.0 / cfg.n_c) * rate_training_closed_form(cfg);
}

double rate_training_lower_bound(double eta, double n_c, double snr, double lambda)
{
    check_snr(snr);
    if (!(n_c > 1.0))
        throw DomainError("rate_training_lower_bound: coherence dimension must exceed 1");
    if (!(eta >= 0.0 && eta <= 1.0))
        throw DomainError("rate_training_lower_bound: eta must lie in [0, 1]");
    const double e = eta * n_c * snr;
    const double h_t = lambda * std::log(1.0 / snr);
    return (1.0 - eta) * (n_c / (n_c - 1.0)) * (e / (1.0 + e)) * (1.0 + h_t) * snr;
}

double appendix_c_lower_bounds(double epsilon, double x, double y, double snr, std::optional<double> a)
{
    check_snr(snr);
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw RegimeError("appendix_c_lower_bounds: epsilon must lie in (0, 1)");
    const double log_inv = std::log(1.0 / snr);
    if (a)
    {
        const double av = *a;
        if (!(av > epsilon / (1.0 - epsilon)))
            throw RegimeError("appendix_c_lower_bounds: requires a > epsilon / (1 - epsilon)");
        const double p = epsilon * (1.0 + av) / av;
        return std::pow(snr, p) * std::log1p(epsilon * std::pow(snr, 1.0 - p) * log_inv) + av / (1.0 + av) * snr;
    }
    if (!(x >= 0.0))
        throw RegimeError("appendix_c_lower_bounds: requires x >= 0");
    if (!(1.0 + x < y))
        throw RegimeError("appendix_c_lower_bounds: requires 1 + x < y");
    if (!(y <= 1.0 + 2.0 * x))
        throw RegimeError("appendix_c_lower_bounds: requires y <= 1 + 2x");
    const double ratio = -std::expm1(x * std::log(snr)) / -std::expm1(y * std::log(snr));
    return std::pow(snr, epsilon) * std::log1p(epsilon * log_inv * std::pow(snr, 1.0 - epsilon) * ratio) + snr;
}

EstimatedChannel mmse_estimate(const channel::ComplexRealization &truth, double e_tr, std::uint64_t seed,
                               std::uint64_t stream)
{
    if (!(e_tr > 0.0) || !std::isfinite(e_tr))
        throw DomainError("mmse_estimate: training energy must be finite and positive");
    EstimatedChannel est;
    est.err_var = 1.0 / (1.0 + e_tr);
    est.est_gains2.reserve(truth.gains.size());
    CounterRng rng(seed, stream);
    const double amp = std::sqrt(e_tr);
    const double gain = amp / (1.0 + e_tr);
    for (const auto &h : truth.gains)
    {
        const auto y = amp * h + rng.complex_normal();
        est.est_gains2.push_back(std::norm(gain * y));
    }
    return est;
}

double st_fraction_training(std::uint64_t d, double eta, double n_c, double snr, double h_t_train, double a)
{
    check_eta(eta);
    check_snr(snr);
    if (!(a > 1.0))
        throw DomainError("st_fraction_training: cap multiplier A must exceed 1");
    if (!(n_c > 0.0))
        throw DomainError("st_fraction_training: coherence dimension must be positive");
    if (!(h_t_train >= 0.0))
        throw DomainError("st_fraction_training: threshold must be nonnegative");
    const double e = eta * n_c * snr;
    const double kappa1 = std::exp(-h_t_train * (1.0 + e) / e);
    const double budget = a * static_cast<double>(d) * kappa1 / (1.0 - eta);
    return feedback::gate_analysis(d, kappa1, budget).fraction;
}

std::vector<double> theorem2_ratio(double mu, double lambda, std::span<const double> snr_grid)
{
    if (!(mu > 0.0))
        throw DomainError("theorem2_ratio: mu must be positive");
    std::vector<double> out;
    out.reserve(snr_grid.size());
    for (double snr : snr_grid)
    {
        check_snr(snr);
        TrainingConfig cfg;
        cfg.snr = snr;
        cfg.n_c = std::pow(snr, -mu);
        cfg.eta = eta_star(cfg.n_c, snr);
        cfg.h_t_train = h_t_train_star(cfg.eta, cfg.n_c, snr, lambda);
        out.push_back(rate_training_closed_form(cfg) / feedback::first_order_rate(snr, lambda));
    }
    return out;
}

double round_coherence(double n_c)
{
    if (!(n_c > 0.0) || !std::isfinite(n_c))
        throw DomainError("round_coherence: coherence dimension must be finite and positive");
    return std::max(3.0, std::nearbyint(n_c));
}

TrainingMcEstimate mc_training_rate(const TrainingMcConfig &mc)
{
    if (mc.d == 0)
        throw DomainError("mc_training_rate: need at least one subspace");
    if (mc.trials < 100)
        throw ArgumentError("mc_training_rate: at least 100 trials required");
    TrainingConfig cfg = mc.cfg;
    cfg.n_c = round_coherence(cfg.n_c);
    cfg.validate();

    const double e = cfg.e_tr();
    const double kappa1 = std::exp(-cfg.h_t_train * (1.0 + e) / e);
    // s = q(1+e)/(1+e+q) written through 1/q, which stays finite when kappa1 is subnormal.
    const double inv_q = (cfg.n_c - 1.0) * kappa1 / ((1.0 - cfg.eta) * cfg.snr * cfg.n_c);
    const double s = (1.0 + e) / (1.0 + (1.0 + e) * inv_q);
    const double amp = std::sqrt(e);
    const double gain = amp / (1.0 + e);
    const auto dd = static_cast<double>(mc.d);
    const unsigned threads = mc.threads ? mc.threads : default_thread_count();

    const auto rates = parallel_map(mc.trials, threads, [&](std::size_t t) {
        CounterRng rng(mc.seed, t);
        CompensatedSum acc;
        for (std::uint64_t i = 0; i < mc.d; ++i)
        {
            const auto h = rng.complex_normal();
            const auto w = rng.complex_normal();
            const double g = std::norm(gain * (amp * h + w));
            if (g >= cfg.h_t_train)
                acc.add(std::log1p(s * g));
        }
        return acc.value() / dd;
    });
    const auto ms = mean_stderr(rates);
    return {ms.mean, ms.stderr_, mc.trials, cfg.n_c};
}

} // namespace sparsefb::training
