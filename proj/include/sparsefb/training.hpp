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

// Training-based signaling without prior receiver CSI.
//
// Each coherence subspace spends one dimension on a pilot of energy E_tr = eta N_c snr and the
// remaining N_c - 1 on data. The receiver forms the MMSE estimate h^ (variance E_tr / (1 + E_tr))
// and feeds back 1{|h^|^2 >= h_t^train}.

#pragma once

#include "sparsefb/channel.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace sparsefb::training
{

struct TrainingConfig
{
    double eta = 0.0;
    double n_c = 0.0;
    double snr = 0.0;
    double h_t_train = 0.0;

    [[nodiscard]] double e_tr() const noexcept { return eta * n_c * snr; }
    [[nodiscard]] double est_var() const noexcept { return e_tr() / (1.0 + e_tr()); }
    [[nodiscard]] double err_var() const noexcept { return 1.0 / (1.0 + e_tr()); }

    /// Throws DomainError outside eta in (0,1), n_c > 1, snr in (0,1), h_t_train >= 0.
    void validate() const;
};

struct TrainingDerived
{
    double kappa1 = 0.0; ///< Pr(|h^|^2 >= h_t^train)
    double kappa2 = 0.0;
    double a1 = 0.0;
    double a2 = 0.0;
};

struct EstimatedChannel
{
    std::vector<double> est_gains2; ///< |h^_i|^2
    double err_var = 0.0;
};

[[nodiscard]] TrainingDerived derive(const TrainingConfig &cfg);

/// Energy split maximizing the no-feedback mutual information. Requires n_c > 2.
[[nodiscard]] double eta_star(double n_c, double snr);

/// E_tr / (1 + E_tr) * lambda ln(1/snr).
[[nodiscard]] double h_t_train_star(double eta, double n_c, double snr, double lambda);

/// kappa1 [ln(1 + A1) + nu(A2)], written out in the original variables.
[[nodiscard]] double rate_training_closed_form(const TrainingConfig &cfg);

/// Same quantity as rate_kernel(s, E_tr/(1+E_tr), h_t^train) with
/// s = q (1+E_tr)/(1+E_tr+q), q = (1-eta) snr N_c / ((N_c-1) kappa1).
[[nodiscard]] double rate_training_kernel(const TrainingConfig &cfg);

/// (1 - 1/N_c) * rate_training_closed_form: rate per total signal dimension (pilots included).
[[nodiscard]] double rate_training_per_dimension(const TrainingConfig &cfg);

/// (1-eta)(N_c/(N_c-1))(E_tr/(1+E_tr))(1 + h_t) snr with h_t = lambda ln(1/snr).
/// Only meaningful at low SNR; see training_lower_bound_valid.
[[nodiscard]] double rate_training_lower_bound(double eta, double n_c, double snr, double lambda);

/// The lower bound relies on a low-SNR approximation; comparisons are asserted only for snr <= 1e-2.
[[nodiscard]] constexpr bool training_lower_bound_valid(double snr) noexcept { return snr <= 1e-2; }

/// Lower bounds on the optimized training rate with h_t^train = epsilon ln(1/snr).
/// Without `a`: requires 1 + x < y <= 1 + 2x. With `a` (E_tr fixed to a): requires a > eps/(1-eps).
[[nodiscard]] double appendix_c_lower_bounds(double epsilon, double x, double y, double snr,
                                             std::optional<double> a = std::nullopt);

/// y = sqrt(E_tr) h + w, h^ = sqrt(E_tr)/(1+E_tr) y, noise w ~ CN(0,1) from CounterRng(seed, stream).
[[nodiscard]] EstimatedChannel mmse_estimate(const channel::ComplexRealization &truth, double e_tr, std::uint64_t seed,
                                             std::uint64_t stream = 0);

/// (1/D) sum_i Pr(Bin(i, kappa1) <= floor(A D kappa1 / (1-eta))), E_tr = eta n_c snr.
[[nodiscard]] double st_fraction_training(std::uint64_t d, double eta, double n_c, double snr, double h_t_train,
                                          double a);

/// closed_form / first_order along N_c = snr^-mu, eta = eta*, h_t^train = h_t_train_star.
[[nodiscard]] std::vector<double> theorem2_ratio(double mu, double lambda, std::span<const double> snr_grid);

// ---- Monte Carlo --------------------------------------------------------------------------

struct TrainingMcConfig
{
    TrainingConfig cfg;
    std::uint64_t d = 1;
    std::uint64_t trials = 100;
    std::uint64_t seed = 0;
    unsigned threads = 0;
};

struct TrainingMcEstimate
{
    double mean = 0.0;
    double stderr_ = 0.0;
    std::uint64_t trials = 0;
    double nc_used = 0.0; ///< N_c rounded to the nearest integer >= 3
};

/// Per-data-symbol rate (1/D) sum_i ln(1 + s |h^_i|^2) 1{|h^_i|^2 >= h_t^train} with MMSE estimates
/// simulated from fresh channel and pilot-noise draws. Trial t uses CounterRng(seed, t).
[[nodiscard]] TrainingMcEstimate mc_training_rate(const TrainingMcConfig &mc);

/// N_c rounded to the nearest integer, at least 3.
[[nodiscard]] double round_coherence(double n_c);

} // namespace sparsefb::training
