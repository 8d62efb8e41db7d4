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

// One bit of feedback per coherence subspace with perfect receiver CSI.
//
// The receiver reports b_i = 1{|h_i|^2 >= h_t}; the transmitter powers only flagged subspaces.
// Three allocations are modeled:
//   noncausal   q_i = T P / (N_c D_eff) b_i           (instantaneous power exactly P)
//   causal      q_i = T P / (N_c D e^{-h_t}) b_i       (average power P)
//   short_term  causal, gated by  sum_{j<=i} b_j <= A D e^{-h_t}  (instantaneous power <= A P)
//
// With the threshold h_t = lambda ln(1/snr) the causal rate behaves like (1 + h_t) snr at low SNR.

#pragma once

#include "sparsefb/binomial.hpp"
#include "sparsefb/channel.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace sparsefb::feedback
{

struct ThresholdPolicy
{
    double lambda = 0.0;
    double h_t = 0.0; ///< threshold on |h|^2
};

struct FeedbackState
{
    std::vector<bool> bits;
    std::uint64_t d_eff = 0;
};

enum class AllocationMode
{
    noncausal,
    causal,
    short_term,
};

[[nodiscard]] std::string_view to_string(AllocationMode mode) noexcept;
[[nodiscard]] AllocationMode allocation_mode_from_string(std::string_view name);

struct PowerAllocation
{
    AllocationMode mode = AllocationMode::causal;
    std::vector<double> q;  ///< per-symbol energy in each subspace
    std::optional<double> a; ///< instantaneous cap multiplier, short_term only
};

/// Exact binomial analysis of the short-term gate.
struct ShortTermAnalysis
{
    std::vector<double> p;     ///< p_i = Pr(sum_{j<=i} chi_j <= A D E), i = 1..D
    double fraction = 0.0;     ///< sum p_i / D
    double tail_mass = 0.0;    ///< 1 - fraction, summed from the upper tails directly
    double lower_bound_l = 0.0; ///< Bernstein lower bound on fraction
};

struct Prop1Bound
{
    double exact_form = 0.0; ///< closed-form Bernstein bound (1 < A < 2, or A >= 2 geometric sum)
    double simplified = 0.0; ///< leading-order form with E replaced by snr^lambda
};

struct RateCoh0
{
    double exact = 0.0;
    double approx = 0.0; ///< snr - snr^2
};

struct RateBounds
{
    double lb = 0.0;
    double ub = 0.0;
};

enum class DeffVerdict
{
    diverges,
    converges_to_minus_infinity,
};

/// D = c snr^{-exponent}.
struct DofScaling
{
    double coefficient = 1.0;
    double exponent = 0.0;
};

// ---- thresholds and allocations -----------------------------------------------------------

[[nodiscard]] ThresholdPolicy make_threshold(double lambda, double snr);

/// bits[i] = gains2[i] >= h_t (ties are active).
[[nodiscard]] FeedbackState feedback_bits(const channel::ChannelRealization &real, const ThresholdPolicy &pol);

/// Power allocation over the D = bits.size() subspaces for signal space `ss` with coherence
/// dimension `nc`. `a` is required (and must exceed 1) in short_term mode.
[[nodiscard]] PowerAllocation allocate(const FeedbackState &fs, AllocationMode mode, const channel::SignalSpace &ss,
                                       double nc, double h_t, std::optional<double> a = std::nullopt);

/// (N_c / T) sum_i q_i.
[[nodiscard]] double instantaneous_power(const PowerAllocation &alloc, const channel::SignalSpace &ss, double nc);

/// Real-valued short-term budget A D e^{-h_t}; the gate admits integer running counts <= budget.
[[nodiscard]] double gate_budget(std::uint64_t d, double success_prob, double a);

// ---- closed forms -------------------------------------------------------------------------

[[nodiscard]] RateCoh0 rate_coh0(double snr);

/// Exact causal-scheme rate e^{-h}[ln(1 + snr h e^h) + nu_alpha], alpha = (1 + snr h e^h)/(snr e^h).
[[nodiscard]] double rate_closed_form_causal(double snr, double h_t);

/// Two-sided bounds on the closed-form rate for h_t = lambda ln(1/snr).
[[nodiscard]] RateBounds rate_bounds_theorem1(double snr, double lambda);

/// (1 + lambda ln(1/snr)) snr.
[[nodiscard]] double first_order_rate(double snr, double lambda);

/// Stationarity residual 1 - ln(1 + snr h e^h) - nu_alpha / (snr e^h); zero at the rate-maximizing h.
[[nodiscard]] double stationarity_residual(double snr, double h_t);

// ---- short-term gate ----------------------------------------------------------------------

/// p_i for i = 1..d with success probability e^{-h_t}, plus fraction and Bernstein bound.
[[nodiscard]] ShortTermAnalysis pi_exact(std::uint64_t d, double h_t, double a);

/// Same analysis for an arbitrary per-subspace success probability and real budget.
[[nodiscard]] ShortTermAnalysis gate_analysis(std::uint64_t d, double success_prob, double budget);

/// (1/D) sum_i Pr(Bin(i-1, E) <= floor(budget) - 1): the exact factor linking the gated rate to
/// the causal rate, conditioning on the subspace's own bit being set.
[[nodiscard]] double st_fraction_conditional(std::uint64_t d, double success_prob, double budget);

[[nodiscard]] Prop1Bound prop1_lower_bound(std::uint64_t d, double snr, double lambda, double a);

/// Bernstein bound on the fraction in terms of E directly. Branch: 1 < A < 2 or A >= 2.
[[nodiscard]] double prop1_exact_form(std::uint64_t d, double success_prob, double a);

/// Upper bound on 1 - p_i.
[[nodiscard]] double bernstein_tail(std::uint64_t i, std::uint64_t d, double h_t, double a);

/// E[D_eff] - h_t ~ c snr^{lambda - e} + lambda ln snr: diverges iff lambda < e.
[[nodiscard]] DeffVerdict deff_condition(const DofScaling &d_of_snr, double lambda);

// ---- non-causal vs causal gap -------------------------------------------------------------

/// sqrt((D^2 E - 4DE + 3D - E + 1) / ((D+1)(DE - E + 1))), E = e^{-h_t}.
[[nodiscard]] double appendix_a_gap_bound(std::uint64_t d, double h_t);

// ---- Monte Carlo --------------------------------------------------------------------------

struct McConfig
{
    AllocationMode mode = AllocationMode::causal;
    std::uint64_t d = 1;
    double snr = 0.0;
    double h_t = 0.0;
    std::optional<double> a;
    std::uint64_t trials = 100;
    std::uint64_t seed = 0;
    unsigned threads = 0; ///< 0 = hardware concurrency
};

struct McEstimate
{
    double mean = 0.0;
    double stderr_ = 0.0;
    std::uint64_t trials = 0;
    double max_power_ratio = 0.0; ///< max over trials of P_inst / P
};

/// Per-dimension rate (1/D) sum_i ln(1 + q_i |h_i|^2) averaged over independent realizations.
/// Trial t draws its gains from CounterRng(seed, t).
[[nodiscard]] McEstimate mc_rate(const McConfig &cfg);

struct GapEstimate
{
    McEstimate noncausal;
    McEstimate causal;
    double diff_mean = 0.0;   ///< E[C_nc - C_c], paired over common realizations
    double diff_stderr = 0.0;
    double relative_gap = 0.0;    ///< |diff_mean| / noncausal.mean
    double relative_stderr = 0.0; ///< diff_stderr / noncausal.mean
};

/// Non-causal and causal rates on common random numbers.
[[nodiscard]] GapEstimate mc_gap(std::uint64_t d, double snr, double h_t, std::uint64_t trials, std::uint64_t seed,
                                 unsigned threads = 0);

} // namespace sparsefb::feedback
