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

// Packet-configuration planning: how T and W must scale together so that the coherence
// dimension N_c = snr^-mu grows fast enough (condition C1) while E[D_eff] - h_t still diverges
// (condition C2). Outputs are exponents and verdicts; constants hidden in "~" are set to 1.

#pragma once

#include "sparsefb/channel.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace sparsefb::planner
{

enum class Regime
{
    rich,
    doppler_sparse,
    delay_sparse,
    doubly_sparse,
};

[[nodiscard]] std::string_view to_string(Regime r) noexcept;

/// A sparsity exponent that may sit at one of the open-interval limits.
struct SparsityExponent
{
    enum class Kind
    {
        to_zero, ///< delta -> 0 (very sparse)
        value,   ///< delta strictly inside (0, 1)
        to_one,  ///< delta -> 1 (rich)
    };

    Kind kind = Kind::value;
    double delta = 0.5; ///< meaningful only for Kind::value

    [[nodiscard]] static SparsityExponent limit_zero() noexcept { return {Kind::to_zero, 0.0}; }
    [[nodiscard]] static SparsityExponent limit_one() noexcept { return {Kind::to_one, 1.0}; }
    /// Throws DomainError unless 0 < delta < 1.
    [[nodiscard]] static SparsityExponent of(double delta);
};

struct ConditionVerdict
{
    bool c1_ok = false;
    bool c2_ok = false;
    double lambda_cap = 0.0; ///< largest admissible lambda, in [0, 1]; 0 means no lambda works
};

struct PeakyRequirement
{
    double gamma_min = 0.0;
    std::string rule; ///< human-readable statement of the relaxed coherence condition
};

struct PacketPlan
{
    double rho = 0.0;
    double t_exponent = 0.0;
    double w_exponent = 0.0;
    double mu = 0.0;
    double gamma = 0.0;
    Regime regime = Regime::doubly_sparse;
    bool c1_ok = false;
    bool c2_ok = false;
    double lambda_cap = 0.0;
    std::string narrative;
};

/// (1 - delta2) / delta1; empty when delta1 -> 0 is not allowed (delta1 == 0 means no Doppler sparsity
/// helps, which is an infeasibility verdict rather than a number).
[[nodiscard]] std::optional<double> rho_min_coherent(double delta1, double delta2);

/// (rho/(1+rho), 1/(1+rho)).
[[nodiscard]] std::pair<double, double> packet_split(double rho);

/// T ~ W^{mu/(1-delta1)} when only Doppler sparsity is present.
[[nodiscard]] double t_of_w_doppler_only(double mu, double delta1);

[[nodiscard]] PeakyRequirement peaky_requirement(double delta2);

/// T = (T_m^d2 W_d^d1)^{1/(1-d1)} W^{(mu-1+d2)/(1-d1)} / P^{mu/(1-d1)}.
[[nodiscard]] double t_of_w_canonical(const channel::ChannelParams &cp, double mu, double p, double w);

/// D ~ snr^{(delta1(1-mu) - delta2)/(1-delta1)}.
[[nodiscard]] double d_scaling_exponent(double delta1, double delta2, double mu);

/// c1: mu > 1. c2: mu > (1-delta2)/delta1. lambda_cap = min(1, (delta2 + (mu-1) delta1)/(1-delta1)).
[[nodiscard]] ConditionVerdict conditions_c1_c2(double delta1, double delta2, double mu);

/// Slowest admissible T ~ W^rho growth for delta1 = delta2 = delta.
[[nodiscard]] double symmetric_rho_min(double delta);

/// Classifies the channel and returns the matching plan. `mu` and `gamma` feed the verdicts.
[[nodiscard]] PacketPlan regime_classify(SparsityExponent delta1, SparsityExponent delta2, double mu,
                                         double gamma = 0.0);

} // namespace sparsefb::planner
