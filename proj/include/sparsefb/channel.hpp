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

// Sparse delay-Doppler channel: power-law diversity scaling, coherence profile and i.i.d.
// Rayleigh block-fading realizations over D coherence subspaces.
//
// Diversities are power laws with implicit constant 1:
//   D_T = (T W_d)^delta1,  D_W = (W T_m)^delta2,  D = D_T D_W,  N_c = T W / D.
// Only |h_i|^2 is ever needed, so realizations hold Exp(1) power gains.

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace sparsefb::channel
{

/// Physical channel constants.
struct ChannelParams
{
    double t_m = 0.0;    ///< delay spread [s]
    double w_d = 0.0;    ///< Doppler spread [Hz]
    double delta1 = 0.0; ///< Doppler sparsity exponent, (0, 1)
    double delta2 = 0.0; ///< delay sparsity exponent, (0, 1)

    /// Throws DomainError unless underspread (t_m w_d < 1) with both exponents inside (0, 1).
    void validate() const;
};

/// Signaling choices.
struct SignalSpace
{
    double t = 0.0; ///< duration [s]
    double w = 0.0; ///< bandwidth [Hz]
    double p = 0.0; ///< average power (linear)

    [[nodiscard]] double n() const noexcept { return t * w; }
    [[nodiscard]] double snr() const noexcept { return p / w; }

    /// Throws DomainError unless t w >= 1 and p / w > 0.
    void validate() const;
};

struct DofProfile
{
    double d_t = 0.0;
    double d_w = 0.0;
    double d = 0.0;
    double d_max = 0.0; ///< ceil(t w_d) ceil(t_m w)
};

struct CoherenceProfile
{
    double t_coh = 0.0;
    double w_coh = 0.0;
    double n_c = 0.0;
    /// ln(n_c) / ln(1/snr); empty when snr >= 1.
    std::optional<double> mu;
};

struct ChannelRealization
{
    std::vector<double> gains2; ///< |h_i|^2, one per coherence subspace
};

struct ComplexRealization
{
    std::vector<std::complex<double>> gains; ///< h_i ~ CN(0, 1)

    [[nodiscard]] ChannelRealization power() const;
};

[[nodiscard]] DofProfile dof_profile(const ChannelParams &cp, const SignalSpace &ss);

[[nodiscard]] CoherenceProfile coherence_profile(const ChannelParams &cp, const SignalSpace &ss);

/// D i.i.d. Exp(1) power gains. Gain i is the i-th draw of CounterRng(seed, stream).
[[nodiscard]] ChannelRealization sample_realization(std::uint64_t d, std::uint64_t seed, std::uint64_t stream = 0);

/// In-place variant used by the Monte Carlo loops; `out` is resized to d.
void sample_realization_into(std::vector<double> &out, std::uint64_t d, std::uint64_t seed, std::uint64_t stream);

/// D i.i.d. CN(0, 1) gains, two uniform draws per gain.
[[nodiscard]] ComplexRealization sample_complex_realization(std::uint64_t d, std::uint64_t seed,
                                                            std::uint64_t stream = 0);

/// E[D_eff] = d e^{-h_t}.
[[nodiscard]] double expected_deff(double d, double h_t);

} // namespace sparsefb::channel
