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

#include "sparsefb/channel.hpp"

#include "sparsefb/errors.hpp"
#include "sparsefb/rng.hpp"

#include <cmath>
#include <string>

namespace sparsefb::channel
{

void ChannelParams::validate() const
{
    if (!(t_m > 0.0) || !(w_d > 0.0))
        throw DomainError("channel: delay and Doppler spreads must be positive");
    if (!(t_m * w_d < 1.0))
        throw DomainError("channel: not underspread, t_m * w_d = " + std::to_string(t_m * w_d) + " >= 1");
    if (!(delta1 > 0.0 && delta1 < 1.0))
        throw DomainError("channel: delta1 must lie strictly inside (0, 1)");
    if (!(delta2 > 0.0 && delta2 < 1.0))
        throw DomainError("channel: delta2 must lie strictly inside (0, 1)");
}

void SignalSpace::validate() const
{
    if (!(t > 0.0) || !(w > 0.0) || !(p > 0.0))
        throw DomainError("signal space: t, w and p must be positive");
    if (!(n() >= 1.0))
        throw DomainError("signal space: t * w must be at least 1");
}

ChannelRealization ComplexRealization::power() const
{
    ChannelRealization r;
    r.gains2.reserve(gains.size());
    for (const auto &h : gains)
        r.gains2.push_back(std::norm(h));
    return r;
}

namespace
{

void check_resolvable(const ChannelParams &cp, const SignalSpace &ss)
{
    cp.validate();
    ss.validate();
    if (!(ss.t * cp.w_d >= 1.0))
        throw DomainError("Doppler axis: t * w_d = " + std::to_string(ss.t * cp.w_d) +
                          " < 1, no resolvable Doppler bin");
    if (!(cp.t_m * ss.w >= 1.0))
        throw DomainError("delay axis: t_m * w = " + std::to_string(cp.t_m * ss.w) +
                          " < 1, no resolvable delay bin");
}

} // namespace

DofProfile dof_profile(const ChannelParams &cp, const SignalSpace &ss)
{
    check_resolvable(cp, ss);
    DofProfile dp;
    dp.d_t = std::pow(ss.t * cp.w_d, cp.delta1);
    dp.d_w = std::pow(ss.w * cp.t_m, cp.delta2);
    dp.d = dp.d_t * dp.d_w;
    dp.d_max = std::ceil(ss.t * cp.w_d) * std::ceil(cp.t_m * ss.w);
    return dp;
}

CoherenceProfile coherence_profile(const ChannelParams &cp, const SignalSpace &ss)
{
    check_resolvable(cp, ss);
    CoherenceProfile prof;
    prof.t_coh = std::pow(ss.t, 1.0 - cp.delta1) / std::pow(cp.w_d, cp.delta1);
    prof.w_coh = std::pow(ss.w, 1.0 - cp.delta2) / std::pow(cp.t_m, cp.delta2);
    prof.n_c = prof.t_coh * prof.w_coh;
    const double snr = ss.snr();
    if (snr < 1.0)
        prof.mu = std::log(prof.n_c) / std::log(1.0 / snr);
    return prof;
}

void sample_realization_into(std::vector<double> &out, std::uint64_t d, std::uint64_t seed, std::uint64_t stream)
{
    out.resize(d);
    CounterRng rng(seed, stream);
    for (auto &g : out)
        g = rng.exponential();
}

ChannelRealization sample_realization(std::uint64_t d, std::uint64_t seed, std::uint64_t stream)
{
    if (d == 0)
        throw DomainError("sample_realization: need at least one coherence subspace");
    ChannelRealization r;
    sample_realization_into(r.gains2, d, seed, stream);
    return r;
}

ComplexRealization sample_complex_realization(std::uint64_t d, std::uint64_t seed, std::uint64_t stream)
{
    if (d == 0)
        throw DomainError("sample_complex_realization: need at least one coherence subspace");
    ComplexRealization r;
    r.gains.resize(d);
    CounterRng rng(seed, stream);
    for (auto &h : r.gains)
        h = rng.complex_normal();
    return r;
}

double expected_deff(double d, double h_t)
{
    if (!(d > 0.0))
        throw DomainError("expected_deff: d must be positive");
    if (!(h_t >= 0.0))
        throw DomainError("expected_deff: threshold must be nonnegative");
    return d * std::exp(-h_t);
}

} // namespace sparsefb::channel
