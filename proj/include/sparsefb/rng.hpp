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

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace sparsefb
{

/// SplitMix64 finalizer (Steele, Lea & Flood 2014).
[[nodiscard]] constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Counter-based generator: SplitMix64 in counter mode.
///
/// The n-th draw of stream `stream` under `seed` is mix(key + (n + 1) * golden), where
/// key = mix(seed ^ mix(stream + golden)). Every value is a pure function of (seed, stream, n),
/// so Monte Carlo trials can be evaluated in any order and on any number of threads.
class CounterRng
{
public:
    static constexpr std::uint64_t golden = 0x9e3779b97f4a7c15ULL;

    constexpr CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
        : key_(splitmix64_mix(seed ^ splitmix64_mix(stream + golden)))
    {
    }

    constexpr std::uint64_t next_u64() noexcept
    {
        ++counter_;
        return splitmix64_mix(key_ + counter_ * golden);
    }

    /// Uniform on (0, 1]: 53 random mantissa bits, never returns 0.
    double uniform_open0() noexcept
    {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Exp(1) variate by inversion.
    double exponential() noexcept { return -std::log(uniform_open0()); }

    /// CN(0, 1) variate by Box-Muller; |z|^2 is exactly the Exp(1) variate -log(u1).
    std::complex<double> complex_normal() noexcept
    {
        const double r = std::sqrt(-std::log(uniform_open0()));
        const double phase = 2.0 * std::numbers::pi * uniform_open0();
        return {r * std::cos(phase), r * std::sin(phase)};
    }

    [[nodiscard]] constexpr std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace sparsefb
