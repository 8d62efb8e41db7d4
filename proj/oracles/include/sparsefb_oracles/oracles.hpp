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

// Independent reference implementations used only for verification. They share no code with the
// library: nu comes from adaptive quadrature, binomial tails from 50-digit arithmetic.

#pragma once

#include <cstdint>

namespace sparsefb::oracles
{

/// nu(alpha) = integral_0^inf e^{-u} / (alpha + u) du by exp-sinh quadrature in 50-digit floats.
[[nodiscard]] double nu_quadrature(double alpha);

/// Pr(Bin(n, p) <= m) summed term by term in 50-digit floats.
[[nodiscard]] double binomial_cdf(std::int64_t n, double p, std::int64_t m);

/// 1 - Pr(Bin(n, p) <= m), summed over the upper terms directly.
[[nodiscard]] double binomial_sf(std::int64_t n, double p, std::int64_t m);

} // namespace sparsefb::oracles
