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

#include <cstdint>

namespace sparsefb::feedback
{

/// Pr(X <= m) and Pr(X > m) for X ~ Bin(n, p). Both are accurate in the relative sense: the
/// smaller tail is summed directly and the other is its complement.
struct BinomialTails
{
    double cdf = 1.0;
    double sf = 0.0;
};

/// Exact binomial tails. The pmf is anchored at k = m through lgamma and walked away from the
/// mode by the ratio recurrence; the walk is accumulated with compensated summation and stops once
/// terms fall below 1e-18 of the running sum.
[[nodiscard]] BinomialTails binomial_tails(std::int64_t n, double p, std::int64_t m);

} // namespace sparsefb::feedback
