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

// Shared helpers for the unit tests: relative error and small deterministic generators for
// property checks.

#pragma once

#include "sparsefb/rng.hpp"

#include <cmath>

namespace sparsefb::testing
{

inline double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

/// Deterministic draws for property tests.
class Gen
{
public:
    explicit Gen(std::uint64_t stream) : rng_(0x5eedULL, stream) {}

    double uniform(double lo, double hi) { return lo + (hi - lo) * rng_.uniform_open0(); }
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
    std::int64_t integer(std::int64_t lo, std::int64_t hi)
    {
        return lo + static_cast<std::int64_t>(rng_.next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    CounterRng rng_;
};

} // namespace sparsefb::testing
