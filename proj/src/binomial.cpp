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

#include "sparsefb/binomial.hpp"

#include "sparsefb/errors.hpp"
#include "sparsefb/numeric.hpp"

#include <cmath>

namespace sparsefb::feedback
{
namespace
{

double log_pmf(std::int64_t n, double p, std::int64_t k)
{
    const auto nd = static_cast<double>(n);
    const auto kd = static_cast<double>(k);
    return std::lgamma(nd + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(nd - kd + 1.0) + kd * std::log(p) +
           (nd - kd) * std::log1p(-p);
}

// sum_{k=m}^{0} pmf(k); assumes m is at or below the mode so terms shrink as k decreases.
double lower_tail(std::int64_t n, double p, std::int64_t m)
{
    const double odds = (1.0 - p) / p; // pmf(k-1) / pmf(k) = k / (n-k+1) * odds
    CompensatedSum acc;
    double term = 1.0;
    acc.add(term);
    for (std::int64_t k = m; k > 0; --k)
    {
        term *= static_cast<double>(k) / static_cast<double>(n - k + 1) * odds;
        acc.add(term);
        if (term < 1e-18 * acc.value())
            break;
    }
    return std::exp(log_pmf(n, p, m) + std::log(acc.value()));
}

// sum_{k=m+1}^{n} pmf(k); assumes m + 1 is at or above the mode.
double upper_tail(std::int64_t n, double p, std::int64_t m)
{
    const std::int64_t start = m + 1;
    const double odds = p / (1.0 - p); // pmf(k+1) / pmf(k) = (n-k) / (k+1) * odds
    CompensatedSum acc;
    double term = 1.0;
    acc.add(term);
    for (std::int64_t k = start; k < n; ++k)
    {
        term *= static_cast<double>(n - k) / static_cast<double>(k + 1) * odds;
        acc.add(term);
        if (term < 1e-18 * acc.value())
            break;
    }
    return std::exp(log_pmf(n, p, start) + std::log(acc.value()));
}

} // namespace

BinomialTails binomial_tails(std::int64_t n, double p, std::int64_t m)
{
    if (n < 0)
        throw DomainError("binomial_tails: negative trial count");
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError("binomial_tails: success probability outside [0, 1]");
    if (m < 0)
        return {0.0, 1.0};
    if (m >= n)
        return {1.0, 0.0};
    if (p == 0.0)
        return {1.0, 0.0};
    if (p == 1.0)
        return {0.0, 1.0};

    if (static_cast<double>(m) < static_cast<double>(n) * p)
    {
        const double cdf = lower_tail(n, p, m);
        return {cdf, 1.0 - cdf};
    }
    const double sf = upper_tail(n, p, m);
    return {1.0 - sf, sf};
}

} // namespace sparsefb::feedback
