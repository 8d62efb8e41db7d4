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

#include "sparsefb_oracles/oracles.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <stdexcept>

namespace sparsefb::oracles
{
namespace
{

using big = boost::multiprecision::cpp_bin_float_50;

// Sum of pmf(k) over k in [lo, hi], pmf built by the exact ratio recurrence from pmf(0).
big pmf_range(std::int64_t n, double p, std::int64_t lo, std::int64_t hi)
{
    const big bp(p);
    const big q = big(1) - bp;
    big term = pow(q, n);
    big sum = 0;
    for (std::int64_t k = 0; k <= hi; ++k)
    {
        if (k >= lo)
            sum += term;
        term = term * big(n - k) / big(k + 1) * bp / q;
    }
    return sum;
}

void check(std::int64_t n, double p)
{
    if (n < 0 || !(p > 0.0 && p < 1.0))
        throw std::invalid_argument("binomial oracle: need n >= 0 and 0 < p < 1");
}

} // namespace

double nu_quadrature(double alpha)
{
    if (!(alpha > 0.0))
        throw std::invalid_argument("nu_quadrature: alpha must be positive");
    boost::math::quadrature::exp_sinh<big> integrator;
    const big a(alpha);
    auto f = [&a](const big &u) { return big(exp(-u) / (a + u)); };
    const big tol = big(1e-30);
    return static_cast<double>(integrator.integrate(f, tol));
}

double binomial_cdf(std::int64_t n, double p, std::int64_t m)
{
    check(n, p);
    if (m < 0)
        return 0.0;
    if (m >= n)
        return 1.0;
    return static_cast<double>(pmf_range(n, p, 0, m));
}

double binomial_sf(std::int64_t n, double p, std::int64_t m)
{
    check(n, p);
    if (m < 0)
        return 1.0;
    if (m >= n)
        return 0.0;
    return static_cast<double>(pmf_range(n, p, m + 1, n));
}

} // namespace sparsefb::oracles
