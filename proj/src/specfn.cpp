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

#include "sparsefb/specfn.hpp"

#include "sparsefb/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace sparsefb::specfn
{
namespace
{

void check_alpha(double alpha)
{
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw DomainError("exponential integral requires finite alpha > 0, got " + std::to_string(alpha));
}

// E1(x) = -gamma - ln x - sum_{k>=1} (-x)^k / (k k!), valid for 0 < x <= 1.
double e1_series(double x)
{
    double term = 1.0; // (-x)^k / k!
    double sum = 0.0;
    for (int k = 1; k < 200; ++k)
    {
        term *= -x / k;
        const double contrib = term / k;
        sum += contrib;
        if (std::abs(contrib) < std::abs(sum) * 1e-17)
            break;
    }
    return -std::numbers::egamma - std::log(x) - sum;
}

// e^x E1(x) = 1/(x+1- 1/(x+3- 4/(x+5- ...))), modified Lentz, for x > 1.
double nu_continued_fraction(double x)
{
    constexpr double tiny = 1e-300;
    constexpr double eps = std::numeric_limits<double>::epsilon();
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 100000; ++i)
    {
        const double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny)
            d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < eps)
            return h;
    }
    return h;
}

} // namespace

double exp_e1(double alpha)
{
    check_alpha(alpha);
    if (alpha <= series_cutoff)
        return e1_series(alpha);
    return std::exp(-alpha) * nu_continued_fraction(alpha);
}

NuValue nu(double alpha)
{
    check_alpha(alpha);
    const double v = alpha <= series_cutoff ? std::exp(alpha) * e1_series(alpha) : nu_continued_fraction(alpha);
    return {alpha, v};
}

double nu_value(double alpha) { return nu(alpha).value; }

double nu_lower_bound(double alpha)
{
    check_alpha(alpha);
    return 0.5 * std::log1p(2.0 / alpha);
}

double nu_upper_bound(double alpha)
{
    check_alpha(alpha);
    return std::log1p(1.0 / alpha);
}

double rate_kernel(double s, double sigma2, double h)
{
    if (!(s > 0.0) || !std::isfinite(s))
        throw DomainError("rate_kernel requires finite s > 0");
    if (!(sigma2 > 0.0) || !std::isfinite(sigma2))
        throw DomainError("rate_kernel requires finite sigma2 > 0");
    if (!(h >= 0.0))
        throw DomainError("rate_kernel requires threshold h >= 0");
    if (std::isinf(h))
        return 0.0;
    const double weight = std::exp(-h / sigma2);
    if (weight == 0.0)
        return 0.0;
    const double sh = s * h;
    const double alpha = (1.0 + sh) / (s * sigma2);
    return weight * (std::log1p(sh) + nu_value(alpha));
}

} // namespace sparsefb::specfn
