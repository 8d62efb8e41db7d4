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

// Exponential-integral kernel behind every closed-form rate.
//
//   E1(a) = int_a^inf e^-t / t dt
//   nu(a) = e^a E1(a)
//
// For a <= 1 both come from the convergent power series of E1. For a > 1, nu is evaluated
// directly by a modified-Lentz continued fraction, so it never forms e^a and stays finite for
// arbitrarily large a (nu(a) ~ 1/a).

#pragma once

namespace sparsefb::specfn
{

/// Value of nu at a given argument, in nats.
struct NuValue
{
    double alpha = 0.0;
    double value = 0.0;
};

/// Switch point between the power series and the continued fraction.
inline constexpr double series_cutoff = 1.0;

/// E1(alpha). Underflows to zero for alpha beyond ~745; use nu() there.
[[nodiscard]] double exp_e1(double alpha);

/// nu(alpha) = e^alpha E1(alpha), overflow-free for any finite alpha > 0.
[[nodiscard]] NuValue nu(double alpha);

/// Shorthand for nu(alpha).value.
[[nodiscard]] double nu_value(double alpha);

/// Lower/upper bounds 0.5 ln(1 + 2/alpha) <= nu(alpha) <= ln(1 + 1/alpha).
[[nodiscard]] double nu_lower_bound(double alpha);
[[nodiscard]] double nu_upper_bound(double alpha);

/// E[ln(1 + s g) 1{g >= h}] for g ~ Exp(mean sigma2):
///   e^{-h/sigma2} [ln(1 + s h) + nu((1 + s h) / (s sigma2))].
/// h = 0 gives nu(1 / (s sigma2)); h = +inf gives 0.
[[nodiscard]] double rate_kernel(double s, double sigma2, double h);

} // namespace sparsefb::specfn
