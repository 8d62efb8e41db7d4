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

#include "sparsefb/planner.hpp"

#include "sparsefb/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace sparsefb::planner
{
namespace
{

void check_open_unit(double delta, const char *name)
{
    if (!(delta > 0.0 && delta < 1.0))
        throw DomainError(std::string("planner: ") + name + " must lie strictly inside (0, 1)");
}

void check_mu(double mu)
{
    if (!(mu > 0.0) || !std::isfinite(mu))
        throw DomainError("planner: mu must be finite and positive");
}

// Formula value of a limit exponent. Callers never divide by the result at a limit point.
double numeric(SparsityExponent e)
{
    switch (e.kind)
    {
    case SparsityExponent::Kind::to_zero:
        return 0.0;
    case SparsityExponent::Kind::to_one:
        return 1.0;
    case SparsityExponent::Kind::value:
        break;
    }
    return e.delta;
}

std::string fmt(double x)
{
    std::ostringstream os;
    os << x;
    return os.str();
}

} // namespace

std::string_view to_string(Regime r) noexcept
{
    switch (r)
    {
    case Regime::rich:
        return "rich";
    case Regime::doppler_sparse:
        return "doppler_sparse";
    case Regime::delay_sparse:
        return "delay_sparse";
    case Regime::doubly_sparse:
        return "doubly_sparse";
    }
    return "unknown";
}

SparsityExponent SparsityExponent::of(double delta)
{
    check_open_unit(delta, "delta");
    return {Kind::value, delta};
}

std::optional<double> rho_min_coherent(double delta1, double delta2)
{
    if (!(delta2 > 0.0 && delta2 <= 1.0))
        throw DomainError("rho_min_coherent: delta2 must lie in (0, 1]");
    if (delta1 == 0.0)
        return std::nullopt;
    if (!(delta1 > 0.0 && delta1 <= 1.0))
        throw DomainError("rho_min_coherent: delta1 must lie in [0, 1]");
    return (1.0 - delta2) / delta1;
}

std::pair<double, double> packet_split(double rho)
{
    if (!(rho > 0.0))
        throw DomainError("packet_split: rho must be positive");
    if (std::isinf(rho))
        return {1.0, 0.0};
    return {rho / (1.0 + rho), 1.0 / (1.0 + rho)};
}

double t_of_w_doppler_only(double mu, double delta1)
{
    check_mu(mu);
    check_open_unit(delta1, "delta1");
    return mu / (1.0 - delta1);
}

PeakyRequirement peaky_requirement(double delta2)
{
    if (!(delta2 > 0.0 && delta2 <= 1.0))
        throw DomainError("peaky_requirement: delta2 must lie in (0, 1]");
    return {delta2, "mu_peaky = mu + gamma > 1, i.e. mu > 1 - gamma, with gamma > " + fmt(delta2)};
}

double t_of_w_canonical(const channel::ChannelParams &cp, double mu, double p, double w)
{
    if (!(cp.delta1 < 1.0))
        throw DomainError("t_of_w_canonical: delta1 must be below 1");
    if (!(cp.delta1 >= 0.0) || !(cp.delta2 >= 0.0 && cp.delta2 <= 1.0))
        throw DomainError("t_of_w_canonical: sparsity exponents out of range");
    if (!(cp.t_m > 0.0) || !(cp.w_d > 0.0) || !(p > 0.0) || !(w > 0.0))
        throw DomainError("t_of_w_canonical: t_m, w_d, p and w must be positive");
    check_mu(mu);
    const double inv = 1.0 / (1.0 - cp.delta1);
    const double log_t = inv * (cp.delta2 * std::log(cp.t_m) + cp.delta1 * std::log(cp.w_d)) +
                         (mu - 1.0 + cp.delta2) * inv * std::log(w) - mu * inv * std::log(p);
    return std::exp(log_t);
}

double d_scaling_exponent(double delta1, double delta2, double mu)
{
    if (!(delta1 < 1.0))
        throw DomainError("d_scaling_exponent: delta1 must be below 1");
    return (delta1 * (1.0 - mu) - delta2) / (1.0 - delta1);
}

ConditionVerdict conditions_c1_c2(double delta1, double delta2, double mu)
{
    check_open_unit(delta1, "delta1");
    check_open_unit(delta2, "delta2");
    check_mu(mu);
    ConditionVerdict v;
    v.c1_ok = mu > 1.0;
    v.c2_ok = mu > (1.0 - delta2) / delta1;
    const double cap = (delta2 + (mu - 1.0) * delta1) / (1.0 - delta1);
    v.lambda_cap = cap > 0.0 ? std::min(1.0, cap) : 0.0;
    return v;
}

double symmetric_rho_min(double delta)
{
    check_open_unit(delta, "delta");
    if (delta == 0.5)
        return 1.0;
    return delta < 0.5 ? (1.0 - delta) / delta : delta / (1.0 - delta);
}

PacketPlan regime_classify(SparsityExponent delta1, SparsityExponent delta2, double mu, double gamma)
{
    using Kind = SparsityExponent::Kind;
    check_mu(mu);
    if (!(gamma >= 0.0))
        throw DomainError("regime_classify: gamma must be nonnegative");
    if (delta1.kind == Kind::value)
        check_open_unit(delta1.delta, "delta1");
    if (delta2.kind == Kind::value)
        check_open_unit(delta2.delta, "delta2");

    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    PacketPlan plan;
    plan.mu = mu;
    plan.gamma = gamma;
    const double d1 = numeric(delta1);
    const double d2 = numeric(delta2);

    if (delta1.kind == Kind::to_one)
    {
        // No Doppler sparsity: T_coh is pinned at 1/W_d and T cannot help N_c grow.
        plan.rho = plan.t_exponent = plan.w_exponent = nan;
        if (delta2.kind == Kind::to_one)
        {
            plan.regime = Regime::rich;
            plan.c1_ok = plan.c2_ok = false;
            plan.lambda_cap = 0.0;
            plan.narrative = "rich multipath: N_c = 1/(T_m W_d) is fixed, C1 can never be satisfied";
            return plan;
        }
        plan.regime = Regime::delay_sparse;
        const auto req = peaky_requirement(d2);
        plan.c1_ok = gamma > req.gamma_min && mu + gamma > 1.0;
        // D grows linearly in T, so E[D_eff] - h_t diverges for every lambda once T grows.
        plan.c2_ok = plan.c1_ok;
        plan.lambda_cap = plan.c1_ok ? 1.0 : 0.0;
        plan.narrative = "delay sparsity only: non-peaky training cannot reach mu > 1; peaky plan with " + req.rule;
        return plan;
    }

    plan.rho = (mu - 1.0 + d2) / (1.0 - d1);
    if (plan.rho > 0.0)
    {
        const auto [te, we] = packet_split(plan.rho);
        plan.t_exponent = te;
        plan.w_exponent = we;
    }
    else
    {
        plan.t_exponent = plan.w_exponent = nan;
    }
    plan.c1_ok = mu > 1.0;
    const double cap = (d2 + (mu - 1.0) * d1) / (1.0 - d1);
    plan.lambda_cap = cap > 0.0 ? std::min(1.0, cap) : 0.0;
    if (delta1.kind == Kind::to_zero)
        plan.c2_ok = false; // threshold (1 - delta2)/delta1 grows without bound
    else
        plan.c2_ok = mu > (1.0 - d2) / d1;

    if (delta2.kind == Kind::to_one)
    {
        plan.regime = Regime::doppler_sparse;
        plan.narrative = "Doppler sparsity only: scale T ~ W^" + fmt(plan.rho) + " = W^{mu/(1-delta1)}";
    }
    else
    {
        plan.regime = Regime::doubly_sparse;
        plan.narrative = "delay and Doppler sparsity: canonical T(W, P) relationship, T ~ W^" + fmt(plan.rho);
    }
    if (!plan.c1_ok)
        plan.narrative += "; C1 fails (mu <= 1)";
    if (!plan.c2_ok)
        plan.narrative += "; C2 fails, lambda must stay below " + fmt(plan.lambda_cap);
    return plan;
}

} // namespace sparsefb::planner
