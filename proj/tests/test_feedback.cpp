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

#include "sparsefb/errors.hpp"
#include "sparsefb/feedback.hpp"
#include "sparsefb/numeric.hpp"
#include "sparsefb/specfn.hpp"
#include "sparsefb_oracles/oracles.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace sparsefb;
using namespace sparsefb::feedback;
using sparsefb::testing::rel_err;

namespace
{

McEstimate mc(AllocationMode mode, std::uint64_t d, double snr, double lambda, std::uint64_t trials,
              std::optional<double> a = std::nullopt, unsigned threads = 0)
{
    McConfig cfg;
    cfg.mode = mode;
    cfg.d = d;
    cfg.snr = snr;
    cfg.h_t = lambda * std::log(1.0 / snr);
    cfg.a = a;
    cfg.trials = trials;
    cfg.seed = 99;
    cfg.threads = threads;
    return mc_rate(cfg);
}

} // namespace

TEST_SUITE("feedback")
{
    TEST_CASE("threshold and bits")
    {
        const auto pol = make_threshold(0.5, 1e-3);
        CHECK(rel_err(pol.h_t, 0.5 * std::log(1e3)) < 1e-15);
        channel::ChannelRealization r{{0.1, pol.h_t, 5.0, 3.0}};
        const auto fs = feedback_bits(r, pol);
        CHECK(fs.bits == std::vector<bool>{false, true, true, false});
        CHECK(fs.d_eff == 2);
        CHECK_THROWS_AS((void)make_threshold(1.0, 1e-3), DomainError);
        CHECK_THROWS_AS((void)make_threshold(0.5, 1.0), DomainError);
    }

    TEST_CASE("allocations meet their power constraints")
    {
        const channel::SignalSpace ss{100.0, 1e4, 10.0};
        const double nc = 50.0;
        const double h = 1.0;
        sparsefb::testing::Gen gen(4);
        for (int k = 0; k < 50; ++k)
        {
            const auto d = static_cast<std::uint64_t>(gen.integer(1, 400));
            const auto real = channel::sample_realization(d, 5, k);
            const auto fs = feedback_bits(real, {0.0, h});
            const auto nc_alloc = allocate(fs, AllocationMode::noncausal, ss, nc, h);
            const double p_nc = instantaneous_power(nc_alloc, ss, nc);
            if (fs.d_eff > 0)
                CHECK(rel_err(p_nc, ss.p) < 1e-12);
            else
                CHECK(p_nc == 0.0);
            const double a = gen.uniform(1.05, 4.0);
            const auto st = allocate(fs, AllocationMode::short_term, ss, nc, h, a);
            CHECK(instantaneous_power(st, ss, nc) <= a * ss.p * (1 + 1e-12));
            const auto causal = allocate(fs, AllocationMode::causal, ss, nc, h);
            for (std::size_t i = 0; i < d; ++i)
            {
                CHECK(st.q[i] <= causal.q[i]);
                CHECK((causal.q[i] > 0.0) == static_cast<bool>(fs.bits[i]));
            }
        }
        channel::ChannelRealization r{{2.0}};
        CHECK_THROWS_AS((void)allocate(feedback_bits(r, {0.0, 1.0}), AllocationMode::short_term, ss, nc, 1.0),
                        ArgumentError);
        CHECK_THROWS_AS(
            (void)allocate(feedback_bits(r, {0.0, 1.0}), AllocationMode::short_term, ss, nc, 1.0, 1.0), DomainError);
    }

    TEST_CASE("causal allocation has average power P")
    {
        const channel::SignalSpace ss{100.0, 1e4, 10.0};
        const double nc = 50.0;
        const double h = 1.5;
        std::vector<double> powers;
        for (std::uint64_t t = 0; t < 20000; ++t)
        {
            const auto fs = feedback_bits(channel::sample_realization(20, 8, t), {0.0, h});
            powers.push_back(instantaneous_power(allocate(fs, AllocationMode::causal, ss, nc, h), ss, nc));
        }
        const auto ms = mean_stderr(powers);
        CHECK(std::abs(ms.mean - ss.p) < 4.0 * ms.stderr_);
    }

    TEST_CASE("no-feedback rate")
    {
        for (double snr : {1e-1, 1e-3, 1e-6})
        {
            const auto r = rate_coh0(snr);
            CHECK(rel_err(r.exact, specfn::nu_value(1.0 / snr)) < 1e-15);
            CHECK(rel_err(rate_closed_form_causal(snr, 0.0), r.exact) < 1e-15);
            CHECK(r.approx == snr - snr * snr);
        }
        const auto r = rate_coh0(1e-3);
        CHECK(std::abs(r.exact - r.approx) / 1e-6 <= 2.1e-3);
        CHECK_THROWS_AS((void)rate_coh0(0.0), DomainError);
    }

    TEST_CASE("closed form and sandwich at snr = 1e-3, lambda = 0.5")
    {
        const double snr = 1e-3;
        const double h = 0.5 * std::log(1.0 / snr);
        CHECK(rel_err(rate_closed_form_causal(snr, h), 4.1551427712983727743e-3) < 1e-12);
        const auto b = rate_bounds_theorem1(snr, 0.5);
        CHECK(rel_err(b.ub, 4.1668801379615811137e-3) < 1e-12);
        CHECK(rel_err(b.lb, 4.1547271129948878956e-3) < 1e-12);
        CHECK(rel_err(first_order_rate(snr, 0.5), (1.0 + h) * snr) < 1e-15);
    }

    TEST_CASE("sandwich holds on a random grid")
    {
        sparsefb::testing::Gen gen(5);
        for (int k = 0; k < 500; ++k)
        {
            const double snr = gen.log_uniform(1e-8, 0.5);
            const double lambda = gen.uniform(0.01, 0.99);
            const auto b = rate_bounds_theorem1(snr, lambda);
            const double c = rate_closed_form_causal(snr, lambda * std::log(1.0 / snr));
            INFO("snr=" << snr << " lambda=" << lambda);
            CHECK(b.lb <= c);
            CHECK(c <= b.ub);
        }
    }

    TEST_CASE("stationarity residual vanishes at the rate-maximizing threshold")
    {
        const double snr = 1e-3;
        double best_h = 0.0;
        double best = -1.0;
        for (int i = 0; i <= 20000; ++i)
        {
            const double h = 10.0 * i / 20000.0;
            const double v = rate_closed_form_causal(snr, h);
            if (v > best)
            {
                best = v;
                best_h = h;
            }
        }
        CHECK(std::abs(stationarity_residual(snr, best_h)) < 1e-3);
        CHECK(stationarity_residual(snr, 0.5 * best_h) > 0.0);
        CHECK(stationarity_residual(snr, 1.5 * best_h) < 0.0);
    }

    TEST_CASE("Monte Carlo matches the causal closed form")
    {
        const double snr = 1e-3;
        const auto est = mc(AllocationMode::causal, 200, snr, 0.5, 50000);
        const double closed = rate_closed_form_causal(snr, 0.5 * std::log(1.0 / snr));
        CHECK(std::abs(est.mean - closed) <= 3.5 * est.stderr_);
        CHECK(est.trials == 50000);
        const auto serial = mc(AllocationMode::causal, 200, snr, 0.5, 50000, std::nullopt, 1);
        const auto parallel = mc(AllocationMode::causal, 200, snr, 0.5, 50000, std::nullopt, 5);
        CHECK(serial.mean == parallel.mean);
        CHECK(serial.stderr_ == parallel.stderr_);
    }

    TEST_CASE("short-term gate: exact fraction and bounds")
    {
        const double h = 0.5 * std::log(100.0);
        const double e = std::exp(-h);
        const auto st = pi_exact(100, h, 1.5);
        REQUIRE(st.p.size() == 100);
        const auto m = static_cast<std::int64_t>(std::floor(gate_budget(100, e, 1.5)));
        for (std::int64_t i : {1, 15, 40, 100})
            CHECK(std::abs(st.p[i - 1] - oracles::binomial_cdf(i, e, m)) < 1e-13);
        CHECK(std::abs(st.fraction + st.tail_mass - 1.0) < 1e-13);
        CHECK(st.lower_bound_l <= st.fraction);
        for (std::uint64_t i = 1; i <= 100; ++i)
            CHECK(1.0 - st.p[i - 1] <= bernstein_tail(i, 100, h, 1.5) + 1e-15);
        // Gate never binds when the budget covers every subspace.
        CHECK(pi_exact(50, 1e-6, 1.2).fraction == 1.0);
        CHECK_THROWS_AS((void)pi_exact(10, 1.0, 1.0), DomainError);
    }

    TEST_CASE("Bernstein bound below the exact fraction on a grid")
    {
        for (std::uint64_t d : {10u, 100u, 1000u, 5000u})
            for (double lambda : {0.25, 0.5, 0.75})
                for (double snr : {1e-2, 1e-3, 1e-4})
                    for (double a : {1.1, 1.5, 2.0, 3.0, 5.0})
                    {
                        const double h = lambda * std::log(1.0 / snr);
                        const auto st = pi_exact(d, h, a);
                        INFO("d=" << d << " lambda=" << lambda << " snr=" << snr << " a=" << a);
                        CHECK(st.lower_bound_l <= st.fraction);
                        const auto pb = prop1_lower_bound(d, snr, lambda, a);
                        CHECK(pb.exact_form == st.lower_bound_l);
                    }
    }

    TEST_CASE("fraction approaches one when E[D_eff] - h_t grows")
    {
        const double h = 0.5 * std::log(1e4);
        const auto st = pi_exact(10000, h, 3.0);
        CHECK(st.tail_mass <= 1e-6);
        CHECK(1.0 - st.fraction <= 1e-6);
    }

    TEST_CASE("short-term Monte Carlo matches the conditional fraction")
    {
        const double snr = 1e-2;
        const double h = 0.5 * std::log(1.0 / snr);
        const double e = std::exp(-h);
        const double closed = rate_closed_form_causal(snr, h);
        for (double a : {1.5, 3.0})
        {
            const auto est = mc(AllocationMode::short_term, 100, snr, 0.5, 40000, a);
            const double cond = closed * st_fraction_conditional(100, e, gate_budget(100, e, a));
            CHECK(std::abs(est.mean - cond) <= 3.5 * est.stderr_);
            CHECK(est.max_power_ratio <= a * (1 + 1e-12));
        }
        CHECK_THROWS_AS((void)mc(AllocationMode::short_term, 10, snr, 0.5, 100), ArgumentError);
    }

    TEST_CASE("E[D_eff] - h_t verdict")
    {
        CHECK(deff_condition({1.0, 0.8}, 0.5) == DeffVerdict::diverges);
        CHECK(deff_condition({1.0, 0.5}, 0.5) == DeffVerdict::converges_to_minus_infinity);
        CHECK(deff_condition({1.0, 0.0}, 0.1) == DeffVerdict::converges_to_minus_infinity);
        CHECK_THROWS_AS((void)deff_condition({1.0, -0.1}, 0.5), DomainError);
    }

    TEST_CASE("gap bound")
    {
        const double h = 0.5 * std::log(1e3);
        CHECK(rel_err(appendix_a_gap_bound(100, h), 1.2037738490573524833) < 1e-13);
        CHECK(appendix_a_gap_bound(1, 0.0) == 0.0);
        CHECK_THROWS_AS((void)appendix_a_gap_bound(0, 1.0), DomainError);
    }

    TEST_CASE("paired gap: absolute form is within the bound")
    {
        const double snr = 1e-3;
        const double h = 0.5 * std::log(1.0 / snr);
        const auto g = mc_gap(100, snr, h, 20000, 3);
        CHECK(std::abs(g.diff_mean) <= snr * appendix_a_gap_bound(100, h) + 4.0 * g.diff_stderr);
        CHECK(g.causal.mean == doctest::Approx(rate_closed_form_causal(snr, h)).epsilon(0.02));
    }

    TEST_CASE("allocation mode names round-trip")
    {
        for (auto m : {AllocationMode::noncausal, AllocationMode::causal, AllocationMode::short_term})
            CHECK(allocation_mode_from_string(to_string(m)) == m);
        CHECK_THROWS_AS((void)allocation_mode_from_string("peaky"), ArgumentError);
    }
}
