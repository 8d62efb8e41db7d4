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
#include "sparsefb/training.hpp"
#include "support.hpp"

#include <boost/math/tools/minima.hpp>
#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace sparsefb;
using namespace sparsefb::training;
using sparsefb::testing::rel_err;

namespace
{

TrainingConfig starred(double snr, double mu, double lambda)
{
    TrainingConfig cfg;
    cfg.snr = snr;
    cfg.n_c = std::pow(snr, -mu);
    cfg.eta = eta_star(cfg.n_c, snr);
    cfg.h_t_train = h_t_train_star(cfg.eta, cfg.n_c, snr, lambda);
    return cfg;
}

} // namespace

TEST_SUITE("training")
{
    TEST_CASE("eta* and derived energies")
    {
        const double eta = eta_star(1e9, 1e-6);
        CHECK(rel_err(eta, 0.030638598889039427617) < 1e-12);
        CHECK(rel_err(eta * 1e9 * 1e-6, 30.638598889039427617) < 1e-12);
        CHECK(rel_err(h_t_train_star(eta, 1e9, 1e-6, 0.5), 6.6894221188062231478) < 1e-12);
        CHECK_THROWS_AS((void)eta_star(2.0, 1e-3), DomainError);
        CHECK_THROWS_AS((void)eta_star(1.5, 1e-3), DomainError);
    }

    TEST_CASE("eta* stays inside (0, 1)")
    {
        sparsefb::testing::Gen gen(6);
        for (int k = 0; k < 10000; ++k)
        {
            const double nc = 2.0 + gen.log_uniform(1e-6, 1e12);
            const double snr = gen.log_uniform(1e-9, 0.999);
            const double eta = eta_star(nc, snr);
            INFO("nc=" << nc << " snr=" << snr);
            CHECK(eta > 0.0);
            CHECK(eta < 1.0);
        }
    }

    TEST_CASE("training energy tracks snr^{(1-mu)/2} for mu = 1.5")
    {
        double xs[3], ys[3];
        int k = 0;
        for (double snr : {1e-4, 1e-5, 1e-6})
        {
            const double nc = std::pow(snr, -1.5);
            const double e = eta_star(nc, snr) * nc * snr;
            const double target = std::pow(snr, -0.25);
            CHECK(e / target > 0.5);
            CHECK(e / target < 2.0);
            xs[k] = std::log(snr);
            ys[k] = std::log(e);
            ++k;
        }
        const double slope = (ys[2] - ys[0]) / (xs[2] - xs[0]);
        CHECK(slope == doctest::Approx(-0.25).epsilon(0.05));
    }

    TEST_CASE("threshold limits")
    {
        const double h = 0.5 * std::log(1e6);
        CHECK(h_t_train_star(0.0, 1e9, 1e-6, 0.5) == 0.0);
        CHECK(rel_err(h_t_train_star(0.5, 1e20, 1e-6, 0.5), h) < 1e-12);
        for (double eta : {0.01, 0.1, 0.5, 0.9})
            CHECK(h_t_train_star(eta, 1e4, 1e-6, 0.5) <= h);
    }

    TEST_CASE("closed form equals the kernel decomposition")
    {
        sparsefb::testing::Gen gen(7);
        for (int k = 0; k < 2000; ++k)
        {
            TrainingConfig cfg;
            cfg.eta = gen.uniform(0.001, 0.999);
            cfg.n_c = 1.0 + gen.log_uniform(1e-3, 1e9);
            cfg.snr = gen.log_uniform(1e-8, 0.9);
            cfg.h_t_train = gen.uniform(0.0, 8.0);
            const double a = rate_training_closed_form(cfg);
            const double b = rate_training_kernel(cfg);
            INFO("eta=" << cfg.eta << " nc=" << cfg.n_c << " snr=" << cfg.snr << " h=" << cfg.h_t_train);
            CHECK((a == b || rel_err(a, b) <= 1e-12));
            const double per = rate_training_per_dimension(cfg);
            CHECK((a == 0.0 ? per == 0.0 : rel_err(per, (1.0 - 1.0 / cfg.n_c) * a) < 1e-15));
        }
    }

    TEST_CASE("closed form at the Monte Carlo point")
    {
        TrainingConfig cfg{0.1, 100.0, 0.05, 1.0};
        CHECK(rel_err(rate_training_closed_form(cfg), 0.027794450356322576937) < 1e-12);
    }

    TEST_CASE("derived constants")
    {
        sparsefb::testing::Gen gen(8);
        for (int k = 0; k < 500; ++k)
        {
            TrainingConfig cfg{gen.uniform(0.01, 0.99), 1.0 + gen.log_uniform(1e-2, 1e8), gen.log_uniform(1e-7, 0.9),
                               gen.uniform(0.0, 5.0)};
            const auto d = derive(cfg);
            CHECK(d.kappa1 >= 0.0); // underflows to 0 once E_tr is tiny
            CHECK(d.kappa1 <= 1.0);
            CHECK(d.kappa2 > 0.0);
            CHECK(d.a1 >= 0.0);
            CHECK(d.a2 > 0.0);
        }
        TrainingConfig bad{0.1, 1.0, 0.05, 1.0};
        CHECK_THROWS_AS((void)rate_training_closed_form(bad), DomainError);
    }

    TEST_CASE("perfect-training limit recovers the no-feedback rate")
    {
        TrainingConfig cfg{1e-6, 1e16, 1e-3, 0.0};
        CHECK(rel_err(rate_training_closed_form(cfg), feedback::rate_coh0(1e-3).exact) < 1e-5);
    }

    TEST_CASE("asymptotic lower bound")
    {
        const double snr = 1e-6;
        const double nc = std::pow(snr, -1.5);
        const double eta = eta_star(nc, snr);
        const double lb = rate_training_lower_bound(eta, nc, snr, 0.5);
        CHECK(rel_err(lb / feedback::first_order_rate(snr, 0.5), 0.9387228328604903646) < 1e-10);
        CHECK(rate_training_lower_bound(1.0, nc, snr, 0.5) == 0.0);
        // The bound is asymptotic: it sits slightly above the exact rate and the excess vanishes as snr -> 0.
        double prev = INFINITY;
        for (double s : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6})
        {
            REQUIRE(training_lower_bound_valid(s));
            const auto cfg = starred(s, 1.5, 0.5);
            const double excess =
                std::abs(rate_training_lower_bound(cfg.eta, cfg.n_c, s, 0.5) / rate_training_closed_form(cfg) - 1.0);
            CHECK(excess < prev);
            prev = excess;
        }
        CHECK(prev < 0.005);
        CHECK_FALSE(training_lower_bound_valid(0.05));
    }

    TEST_CASE("high-threshold lower bounds")
    {
        const double v = appendix_c_lower_bounds(0.5, 0.25, 1.4, 1e-4);
        CHECK(v > 0.0);
        CHECK(v < 1.05 * feedback::first_order_rate(1e-4, 0.5));
        CHECK(rel_err(v, 5.06107425599404313834715494085e-4) < 1e-12);
        const double snr = 1e-4;
        const double eps = 0.5;
        const double limit = std::pow(snr, eps) * std::log1p(eps * std::pow(snr, 1 - eps) * std::log(1 / snr)) + snr;
        CHECK(rel_err(appendix_c_lower_bounds(eps, 0, 0, snr, 1e9), limit) < 1e-6);
        CHECK_THROWS_AS((void)appendix_c_lower_bounds(0.5, 0.25, 1.75, 1e-4), RegimeError);
        CHECK_THROWS_AS((void)appendix_c_lower_bounds(0.5, 0.25, 1.2, 1e-4), RegimeError);
        CHECK_THROWS_WITH_AS((void)appendix_c_lower_bounds(0.5, 0, 0, 1e-4, 0.5),
                             doctest::Contains("a > epsilon / (1 - epsilon)"), RegimeError);
    }

    TEST_CASE("MMSE estimate statistics")
    {
        const auto truth = channel::sample_complex_realization(1000000, 21);
        const auto est = mmse_estimate(truth, 1.0, 22);
        CHECK(est.err_var == 0.5);
        const auto ms = mean_stderr(est.est_gains2);
        CHECK(std::abs(ms.mean - 0.5) < 4.0 * ms.stderr_);
        const double h = 0.8;
        const double k1 = std::exp(-h * 2.0);
        std::size_t above = 0;
        for (double g : est.est_gains2)
            above += g >= h ? 1 : 0;
        const double frac = above / 1e6;
        CHECK(std::abs(frac - k1) < 4.0 * std::sqrt(k1 * (1 - k1) / 1e6));
        CHECK_THROWS_AS((void)mmse_estimate(truth, 0.0, 1), DomainError);
    }

    TEST_CASE("MMSE estimate approaches the true gain with strong pilots")
    {
        const auto truth = channel::sample_complex_realization(20000, 31);
        auto exact = truth.power().gains2;
        auto est = mmse_estimate(truth, 1e4, 32).est_gains2;
        std::sort(exact.begin(), exact.end());
        std::sort(est.begin(), est.end());
        for (double q : {0.1, 0.25, 0.5, 0.75, 0.9})
        {
            const auto i = static_cast<std::size_t>(q * exact.size());
            CHECK(rel_err(est[i], exact[i]) < 0.02);
        }
    }

    TEST_CASE("short-term training fraction")
    {
        const double h = 0.5 * std::log(100.0);
        const double coherent = feedback::pi_exact(100, h, 1.55).fraction;
        CHECK(std::abs(st_fraction_training(100, 1e-9, 1e20, 1e-2, h, 1.55) - coherent) < 1e-9);
        sparsefb::testing::Gen gen(9);
        for (int k = 0; k < 200; ++k)
        {
            const auto d = static_cast<std::uint64_t>(gen.integer(5, 800));
            const double eta = gen.uniform(0.01, 0.5);
            const double nc = gen.log_uniform(10, 1e5);
            const double snr = gen.log_uniform(1e-4, 1e-1);
            const double ht = gen.uniform(0.1, 4.0);
            const double a = gen.uniform(1.1, 4.0);
            const double e = eta * nc * snr;
            const double k1 = std::exp(-ht * (1 + e) / e);
            if (!(k1 > 1e-12 && k1 < 1.0))
                continue;
            const double frac = st_fraction_training(d, eta, nc, snr, ht, a);
            CHECK(feedback::prop1_exact_form(d, k1, a / (1.0 - eta)) <= frac);
        }
        // Budget covers all D subspaces.
        CHECK(st_fraction_training(50, 0.5, 100, 0.1, 1e-3, 2.0) == 1.0);
    }

    TEST_CASE("convergence ratio along N_c = snr^-mu")
    {
        const double grid[] = {1e-3, 1e-4, 1e-5, 1e-6};
        const auto hi = theorem2_ratio(1.5, 0.5, grid);
        const auto lo = theorem2_ratio(0.5, 0.5, grid);
        CHECK(rel_err(hi.front(), 0.6650594456526623106) < 1e-10);
        CHECK(rel_err(hi.back(), 0.93517244423078816198) < 1e-10);
        for (std::size_t i = 0; i < hi.size(); ++i)
        {
            if (i > 0)
                CHECK(hi[i] > hi[i - 1]);
            CHECK(hi[i] > lo[i]);
        }
        CHECK(lo.back() <= 0.1);
    }

    TEST_CASE("eta* is close to optimal as snr decreases")
    {
        // eta* maximizes the asymptotic bound, not the exact rate; the loss stays small and shrinks overall.
        double first = NAN;
        double prev = NAN;
        for (double snr : {1e-3, 1e-4, 1e-5, 1e-6})
        {
            const auto cfg = starred(snr, 1.5, 0.5);
            auto neg = [&](double eta) {
                TrainingConfig c = cfg;
                c.eta = eta;
                return -rate_training_closed_form(c);
            };
            const auto [eta_best, neg_best] = boost::math::tools::brent_find_minima(neg, 1e-6, 0.999, 40);
            const double ratio = -neg_best / rate_training_closed_form(cfg);
            INFO("snr=" << snr << " eta_best=" << eta_best);
            CHECK(ratio >= 1.0 - 1e-12);
            CHECK(ratio <= 1.02);
            if (std::isnan(first))
                first = ratio;
            prev = ratio;
        }
        CHECK(prev < first);
    }

    TEST_CASE("Monte Carlo matches the closed form")
    {
        TrainingMcConfig mc;
        mc.cfg = {0.1, 100.0, 0.05, 1.0};
        mc.d = 200;
        mc.trials = 20000;
        mc.seed = 5;
        const auto est = mc_training_rate(mc);
        CHECK(est.nc_used == 100.0);
        CHECK(std::abs(est.mean - rate_training_closed_form(mc.cfg)) <= 3.5 * est.stderr_);
        mc.threads = 3;
        CHECK(mc_training_rate(mc).mean == est.mean);
    }

    TEST_CASE("coherence rounding for simulation")
    {
        CHECK(round_coherence(2.2) == 3.0);
        CHECK(round_coherence(99.6) == 100.0);
        CHECK(round_coherence(1e6) == 1e6);
        TrainingMcConfig mc;
        mc.cfg = {0.2, 3.4, 0.3, 0.5};
        mc.d = 10;
        mc.trials = 100;
        CHECK(mc_training_rate(mc).nc_used == 3.0);
    }
}
