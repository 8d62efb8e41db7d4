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

#include "sparsefb/channel.hpp"
#include "sparsefb/errors.hpp"
#include "sparsefb/numeric.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace sparsefb;
using sparsefb::testing::rel_err;

TEST_SUITE("channel")
{
    TEST_CASE("coherence profile of the canonical packet")
    {
        channel::ChannelParams cp{1e-6, 10.0, 0.5, 0.5};
        channel::SignalSpace ss{1e7, 1e6, 1.0};
        const auto prof = channel::coherence_profile(cp, ss);
        CHECK(rel_err(prof.n_c, 1e9) < 1e-12);
        REQUIRE(prof.mu.has_value());
        CHECK(*prof.mu == doctest::Approx(1.5).epsilon(1e-12));
        const auto dof = channel::dof_profile(cp, ss);
        CHECK(rel_err(dof.d * prof.n_c, ss.n()) < 1e-12);
        CHECK(dof.d <= dof.d_max);
    }

    TEST_CASE("D times N_c equals the signal dimension")
    {
        sparsefb::testing::Gen gen(2);
        for (int i = 0; i < 200; ++i)
        {
            channel::ChannelParams cp{gen.log_uniform(1e-7, 1e-5), gen.log_uniform(1, 100), gen.uniform(0.05, 0.95),
                                      gen.uniform(0.05, 0.95)};
            channel::SignalSpace ss{gen.log_uniform(1.0, 100.0), gen.log_uniform(1e7, 1e9), 1.0};
            const auto dof = channel::dof_profile(cp, ss);
            const auto prof = channel::coherence_profile(cp, ss);
            CHECK(rel_err(dof.d * prof.n_c, ss.n()) < 1e-12);
        }
    }

    TEST_CASE("validation names the failing axis")
    {
        channel::ChannelParams cp{1e-6, 10.0, 0.5, 0.5};
        CHECK_THROWS_WITH_AS((void)channel::dof_profile(cp, {0.01, 1e7, 1.0}), doctest::Contains("Doppler axis"),
                             DomainError);
        CHECK_THROWS_WITH_AS((void)channel::dof_profile(cp, {10.0, 1e5, 1.0}), doctest::Contains("delay axis"),
                             DomainError);
        CHECK_THROWS_AS((channel::ChannelParams{1e-2, 100.0, 0.5, 0.5}.validate()), DomainError);
        CHECK_THROWS_AS((channel::ChannelParams{1e-6, 10.0, 1.0, 0.5}.validate()), DomainError);
        CHECK_THROWS_AS((channel::SignalSpace{0.0, 1.0, 1.0}.validate()), DomainError);
        CHECK_FALSE(channel::coherence_profile(cp, {1e7, 1e6, 2e6}).mu.has_value());
    }

    TEST_CASE("sampled gains are deterministic and unit-mean exponential")
    {
        const auto a = channel::sample_realization(100000, 7, 3);
        const auto b = channel::sample_realization(100000, 7, 3);
        CHECK(a.gains2 == b.gains2);
        const auto c = channel::sample_realization(100000, 7, 4);
        CHECK(a.gains2 != c.gains2);
        const auto ms = mean_stderr(a.gains2);
        CHECK(std::abs(ms.mean - 1.0) < 4.0 * ms.stderr_);
        std::size_t above = 0;
        for (double g : a.gains2)
            above += g >= 2.0 ? 1 : 0;
        const double p = std::exp(-2.0);
        CHECK(std::abs(above / 1e5 - p) < 4.0 * std::sqrt(p * (1 - p) / 1e5));
        CHECK_THROWS_AS((void)channel::sample_realization(0, 1), DomainError);
    }

    TEST_CASE("complex gains are CN(0,1)")
    {
        const auto r = channel::sample_complex_realization(100000, 11);
        std::vector<double> re, im;
        for (const auto &h : r.gains)
        {
            re.push_back(h.real());
            im.push_back(h.imag());
        }
        const auto p = r.power();
        const auto mp = mean_stderr(p.gains2);
        CHECK(std::abs(mp.mean - 1.0) < 4.0 * mp.stderr_);
        const auto mr = mean_stderr(re);
        CHECK(std::abs(mr.mean) < 4.0 * mr.stderr_);
        const auto mi = mean_stderr(im);
        CHECK(std::abs(mi.mean) < 4.0 * mi.stderr_);
    }

    TEST_CASE("expected active subspaces")
    {
        CHECK(channel::expected_deff(100.0, 0.0) == 100.0);
        CHECK(rel_err(channel::expected_deff(100.0, std::log(10.0)), 10.0) < 1e-14);
        CHECK_THROWS_AS((void)channel::expected_deff(0.0, 1.0), DomainError);
        CHECK_THROWS_AS((void)channel::expected_deff(1.0, -1.0), DomainError);
    }

    TEST_CASE("parallel map is order preserving for any worker count")
    {
        auto fn = [](std::size_t i) { return static_cast<double>(i * i) * 0.1; };
        const auto one = parallel_map(1001, 1, fn);
        const auto many = parallel_map(1001, 7, fn);
        CHECK(one == many);
        CHECK(compensated_sum(one) == compensated_sum(many));
    }

    TEST_CASE("compensated sum recovers cancellation")
    {
        std::vector<double> xs = {1e16, 1.0, -1e16, 1.0};
        CHECK(compensated_sum(xs) == 2.0);
    }
}
