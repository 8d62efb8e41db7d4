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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <thread>
#include <vector>

namespace sparsefb
{

/// Neumaier (improved Kahan) compensated accumulator.
class CompensatedSum
{
public:
    void add(double x) noexcept
    {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

[[nodiscard]] inline double compensated_sum(std::span<const double> xs) noexcept
{
    CompensatedSum acc;
    for (double x : xs)
        acc.add(x);
    return acc.value();
}

/// Sample mean and standard error of the mean.
struct MeanStderr
{
    double mean = 0.0;
    double stderr_ = 0.0;
};

/// Two-pass mean / standard error with compensated sums. Order of `xs` is the reduction order.
[[nodiscard]] inline MeanStderr mean_stderr(std::span<const double> xs)
{
    const auto n = static_cast<double>(xs.size());
    if (xs.empty())
        return {};
    const double mean = compensated_sum(xs) / n;
    if (xs.size() < 2)
        return {mean, 0.0};
    CompensatedSum ss;
    for (double x : xs)
        ss.add((x - mean) * (x - mean));
    return {mean, std::sqrt(ss.value() / (n - 1.0) / n)};
}

[[nodiscard]] inline unsigned default_thread_count() noexcept
{
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Evaluates `fn(index)` for index in [0, count) on `threads` workers and returns the results in
/// index order. Each index must be self-contained (its own RNG stream), so the output does not
/// depend on the number of workers.
template <typename Fn>
auto parallel_map(std::size_t count, unsigned threads, Fn &&fn) -> std::vector<decltype(fn(std::size_t{}))>
{
    using R = decltype(fn(std::size_t{}));
    std::vector<R> out(count);
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1)
    {
        for (std::size_t i = 0; i < count; ++i)
            out[i] = fn(i);
        return out;
    }
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    const std::size_t chunk = (count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t)
    {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi)
            break;
        pool.emplace_back([&out, &fn, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i)
                out[i] = fn(i);
        });
    }
    return out;
}

} // namespace sparsefb
