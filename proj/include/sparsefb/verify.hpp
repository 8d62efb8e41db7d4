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

// Acceptance suite: twelve numbered checks comparing the library against independent oracles,
// closed forms and Monte Carlo. Failures are report entries, never exceptions.

#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace sparsefb::verify
{

enum class Level
{
    fast, ///< Monte Carlo trials capped at 1e4
    full, ///< stated trial counts (at most 1e6)
};

struct Options
{
    Level level = Level::full;
    std::uint64_t seed = 20240601;
    unsigned threads = 0;
    /// Fault injection: nu is multiplied by (1 + nu_perturbation) inside the suite's rate evaluations.
    double nu_perturbation = 0.0;
};

struct CriterionResult
{
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double runtime_seconds = 0.0;
};

struct Report
{
    std::vector<CriterionResult> results;

    [[nodiscard]] bool all_pass() const noexcept;
};

inline constexpr int criterion_count = 12;

/// Runs one criterion (1..12).
[[nodiscard]] CriterionResult run_criterion(int id, const Options &opts);

[[nodiscard]] Report verify_suite(const Options &opts);

/// One line per criterion: "[PASS] 03 name: detail (1.23 s)".
[[nodiscard]] std::string format_line(const CriterionResult &r);

[[nodiscard]] nlohmann::json to_json(const Report &report, const Options &opts);

} // namespace sparsefb::verify
