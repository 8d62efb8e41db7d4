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

// Parameter sweeps: one row per grid value, one column per requested quantity.
// Monte Carlo quantities get a companion "<name>_stderr" column. Every row reuses the same seed,
// so neighbouring rows are evaluated on common random numbers.

#pragma once

#include "sparsefb/planner.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sparsefb::sweep
{

inline constexpr std::string_view library_version = "1.0.0";

enum class Variable
{
    snr,
    lambda,
    d,
    a,
    mu,
    delta, ///< sets delta1 = delta2
};

[[nodiscard]] std::string_view to_string(Variable v) noexcept;
[[nodiscard]] Variable variable_from_string(std::string_view name);

/// Fully resolved parameter point. Optional training knobs left unset fall back to their starred
/// values (eta*, h_t_train_star) and n_c falls back to snr^-mu.
struct Params
{
    double snr = 1e-3;
    double lambda = 0.5;
    double d = 100;
    double a = 2.0;
    double mu = 1.5;
    std::optional<double> nc;
    std::optional<double> eta;
    std::optional<double> h_t_train;
    planner::SparsityExponent delta1 = planner::SparsityExponent::of(0.5);
    planner::SparsityExponent delta2 = planner::SparsityExponent::of(0.5);
    double tm = 1e-6;
    double wd = 10.0;
    double power = 1.0;

    /// Sets a named parameter ("snr", "lambda", "d", "a", "mu", "nc", "eta", "h_t_train", "delta",
    /// "delta1", "delta2", "tm", "wd", "power"). Unknown names raise ArgumentError.
    void set(std::string_view name, double value);
    /// Sets delta1 / delta2 / delta from a token: a number, "0+" (limit to 0) or "1-" (limit to 1).
    void set_token(std::string_view name, std::string_view token);

    [[nodiscard]] nlohmann::json to_json() const;
};

struct SweepSpec
{
    Variable variable = Variable::snr;
    std::vector<double> grid;
    Params fixed;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 1;
    std::vector<std::string> outputs;
    unsigned threads = 0; ///< 0 = hardware concurrency; does not affect results

    /// Throws ArgumentError on an empty or non-monotone grid, no outputs, unknown output names, or
    /// fewer than 100 trials when a Monte Carlo output is requested.
    void validate() const;
};

struct SweepResult
{
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    nlohmann::json metadata;
};

/// Output catalogue: name and whether it is a Monte Carlo quantity.
struct OutputInfo
{
    std::string_view name;
    bool monte_carlo = false;
    std::string_view description;
};

[[nodiscard]] const std::vector<OutputInfo> &output_catalogue();

/// Canonical name for an output, resolving aliases (closed_form, lb, ub, first_order).
[[nodiscard]] std::string canonical_output(std::string_view name);

[[nodiscard]] SweepResult run_sweep(const SweepSpec &spec);

/// Grid from "start:stop:points,log|lin".
[[nodiscard]] std::vector<double> parse_grid(std::string_view text);

/// Shortest round-trip decimal form.
[[nodiscard]] std::string format_number(double x);

void write_csv(std::ostream &os, const SweepResult &result);
[[nodiscard]] SweepResult read_csv(std::istream &is);

/// {"metadata": ..., "columns": [...], "rows": [[...], ...]}; NaN is written as null.
[[nodiscard]] nlohmann::json to_json(const SweepResult &result);

/// Reads a SweepSpec from a JSON document with keys variable, grid (array or grid string), fixed,
/// trials, seed, outputs, threads. Missing keys keep the values already in `base`.
[[nodiscard]] SweepSpec spec_from_json(const nlohmann::json &doc, SweepSpec base = {});

/// Equality treating NaN == NaN, over columns and rows only.
[[nodiscard]] bool same_payload(const SweepResult &x, const SweepResult &y);

} // namespace sparsefb::sweep
