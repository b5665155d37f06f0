/*
* Copyright (C) 2026 carleman-reach contributors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/
#ifndef CARLEMAN_CLI_RUN_HPP
#define CARLEMAN_CLI_RUN_HPP

#include "carleman/carleman.hpp"

#include "json.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace carleman::cli
{

enum ExitCode : int
{
    exit_ok                   = 0,
    exit_internal             = 1,
    exit_config               = 2,
    exit_assumptions_violated = 3,
    exit_budget_exceeded      = 4,
    exit_divergence           = 5,
};

int exit_code(ErrorKind kind) noexcept;

/**
 * One run of the pipeline. `model` is "logistic", "seir", "burgers" or
 * "inline"; builtin parameters may be overridden through `params`. Inline
 * models carry F1/F2 and require X0.
 */
struct RunConfig
{
    std::string model;
    nlohmann::json params = nlohmann::json::object();
    std::optional<Matrix> F1;
    std::optional<Matrix> F2;
    std::vector<std::size_t> frozen;
    std::optional<Hyperrectangle> X0;
    std::optional<int> order;
    std::optional<double> delta;
    std::optional<double> horizon;
    ErrorMode error_mode = ErrorMode::none;
    std::vector<double> reeval_times;
    NormKind norm  = NormKind::two;
    TimeMode mode  = TimeMode::discrete;
    std::string output_dir = "out";
    std::size_t simulate   = 0;
    std::uint64_t seed     = 0;
    std::optional<double> rk4_step;
};

/// Parses a config object, or the "config" member of a metadata file. Throws Error(config) naming the bad field.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::filesystem::path& path);

/// Inverse of parse_config; doubles are written in shortest round-trip form.
nlohmann::json to_json(const RunConfig& config);

/// Builds the reach request (system, initial set, settings). Throws Error(config) on missing fields.
ReachRequest resolve(const RunConfig& config);

struct RunResult
{
    EnlargedFlowpipe flowpipe;
    ErrorModel model;
    std::optional<ContainmentReport> containment;
    nlohmann::json metadata;
};

/**
 * Runs the pipeline and writes into config.output_dir:
 *   flowpipe.csv, flowpipe_segment_<k>.csv   t_lo, t_hi, lo_i, hi_i per state
 *   raw_flowpipe.csv                         the same before enlargement
 *   epsilon.csv                              t_lo, t_hi, epsilon
 *   metadata.json                            config echo, R, Re(lambda_1), norms, timings
 *   trajectories.csv                         when simulate > 0
 *   analytic.csv                             logistic model only
 * On failure metadata.json records the status and the error is rethrown.
 */
RunResult run(const RunConfig& config);

/// Delimiter-separated flowpipe table with a header row.
std::string format_table(std::span<const ReachSet> sets);

} // namespace carleman::cli

#endif // CARLEMAN_CLI_RUN_HPP
