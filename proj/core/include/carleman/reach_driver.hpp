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
#ifndef CARLEMAN_REACH_DRIVER_HPP
#define CARLEMAN_REACH_DRIVER_HPP

#include "carleman/carleman_lift.hpp"
#include "carleman/error_bound.hpp"
#include "carleman/linear_reach.hpp"

#include <optional>
#include <string>
#include <vector>

namespace carleman
{

enum class ErrorMode
{
    none,     ///< raw Carleman flowpipe, fast but unsound
    theorem1, ///< every set bloated by the truncation error bound
};

const char* to_string(ErrorMode mode) noexcept;
std::optional<ErrorMode> parse_error_mode(const std::string& text);

struct ReachRequest
{
    QuadraticSystem sys;
    Hyperrectangle X0;
    int order = 2;
    ReachSettings settings;
    ErrorMode error_mode = ErrorMode::none;
    /// Restart times in (0, horizon), strictly increasing, relative to the request start.
    std::vector<double> reeval_times;
    NormKind norm = NormKind::two;

    void validate() const;
};

/// One restart segment: the sets between two accepted reevaluations.
struct Segment
{
    double t_start = 0.0;
    double t_end   = 0.0;
    Hyperrectangle X0;
    std::optional<ErrorModel> model;
    std::size_t first_set = 0;
    std::size_t set_count = 0;
};

struct PhaseTimings
{
    double lift_seconds      = 0.0;
    double expm_seconds      = 0.0;
    double propagate_seconds = 0.0;
    double total_seconds     = 0.0;
};

/**
 * sets[k] = project(raw set k) bloated by epsilons[k]. raw.anchors holds the
 * discrete set at every step boundary of every segment (m + 1 per segment).
 */
struct EnlargedFlowpipe
{
    std::vector<ReachSet> sets;
    Flowpipe raw;
    std::vector<double> epsilons;
    std::vector<Segment> segments;
    std::vector<std::string> diagnostics;
    PhaseTimings timings;

    double t_start() const
    {
        return sets.empty() ? 0.0 : sets.front().t_lo;
    }
    double t_end() const
    {
        return sets.empty() ? 0.0 : sets.back().t_hi;
    }
};

/**
 * Lift, propagate, and (for theorem1) enlarge. With theorem1 the assumptions
 * are checked first and a violation throws assumptions_violated before any
 * propagation. Each requested reevaluation restarts from the enlarged set at
 * that time when the restarted model is applicable; rejected restarts are
 * recorded in diagnostics and the previous bound continues. With error mode
 * none, reevaluation times are ignored.
 */
EnlargedFlowpipe reach(const ReachRequest& req);

/**
 * Request that continues `state` from t_star (snapped to the step grid, in the
 * clock of state.sets). The new initial set is the discrete reach set at
 * t_star bloated by the error bound of the span ending at t_star; the horizon
 * and the later reevaluation times are shifted accordingly. t_star at the
 * start returns req unchanged. Throws assumptions_violated when the restarted
 * model is not applicable.
 */
ReachRequest reevaluate_restart(const EnlargedFlowpipe& state, double t_star, const ReachRequest& req);

} // namespace carleman

#endif // CARLEMAN_REACH_DRIVER_HPP
