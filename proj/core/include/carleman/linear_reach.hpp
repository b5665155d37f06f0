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
#ifndef CARLEMAN_LINEAR_REACH_HPP
#define CARLEMAN_LINEAR_REACH_HPP

#include "carleman/carleman_lift.hpp"
#include "carleman/set_types.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace carleman
{

/**
 * discrete: set k is Phi^k X0, assigned to [k delta, (k+1) delta].
 * dense: set k takes, per direction, the max of the step-k and step-(k+1)
 * support values. This is a convex-hull-in-direction approximation of the
 * span, not a rigorous dense-time enclosure.
 */
enum class TimeMode
{
    discrete,
    dense,
};

const char* to_string(TimeMode mode) noexcept;
std::optional<TimeMode> parse_time_mode(const std::string& text);

struct ReachSettings
{
    double delta   = 0.01;
    double horizon = 1.0;
    /// Directions over the first n (base) coordinates; must include +-e_i for every i.
    std::vector<Direction> directions;
    TimeMode mode = TimeMode::discrete;

    void validate(std::size_t n) const;
};

struct ReachSet
{
    double t_lo = 0.0;
    double t_hi = 0.0;
    Hyperrectangle bounds;
};

struct FlowpipeMeta
{
    int order    = 0;
    double delta = 0.0;
    TimeMode mode = TimeMode::discrete;
    std::string model;
    double expm_seconds      = 0.0;
    double propagate_seconds = 0.0;
};

/**
 * Reach sets projected to the base coordinates. anchors[k] is the discrete
 * set at time t0 + k delta (k = 0..m); support(k, d) is rho(d_k, X0) for
 * settings direction d.
 */
struct Flowpipe
{
    std::vector<ReachSet> sets;
    std::vector<Hyperrectangle> anchors;
    Matrix support;
    FlowpipeMeta meta;

    double t_start() const
    {
        return sets.empty() ? 0.0 : sets.front().t_lo;
    }
    double t_end() const
    {
        return sets.empty() ? 0.0 : sets.back().t_hi;
    }
};

/// ceil(horizon / delta), tolerant to round-off in the quotient.
std::size_t step_count(double horizon, double delta);

/// e^{A delta} by scaling and squaring with a degree-13 Pade approximant.
Matrix expm(const Matrix& A, double delta);
Matrix expm(const SparseMatrix& A, double delta);

/// Largest lifted dimension for which a dense propagation matrix is formed.
inline constexpr std::size_t max_dense_dimension = 5000;

/**
 * Support-function flowpipe of y' = A y from X0_lifted. Directions are
 * propagated as d_{k+1} = Phi^T d_k, so the lifted sets are never formed.
 * Times are t0 + k delta for k = 0..ceil(horizon / delta).
 */
Flowpipe flowpipe(const LiftedSystem& lifted, const Hyperrectangle& X0_lifted, const ReachSettings& settings,
                  double t0 = 0.0);

} // namespace carleman

#endif // CARLEMAN_LINEAR_REACH_HPP
