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
#ifndef CARLEMAN_VALIDATION_HPP
#define CARLEMAN_VALIDATION_HPP

#include "carleman/carleman_lift.hpp"
#include "carleman/linear_reach.hpp"
#include "carleman/reach_driver.hpp"

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace carleman
{

struct Trajectory
{
    std::vector<double> times;
    std::vector<Vector> states;
};

/**
 * Classical RK4 on x' = F1 x + F2 x^(2). Times are k h for k = 0..ceil(T/h);
 * the last step is shortened so the final time is exactly T. Throws
 * divergence on a non-finite state.
 */
Trajectory simulate_rk4(const QuadraticSystem& sys, const Vector& x0, double T, double h);

struct Violation
{
    double time      = 0.0;
    std::size_t dim  = 0; // 0-based
    std::size_t set  = 0;
    double margin    = 0.0;
};

struct ContainmentReport
{
    bool contained = true;
    std::optional<Violation> first_violation;
    double min_margin = 0.0;
    std::size_t samples_checked = 0;
};

/// Index of the set whose span contains t; shared endpoints go to the earlier set.
std::optional<std::size_t> locate_set(std::span<const ReachSet> sets, double t);

/**
 * Checks every trajectory sample inside the flowpipe's time range against the
 * set whose span contains it. The margin of a sample is the smallest distance
 * to a face (negative outside); a sample violates when margin < -slack.
 */
ContainmentReport check_containment(const Trajectory& traj, std::span<const ReachSet> sets, double slack = 1e-9);
ContainmentReport check_containment(const Trajectory& traj, const EnlargedFlowpipe& fp, double slack = 1e-9);

/// Uniform samples from X; the first 2^n (n <= 10) samples cycle through the vertices when `vertices_first`.
std::vector<Vector> sample_box(const Hyperrectangle& X, std::size_t count, std::mt19937_64& rng,
                               bool vertices_first = false);

} // namespace carleman

#endif // CARLEMAN_VALIDATION_HPP
