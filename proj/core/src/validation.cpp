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
#include "carleman/validation.hpp"

#include "carleman/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace carleman
{

Trajectory simulate_rk4(const QuadraticSystem& sys, const Vector& x0, double T, double h)
{
    sys.validate();
    if (!(h > 0.0) || !(T >= 0.0)) {
        fail(ErrorKind::invalid_argument, "RK4 needs h > 0 and T >= 0");
    }
    if (static_cast<std::size_t>(x0.size()) != sys.dim()) {
        fail(ErrorKind::invalid_argument, "RK4 initial state has the wrong dimension");
    }
    const std::size_t steps = T == 0.0 ? 0 : step_count(T, h);
    Trajectory traj;
    traj.times.reserve(steps + 1);
    traj.states.reserve(steps + 1);
    traj.times.push_back(0.0);
    traj.states.push_back(x0);

    Vector x = x0;
    for (std::size_t k = 0; k < steps; ++k) {
        const double t    = static_cast<double>(k) * h;
        const double next = k + 1 == steps ? T : static_cast<double>(k + 1) * h;
        const double step = next - t;
        const Vector k1   = sys.field(x);
        const Vector k2   = sys.field(x + 0.5 * step * k1);
        const Vector k3   = sys.field(x + 0.5 * step * k2);
        const Vector k4   = sys.field(x + step * k3);
        x += step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!x.allFinite()) {
            fail(ErrorKind::divergence, "RK4 state became non-finite at t = " + std::to_string(next));
        }
        traj.times.push_back(next);
        traj.states.push_back(x);
    }
    return traj;
}

std::optional<std::size_t> locate_set(std::span<const ReachSet> sets, double t)
{
    if (sets.empty() || t < sets.front().t_lo || t > sets.back().t_hi) {
        return std::nullopt;
    }
    // First set with t <= t_hi: a shared endpoint belongs to the earlier span.
    auto it = std::lower_bound(sets.begin(), sets.end(), t,
                               [](const ReachSet& s, double value) { return s.t_hi < value; });
    return static_cast<std::size_t>(it - sets.begin());
}

ContainmentReport check_containment(const Trajectory& traj, std::span<const ReachSet> sets, double slack)
{
    ContainmentReport report;
    report.min_margin = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < traj.times.size(); ++s) {
        const auto k = locate_set(sets, traj.times[s]);
        if (!k) {
            continue;
        }
        const Hyperrectangle& box = sets[*k].bounds;
        const Vector& x           = traj.states[s];
        ++report.samples_checked;
        for (Eigen::Index i = 0; i < x.size(); ++i) {
            const double margin = std::min(x[i] - box.lower()[i], box.upper()[i] - x[i]);
            report.min_margin   = std::min(report.min_margin, margin);
            if (margin < -slack && !report.first_violation) {
                report.contained       = false;
                report.first_violation = Violation{traj.times[s], static_cast<std::size_t>(i), *k, margin};
            }
        }
    }
    return report;
}

ContainmentReport check_containment(const Trajectory& traj, const EnlargedFlowpipe& fp, double slack)
{
    return check_containment(traj, std::span<const ReachSet>(fp.sets), slack);
}

std::vector<Vector> sample_box(const Hyperrectangle& X, std::size_t count, std::mt19937_64& rng, bool vertices_first)
{
    const auto n = static_cast<Eigen::Index>(X.dim());
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Vector> out;
    out.reserve(count);
    const std::size_t vertex_count = (vertices_first && n <= 10) ? (std::size_t{1} << n) : 0;
    for (std::size_t s = 0; s < count; ++s) {
        Vector x(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            const double lo = X.lower()[i];
            const double hi = X.upper()[i];
            if (s < vertex_count) {
                x[i] = ((s >> i) & 1u) ? hi : lo;
            }
            else {
                x[i] = std::clamp(lo + unit(rng) * (hi - lo), lo, hi);
            }
        }
        out.push_back(std::move(x));
    }
    return out;
}

} // namespace carleman
