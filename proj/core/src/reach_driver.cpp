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
#include "carleman/reach_driver.hpp"

#include "carleman/errors.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

namespace carleman
{

const char* to_string(ErrorMode mode) noexcept
{
    return mode == ErrorMode::none ? "none" : "theorem1";
}

std::optional<ErrorMode> parse_error_mode(const std::string& text)
{
    if (text == "none") {
        return ErrorMode::none;
    }
    if (text == "theorem1") {
        return ErrorMode::theorem1;
    }
    return std::nullopt;
}

void ReachRequest::validate() const
{
    sys.validate();
    if (order < 1) {
        fail(ErrorKind::invalid_argument, "truncation order N must be >= 1");
    }
    if (X0.dim() != sys.dim()) {
        fail(ErrorKind::invalid_argument, "initial set has dimension " + std::to_string(X0.dim()) +
                                              ", system has " + std::to_string(sys.dim()));
    }
    settings.validate(sys.dim());
    double previous = 0.0;
    for (double t : reeval_times) {
        if (!(t > previous) || !(t < settings.horizon)) {
            fail(ErrorKind::invalid_argument,
                 "reevaluation times must be strictly increasing inside (0, horizon)");
        }
        previous = t;
    }
}

namespace
{

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

EnlargedFlowpipe run_segment(const ReachRequest& req, double t0)
{
    auto start = Clock::now();
    const LiftedSystem lifted  = assemble(req.sys, req.order);
    const Hyperrectangle lifted_X0 = lift_box(req.X0, req.order);
    const double lift_seconds  = seconds_since(start);

    EnlargedFlowpipe out;
    out.raw = flowpipe(lifted, lifted_X0, req.settings, t0);

    Segment segment;
    segment.t_start = t0;
    segment.t_end   = out.raw.t_end();
    segment.X0      = req.X0;
    if (req.error_mode == ErrorMode::theorem1) {
        segment.model = check_assumptions(req.sys, req.X0, req.order, req.norm);
    }
    segment.first_set = 0;
    segment.set_count = out.raw.sets.size();

    const double delta = req.settings.delta;
    out.sets.reserve(out.raw.sets.size());
    out.epsilons.reserve(out.raw.sets.size());
    for (std::size_t k = 0; k < out.raw.sets.size(); ++k) {
        double eps = 0.0;
        if (segment.model) {
            eps = epsilon_span(*segment.model, static_cast<double>(k) * delta, static_cast<double>(k + 1) * delta);
        }
        const ReachSet& raw = out.raw.sets[k];
        out.sets.push_back({raw.t_lo, raw.t_hi, bloat(raw.bounds, eps)});
        out.epsilons.push_back(eps);
    }
    out.segments.push_back(std::move(segment));
    out.timings.lift_seconds      = lift_seconds;
    out.timings.expm_seconds      = out.raw.meta.expm_seconds;
    out.timings.propagate_seconds = out.raw.meta.propagate_seconds;
    return out;
}

// Appends the first `count` sets of a single-segment flowpipe to `into`.
void append_segment(EnlargedFlowpipe& into, const EnlargedFlowpipe& seg, std::size_t count)
{
    Segment segment   = seg.segments.front();
    segment.first_set = into.sets.size();
    segment.set_count = count;
    segment.t_end     = seg.sets[count - 1].t_hi;
    into.segments.push_back(std::move(segment));

    into.sets.insert(into.sets.end(), seg.sets.begin(), seg.sets.begin() + static_cast<std::ptrdiff_t>(count));
    into.epsilons.insert(into.epsilons.end(), seg.epsilons.begin(),
                         seg.epsilons.begin() + static_cast<std::ptrdiff_t>(count));
    into.raw.sets.insert(into.raw.sets.end(), seg.raw.sets.begin(),
                         seg.raw.sets.begin() + static_cast<std::ptrdiff_t>(count));
    into.raw.anchors.insert(into.raw.anchors.end(), seg.raw.anchors.begin(),
                            seg.raw.anchors.begin() + static_cast<std::ptrdiff_t>(count + 1));

    const Matrix& rows = seg.raw.support;
    Matrix merged(into.raw.support.rows() + static_cast<Eigen::Index>(count + 1), rows.cols());
    if (into.raw.support.rows() > 0) {
        merged.topRows(into.raw.support.rows()) = into.raw.support;
    }
    merged.bottomRows(static_cast<Eigen::Index>(count + 1)) = rows.topRows(static_cast<Eigen::Index>(count + 1));
    into.raw.support = std::move(merged);

    into.raw.meta.order = seg.raw.meta.order;
    into.raw.meta.delta = seg.raw.meta.delta;
    into.raw.meta.mode  = seg.raw.meta.mode;
    into.raw.meta.expm_seconds += seg.raw.meta.expm_seconds;
    into.raw.meta.propagate_seconds += seg.raw.meta.propagate_seconds;

    into.timings.lift_seconds += seg.timings.lift_seconds;
    into.timings.expm_seconds += seg.timings.expm_seconds;
    into.timings.propagate_seconds += seg.timings.propagate_seconds;
}

// Index of the segment holding global set index k and the anchor offset of that segment.
std::pair<const Segment*, std::size_t> locate_segment(const EnlargedFlowpipe& state, std::size_t k)
{
    std::size_t anchor_offset = 0;
    for (const auto& seg : state.segments) {
        if (k >= seg.first_set && k <= seg.first_set + seg.set_count) {
            return {&seg, anchor_offset};
        }
        anchor_offset += seg.set_count + 1;
    }
    fail(ErrorKind::invalid_argument, "reevaluation time lies outside the flowpipe");
}

std::size_t snap_step(const EnlargedFlowpipe& state, double t_star, double delta)
{
    const double steps = (t_star - state.t_start()) / delta;
    if (!(steps >= -0.5)) {
        fail(ErrorKind::invalid_argument, "reevaluation time precedes the flowpipe start");
    }
    return static_cast<std::size_t>(std::llround(steps));
}

} // namespace

ReachRequest reevaluate_restart(const EnlargedFlowpipe& state, double t_star, const ReachRequest& req)
{
    const double delta  = req.settings.delta;
    const std::size_t k = snap_step(state, t_star, delta);
    if (k == 0) {
        return req;
    }
    if (k >= state.sets.size()) {
        fail(ErrorKind::invalid_argument, "reevaluation time lies at or beyond the flowpipe end");
    }
    auto [segment, anchor_offset] = locate_segment(state, k);
    const Hyperrectangle& at_t    = state.raw.anchors[anchor_offset + (k - segment->first_set)];
    const double eps              = state.epsilons[k - 1];

    ReachRequest next = req;
    next.X0           = bloat(at_t, eps);
    const double shift = state.sets[k].t_lo - state.t_start();
    next.settings.horizon = req.settings.horizon - shift;
    next.reeval_times.clear();
    for (double t : req.reeval_times) {
        if (t - shift > 0.5 * delta) {
            next.reeval_times.push_back(t - shift);
        }
    }

    if (req.error_mode == ErrorMode::theorem1) {
        const ErrorModel model = check_assumptions(next.sys, next.X0, next.order, next.norm);
        if (!model.applicable()) {
            std::ostringstream msg;
            msg << "reevaluation at t = " << state.sets[k].t_lo << " rejected (" << model.violation()
                << "); continuing with the previous bound";
            fail(ErrorKind::assumptions_violated, msg.str());
        }
    }
    return next;
}

EnlargedFlowpipe reach(const ReachRequest& req)
{
    auto start = Clock::now();
    req.validate();

    EnlargedFlowpipe result;
    if (req.error_mode == ErrorMode::theorem1) {
        const ErrorModel model = check_assumptions(req.sys, req.X0, req.order, req.norm);
        if (!model.applicable()) {
            fail(ErrorKind::assumptions_violated, model.violation());
        }
    }
    else if (!req.reeval_times.empty()) {
        result.diagnostics.push_back("reevaluation times ignored: error mode is none");
    }

    ReachRequest current = req;
    if (current.error_mode == ErrorMode::none) {
        current.reeval_times.clear();
    }
    double t0 = 0.0;
    while (true) {
        EnlargedFlowpipe seg = run_segment(current, t0);
        std::optional<std::pair<std::size_t, ReachRequest>> accepted;
        for (double t : current.reeval_times) {
            const double t_abs  = t0 + t;
            const std::size_t k = snap_step(seg, t_abs, current.settings.delta);
            if (k == 0 || k >= seg.sets.size()) {
                result.diagnostics.push_back("reevaluation at t = " + std::to_string(t_abs) +
                                             " skipped: not strictly inside the segment");
                continue;
            }
            const double snapped = seg.sets[k].t_lo;
            if (std::abs(snapped - t_abs) > 1e-9 * std::max(1.0, std::abs(t_abs))) {
                result.diagnostics.push_back("reevaluation time " + std::to_string(t_abs) +
                                             " snapped to step boundary " + std::to_string(snapped));
            }
            try {
                accepted.emplace(k, reevaluate_restart(seg, t_abs, current));
                break;
            }
            catch (const Error& e) {
                if (e.kind() != ErrorKind::assumptions_violated) {
                    throw;
                }
                result.diagnostics.push_back(e.what());
            }
        }
        if (!accepted) {
            append_segment(result, seg, seg.sets.size());
            break;
        }
        append_segment(result, seg, accepted->first);
        t0      = seg.sets[accepted->first].t_lo;
        current = std::move(accepted->second);
    }
    result.timings.total_seconds = seconds_since(start);
    return result;
}

} // namespace carleman
