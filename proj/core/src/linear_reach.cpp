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
#include "carleman/linear_reach.hpp"

#include "carleman/errors.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <chrono>
#include <cmath>
#include <string>

namespace carleman
{

const char* to_string(TimeMode mode) noexcept
{
    return mode == TimeMode::discrete ? "discrete" : "dense";
}

std::optional<TimeMode> parse_time_mode(const std::string& text)
{
    if (text == "discrete") {
        return TimeMode::discrete;
    }
    if (text == "dense") {
        return TimeMode::dense;
    }
    return std::nullopt;
}

void ReachSettings::validate(std::size_t n) const
{
    if (!(delta > 0.0) || !std::isfinite(delta)) {
        fail(ErrorKind::invalid_argument, "time step delta must be positive and finite");
    }
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        fail(ErrorKind::invalid_argument, "time horizon must be positive and finite");
    }
    if (delta > horizon * (1.0 + 1e-12)) {
        fail(ErrorKind::invalid_argument, "time step delta exceeds the horizon");
    }
    if (directions.empty()) {
        fail(ErrorKind::invalid_argument, "at least one template direction is required");
    }
    for (const auto& d : directions) {
        if (static_cast<std::size_t>(d.vector.size()) != n) {
            fail(ErrorKind::invalid_argument, "direction " + d.label + " has dimension " +
                                                  std::to_string(d.vector.size()) + ", expected " +
                                                  std::to_string(n));
        }
    }
}

std::size_t step_count(double horizon, double delta)
{
    if (!(delta > 0.0) || !(horizon > 0.0)) {
        fail(ErrorKind::invalid_argument, "step_count needs positive horizon and step");
    }
    const double q       = horizon / delta;
    const double rounded = std::round(q);
    if (std::abs(q - rounded) <= 1e-9 * std::max(1.0, q)) {
        return static_cast<std::size_t>(std::max(1.0, rounded));
    }
    return static_cast<std::size_t>(std::ceil(q));
}

Matrix expm(const Matrix& A, double delta)
{
    if (A.rows() != A.cols()) {
        fail(ErrorKind::invalid_argument, "matrix exponential needs a square matrix");
    }
    if (!std::isfinite(delta) || !A.allFinite()) {
        fail(ErrorKind::invalid_argument, "matrix exponential input has non-finite entries");
    }
    Matrix scaled = A * delta;
    Matrix out    = scaled.exp();
    if (!out.allFinite()) {
        fail(ErrorKind::divergence, "matrix exponential overflowed");
    }
    return out;
}

Matrix expm(const SparseMatrix& A, double delta)
{
    return expm(Matrix(A), delta);
}

namespace
{

// Index of the settings direction equal to sign * e_i, or -1.
Eigen::Index find_axis_direction(const std::vector<Direction>& dirs, Eigen::Index i, double sign)
{
    for (std::size_t k = 0; k < dirs.size(); ++k) {
        const Vector& v = dirs[k].vector;
        if (v[i] == sign && v.cwiseAbs().sum() == 1.0) {
            return static_cast<Eigen::Index>(k);
        }
    }
    return -1;
}

} // namespace

Flowpipe flowpipe(const LiftedSystem& lifted, const Hyperrectangle& X0_lifted, const ReachSettings& settings,
                  double t0)
{
    settings.validate(lifted.n);
    if (X0_lifted.dim() != lifted.dim) {
        fail(ErrorKind::invalid_argument, "lifted initial set has dimension " + std::to_string(X0_lifted.dim()) +
                                              ", lifted system has " + std::to_string(lifted.dim));
    }
    if (lifted.dim > max_dense_dimension) {
        fail(ErrorKind::budget_exceeded, "lifted dimension " + std::to_string(lifted.dim) +
                                             " exceeds the dense propagation limit of " +
                                             std::to_string(max_dense_dimension));
    }

    const auto n    = static_cast<Eigen::Index>(lifted.n);
    const auto ndir = static_cast<Eigen::Index>(settings.directions.size());
    std::vector<Eigen::Index> plus(static_cast<std::size_t>(n));
    std::vector<Eigen::Index> minus(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        plus[static_cast<std::size_t>(i)]  = find_axis_direction(settings.directions, i, +1.0);
        minus[static_cast<std::size_t>(i)] = find_axis_direction(settings.directions, i, -1.0);
        if (plus[static_cast<std::size_t>(i)] < 0 || minus[static_cast<std::size_t>(i)] < 0) {
            fail(ErrorKind::invalid_argument,
                 "direction template must contain +e" + std::to_string(i + 1) + " and -e" + std::to_string(i + 1));
        }
    }

    Flowpipe fp;
    fp.meta.order = lifted.order;
    fp.meta.delta = settings.delta;
    fp.meta.mode  = settings.mode;

    auto clock_start = std::chrono::steady_clock::now();
    const Matrix phi_t = expm(lifted.A, settings.delta).transpose();
    auto clock_expm    = std::chrono::steady_clock::now();

    const std::size_t m = step_count(settings.horizon, settings.delta);
    Matrix dirs         = Matrix::Zero(static_cast<Eigen::Index>(lifted.dim), ndir);
    for (Eigen::Index k = 0; k < ndir; ++k) {
        dirs.col(k).head(n) = settings.directions[static_cast<std::size_t>(k)].vector;
    }

    const auto lo = X0_lifted.lower().array();
    const auto hi = X0_lifted.upper().array();
    fp.support.resize(static_cast<Eigen::Index>(m + 1), ndir);
    for (std::size_t k = 0; k <= m; ++k) {
        Eigen::RowVectorXd rho =
            (dirs.array().colwise() * hi).max(dirs.array().colwise() * lo).colwise().sum();
        for (Eigen::Index d = 0; d < ndir; ++d) {
            if (!std::isfinite(rho[d])) {
                fail(ErrorKind::divergence, "non-finite support value at step " + std::to_string(k) +
                                                " along direction " +
                                                settings.directions[static_cast<std::size_t>(d)].label);
            }
        }
        fp.support.row(static_cast<Eigen::Index>(k)) = rho;
        if (k < m) {
            dirs = phi_t * dirs;
        }
    }

    fp.anchors.reserve(m + 1);
    for (std::size_t k = 0; k <= m; ++k) {
        Vector upper(n);
        Vector lower(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            const double u = fp.support(static_cast<Eigen::Index>(k), plus[static_cast<std::size_t>(i)]);
            const double l = -fp.support(static_cast<Eigen::Index>(k), minus[static_cast<std::size_t>(i)]);
            lower[i]       = std::min(l, u);
            upper[i]       = std::max(l, u);
        }
        fp.anchors.push_back(Hyperrectangle::from_bounds(lower, upper));
    }

    fp.sets.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        ReachSet set;
        set.t_lo = t0 + static_cast<double>(k) * settings.delta;
        set.t_hi = t0 + static_cast<double>(k + 1) * settings.delta;
        if (settings.mode == TimeMode::discrete) {
            set.bounds = fp.anchors[k];
        }
        else {
            set.bounds = Hyperrectangle::from_bounds(fp.anchors[k].lower().cwiseMin(fp.anchors[k + 1].lower()),
                                                     fp.anchors[k].upper().cwiseMax(fp.anchors[k + 1].upper()));
        }
        fp.sets.push_back(std::move(set));
    }
    auto clock_end = std::chrono::steady_clock::now();

    fp.meta.expm_seconds      = std::chrono::duration<double>(clock_expm - clock_start).count();
    fp.meta.propagate_seconds = std::chrono::duration<double>(clock_end - clock_expm).count();
    return fp;
}

} // namespace carleman
