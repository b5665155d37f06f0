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
#include "carleman/models.hpp"

#include "carleman/errors.hpp"

#include <cmath>
#include <numbers>

namespace carleman
{

QuadraticSystem build_logistic(const LogisticParams& p)
{
    if (p.K == 0.0) {
        fail(ErrorKind::invalid_argument, "logistic carrying capacity K must be nonzero");
    }
    QuadraticSystem sys;
    sys.name = "logistic";
    sys.F1   = Matrix::Constant(1, 1, p.r);
    sys.F2   = Matrix::Constant(1, 1, -p.r / p.K);
    return sys;
}

Hyperrectangle logistic_initial_set()
{
    return Hyperrectangle::from_bounds(Vector::Constant(1, 0.47), Vector::Constant(1, 0.53));
}

QuadraticSystem build_seir(const SeirParams& p)
{
    if (!(p.P > 0 && p.Lambda > 0 && p.T_lat > 0 && p.T_inf > 0 && p.r_tra > 0 && p.r_vac > 0)) {
        fail(ErrorKind::invalid_argument, "SEIR parameters must all be positive");
    }
    QuadraticSystem sys;
    sys.name = "seir";
    const double inflow = p.Lambda / p.P;
    sys.F1 = Matrix::Zero(3, 3);
    sys.F1(0, 0) = -inflow - p.r_vac;
    sys.F1(1, 1) = -inflow - 1.0 / p.T_lat;
    sys.F1(2, 1) = 1.0 / p.T_lat;
    sys.F1(2, 2) = -inflow - 1.0 / p.T_inf;

    sys.F2 = Matrix::Zero(3, 9);
    constexpr Eigen::Index s_times_i = 0 * 3 + 2;
    sys.F2(0, s_times_i) = -p.r_tra / p.P;
    sys.F2(1, s_times_i) = p.r_tra / p.P;
    return sys;
}

Hyperrectangle seir_initial_set()
{
    Vector center(3);
    center << 6e6, 3e5, 3.7e6;
    return Hyperrectangle::from_center_radius(center, Vector::Constant(3, 1e5));
}

BurgersModel build_burgers(const BurgersParams& p)
{
    if (p.nx < 3) {
        fail(ErrorKind::invalid_argument, "Burgers grid needs nx >= 3");
    }
    if (!(p.nu > 0 && p.L0 > 0 && p.w >= 0)) {
        fail(ErrorKind::invalid_argument, "Burgers parameters need nu > 0, L0 > 0, w >= 0");
    }
    const auto n      = static_cast<Eigen::Index>(p.nx);
    const double dx   = p.dx();
    const double diff = p.nu / (dx * dx);
    const double conv = 1.0 / (4.0 * dx);

    BurgersModel model;
    model.sys.name = "burgers";
    model.sys.F1   = Matrix::Zero(n, n);
    model.sys.F2   = Matrix::Zero(n, n * n);
    for (Eigen::Index i = 1; i < n - 1; ++i) {
        model.sys.F1(i, i - 1) = diff;
        model.sys.F1(i, i)     = -2.0 * diff;
        model.sys.F1(i, i + 1) = diff;
        model.sys.F2(i, (i + 1) * n + (i + 1)) = -conv;
        model.sys.F2(i, (i - 1) * n + (i - 1)) = conv;
    }
    model.sys.frozen = {0, static_cast<std::size_t>(n - 1)};

    Vector center(n);
    Vector radius = Vector::Constant(n, p.w / 2.0);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double x = -p.L0 / 2.0 + static_cast<double>(i) * dx;
        center[i]      = -p.U0 * std::sin(2.0 * std::numbers::pi * x / p.L0);
    }
    center[0] = center[n - 1] = 0.0;
    radius[0] = radius[n - 1] = 0.0;
    model.X0 = Hyperrectangle::from_center_radius(center, radius);
    return model;
}

double logistic_analytic(const LogisticParams& p, double x0, double t)
{
    const double a     = p.r;
    const double b     = -p.r / p.K;
    const double grow  = std::exp(a * t);
    const double denom = a + b * (1.0 - grow) * x0;
    if (denom == 0.0) {
        fail(ErrorKind::numerical, "logistic solution has a pole at t = " + std::to_string(t));
    }
    return x0 * a * grow / denom;
}

} // namespace carleman
