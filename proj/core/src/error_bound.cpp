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
#include "carleman/error_bound.hpp"

#include "carleman/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <sstream>

namespace carleman
{

std::string ErrorModel::violation() const
{
    std::ostringstream out;
    if (!dissipative()) {
        out << "not dissipative: Re(lambda_1) = " << re_lambda1 << " is not negative";
    }
    if (!weakly_nonlinear()) {
        if (!dissipative()) {
            out << "; ";
        }
        out << "not weakly nonlinear: R = " << R << " is not smaller than one";
    }
    return out.str();
}

namespace
{

bool is_triangular(const Matrix& M)
{
    bool upper = true;
    bool lower = true;
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        for (Eigen::Index j = 0; j < M.cols(); ++j) {
            if (M(i, j) == 0.0) {
                continue;
            }
            upper = upper && j >= i;
            lower = lower && j <= i;
        }
    }
    return upper || lower;
}

} // namespace

double spectral_abscissa(const Matrix& F1)
{
    if (F1.rows() != F1.cols() || F1.rows() == 0) {
        fail(ErrorKind::invalid_argument, "spectral abscissa needs a non-empty square matrix");
    }
    if (!F1.allFinite()) {
        fail(ErrorKind::invalid_argument, "spectral abscissa input has non-finite entries");
    }
    if (is_triangular(F1)) {
        return F1.diagonal().maxCoeff();
    }
    Eigen::EigenSolver<Matrix> solver(F1, false);
    if (solver.info() != Eigen::Success) {
        fail(ErrorKind::numerical, "eigenvalue iteration did not converge");
    }
    return solver.eigenvalues().real().maxCoeff();
}

double matrix_norm(const Matrix& M, NormKind p)
{
    if (M.size() == 0) {
        return 0.0;
    }
    if (p == NormKind::inf) {
        return M.cwiseAbs().rowwise().sum().maxCoeff();
    }
    Eigen::JacobiSVD<Matrix> svd(M);
    return svd.singularValues()[0];
}

double ratio_R(const Hyperrectangle& X0, const Matrix& F2, double re_lambda1, NormKind p)
{
    if (re_lambda1 == 0.0) {
        fail(ErrorKind::invalid_argument, "ratio R is undefined for Re(lambda_1) = 0");
    }
    return set_norm(X0, p) * matrix_norm(F2, p) / std::abs(re_lambda1);
}

double epsilon(const ErrorModel& model, double t)
{
    if (!model.applicable()) {
        fail(ErrorKind::assumptions_violated, model.violation());
    }
    if (!(t >= 0.0)) {
        fail(ErrorKind::invalid_argument, "error bound needs t >= 0");
    }
    // 1 - exp(re t), computed without cancellation for small t.
    const double decay = -std::expm1(model.re_lambda1 * t);
    return model.norm_x0 * std::pow(model.R, model.order) * std::pow(decay, model.order);
}

double epsilon_span(const ErrorModel& model, double t_lo, double t_hi)
{
    if (!(t_lo >= 0.0) || !(t_lo <= t_hi)) {
        fail(ErrorKind::invalid_argument, "error bound span must satisfy 0 <= t_lo <= t_hi");
    }
    return epsilon(model, t_hi);
}

ErrorModel check_assumptions(const QuadraticSystem& sys, const Hyperrectangle& X0, int order, NormKind p)
{
    sys.validate();
    if (X0.dim() != sys.dim()) {
        fail(ErrorKind::invalid_argument, "initial set dimension does not match the system");
    }
    ErrorModel model;
    model.order      = order;
    model.norm       = p;
    model.re_lambda1 = spectral_abscissa(sys.active_F1());
    model.norm_F2    = matrix_norm(sys.F2, p);
    model.norm_x0    = set_norm(X0, p);
    const double numerator = model.norm_x0 * model.norm_F2;
    if (model.re_lambda1 != 0.0) {
        model.R = numerator / std::abs(model.re_lambda1);
    }
    else {
        model.R = numerator == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return model;
}

} // namespace carleman
