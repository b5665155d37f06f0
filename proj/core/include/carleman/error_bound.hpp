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
#ifndef CARLEMAN_ERROR_BOUND_HPP
#define CARLEMAN_ERROR_BOUND_HPP

#include "carleman/carleman_lift.hpp"
#include "carleman/set_types.hpp"

#include <string>

namespace carleman
{

/**
 * Inputs of the truncation error bound
 *
 *     eps(t) = |x0| R^N (1 - exp(Re(lambda_1) t))^N,   R = |x0| |F2| / |Re(lambda_1)|,
 *
 * valid for all t >= 0 when Re(lambda_1) < 0 (dissipative) and R < 1 (weakly
 * nonlinear). |x0| is the set norm of the initial box.
 */
struct ErrorModel
{
    double norm_x0    = 0.0;
    double norm_F2    = 0.0;
    double re_lambda1 = 0.0;
    double R          = 0.0;
    int order         = 1;
    NormKind norm     = NormKind::two;

    bool dissipative() const
    {
        return re_lambda1 < 0.0;
    }
    bool weakly_nonlinear() const
    {
        return R < 1.0;
    }
    bool applicable() const
    {
        return dissipative() && weakly_nonlinear();
    }
    /// Human-readable list of violated assumptions; empty when applicable.
    std::string violation() const;
};

/// max Re(lambda) over the eigenvalues of F1; triangular inputs read the diagonal.
double spectral_abscissa(const Matrix& F1);

/// Induced matrix norm: spectral norm for p = 2, max absolute row sum for p = inf.
double matrix_norm(const Matrix& M, NormKind p);

/// set_norm(X0, p) * |F2|_p / |re_lambda1|; throws when re_lambda1 == 0.
double ratio_R(const Hyperrectangle& X0, const Matrix& F2, double re_lambda1, NormKind p);

/// eps(t) for an applicable model and t >= 0; throws assumptions_violated otherwise.
double epsilon(const ErrorModel& model, double t);

/// Bound over the span [t_lo, t_hi]; eps is non-decreasing so this is eps(t_hi).
double epsilon_span(const ErrorModel& model, double t_lo, double t_hi);

/// Populates the model and its applicability; never throws on violated assumptions.
ErrorModel check_assumptions(const QuadraticSystem& sys, const Hyperrectangle& X0, int order,
                             NormKind p = NormKind::two);

} // namespace carleman

#endif // CARLEMAN_ERROR_BOUND_HPP
