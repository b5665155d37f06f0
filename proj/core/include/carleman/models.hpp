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
#ifndef CARLEMAN_MODELS_HPP
#define CARLEMAN_MODELS_HPP

#include "carleman/carleman_lift.hpp"
#include "carleman/set_types.hpp"

namespace carleman
{

/// x' = r x (1 - x / K), i.e. a = r, b = -r / K.
struct LogisticParams
{
    double r = -0.5;
    double K = 0.8;
};

/// SEIR compartments (S, E, I); R is eliminated by conservation of P.
struct SeirParams
{
    double P      = 1e7;
    double Lambda = 1.0;
    double T_lat  = 5.2;  // days
    double T_inf  = 2.3;  // days
    double r_tra  = 0.13; // 1/days
    double r_vac  = 0.19; // 1/days
};

/// Viscous Burgers equation on [-L0/2, L0/2] with central differences.
struct BurgersParams
{
    double nu = 0.05;
    double L0 = 1.0;
    double U0 = 1.0;
    int nx    = 10;
    double w  = 0.06; // total width of each interior initial interval

    double dx() const
    {
        return L0 / (nx - 1);
    }
};

QuadraticSystem build_logistic(const LogisticParams& p);
Hyperrectangle logistic_initial_set();

/**
 * The constant inflow Lambda is dropped from the S equation; Lambda / P still
 * enters the diagonal of F1. The S*I coefficient sits entirely in kron column
 * (S, I), i.e. column 3 of 9.
 */
QuadraticSystem build_seir(const SeirParams& p);
/// [6e6, 3e5, 3.7e6] + B_{1e5}.
Hyperrectangle seir_initial_set();

struct BurgersModel
{
    QuadraticSystem sys;
    Hyperrectangle X0;
};

/**
 * nx grid states u_0..u_{nx-1} at x_i = -L0/2 + i dx. The two boundary nodes
 * keep zero dynamics (Dirichlet u = 0) and are listed as frozen. Initial box:
 * -U0 sin(2 pi x_i / L0) with radius w/2 on interior nodes and exactly 0 at the
 * boundary.
 */
BurgersModel build_burgers(const BurgersParams& p);

/// x(t) = x0 a e^{at} / (a + b (1 - e^{at}) x0).
double logistic_analytic(const LogisticParams& p, double x0, double t);

} // namespace carleman

#endif // CARLEMAN_MODELS_HPP
