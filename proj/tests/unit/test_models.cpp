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
#include "carleman/tensor_algebra.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace carleman;

TEST(Logistic, Coefficients)
{
    QuadraticSystem s = build_logistic({-0.5, 0.8});
    EXPECT_EQ(s.F1(0, 0), -0.5);
    EXPECT_EQ(s.F2(0, 0), 0.625);
    Hyperrectangle X = logistic_initial_set();
    EXPECT_EQ(X.lower()[0], 0.47);
    EXPECT_EQ(X.upper()[0], 0.53);
}

TEST(Logistic, AnalyticSolution)
{
    const LogisticParams p;
    EXPECT_EQ(logistic_analytic(p, 0.5, 0.0), 0.5);
    // x(t) = K x0 e^{rt} / (K + x0 (e^{rt} - 1))
    const double e = std::exp(-0.5 * 3.0);
    EXPECT_NEAR(logistic_analytic(p, 0.5, 3.0), 0.8 * 0.5 * e / (0.8 + 0.5 * (e - 1.0)), 1e-15);
    EXPECT_NEAR(logistic_analytic(p, 0.8, 5.0), 0.8, 1e-15);
}

TEST(Seir, Coefficients)
{
    const SeirParams p;
    QuadraticSystem s = build_seir(p);
    ASSERT_EQ(s.dim(), 3u);
    ASSERT_EQ(s.F2.cols(), 9);
    const double mu = p.Lambda / p.P;
    EXPECT_DOUBLE_EQ(s.F1(0, 0), -(mu + p.r_vac));
    EXPECT_DOUBLE_EQ(s.F1(1, 1), -(mu + 1.0 / p.T_lat));
    EXPECT_DOUBLE_EQ(s.F1(2, 1), 1.0 / p.T_lat);
    EXPECT_DOUBLE_EQ(s.F1(2, 2), -(mu + 1.0 / p.T_inf));
    EXPECT_EQ(s.F2.cwiseAbs().sum(), 2.0 * p.r_tra / p.P);
}

TEST(Seir, VectorFieldMatchesHandWrittenEquations)
{
    const SeirParams p;
    QuadraticSystem s = build_seir(p);
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> u(0.0, 5e6);
    const double mu = p.Lambda / p.P;
    for (int trial = 0; trial < 50; ++trial) {
        const double S = u(rng), E = u(rng), I = u(rng);
        Vector x(3);
        x << S, E, I;
        Vector expected(3);
        expected << -p.r_tra * S * I / p.P - (mu + p.r_vac) * S, //
            p.r_tra * S * I / p.P - (mu + 1.0 / p.T_lat) * E,    //
            E / p.T_lat - (mu + 1.0 / p.T_inf) * I;
        Vector f = s.F1 * x + s.F2 * kron_pow(x, 2);
        EXPECT_LT(oracle::rel_diff(f, expected), 1e-12);
        EXPECT_LT(oracle::rel_diff(s.field(x), expected), 1e-12);
    }
}

TEST(Seir, InitialSet)
{
    Hyperrectangle X = seir_initial_set();
    Vector c(3);
    c << 6e6, 3e5, 3.7e6;
    EXPECT_LT(oracle::rel_diff(X.center(), c), 1e-15);
    EXPECT_LE(X.lower()[1], 2e5);
    EXPECT_GE(X.upper()[1], 4e5);
}

TEST(Burgers, VectorFieldIsConservativeCentralDifference)
{
    const BurgersParams p;
    BurgersModel bm = build_burgers(p);
    ASSERT_EQ(bm.sys.dim(), 10u);
    EXPECT_EQ(bm.sys.frozen, (std::vector<std::size_t>{0, 9}));
    const double dx = p.dx();
    std::mt19937_64 rng(72);
    for (int trial = 0; trial < 20; ++trial) {
        Vector u = oracle::random_vector(rng, 10);
        u[0] = u[9] = 0.0;
        Vector expected = Vector::Zero(10);
        for (int i = 1; i < 9; ++i) {
            expected[i] = p.nu * (u[i + 1] - 2 * u[i] + u[i - 1]) / (dx * dx) -
                          (u[i + 1] * u[i + 1] - u[i - 1] * u[i - 1]) / (4 * dx);
        }
        EXPECT_LT(oracle::rel_diff(bm.sys.field(u), expected), 1e-12);
    }
}

TEST(Burgers, InitialSetRadiiAndBoundary)
{
    const BurgersParams p;
    BurgersModel bm = build_burgers(p);
    EXPECT_EQ(bm.X0.lower()[0], 0.0);
    EXPECT_EQ(bm.X0.upper()[0], 0.0);
    EXPECT_EQ(bm.X0.lower()[9], 0.0);
    for (int i = 1; i < 9; ++i) {
        const double x = -0.5 + i * p.dx();
        const double c = -std::sin(2.0 * std::numbers::pi * x);
        EXPECT_NEAR(bm.X0.center()[i], c, 1e-15);
        EXPECT_NEAR(bm.X0.radius()[i], 0.03, 1e-15);
    }
    BurgersParams point = p;
    point.w             = 0.0;
    EXPECT_EQ(build_burgers(point).X0.radius(), Vector::Zero(10));
}
