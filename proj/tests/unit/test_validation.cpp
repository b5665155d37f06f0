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
#include "carleman/models.hpp"
#include "carleman/validation.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace carleman;

TEST(Rk4, LogisticMatchesAnalytic)
{
    const LogisticParams p;
    Trajectory tr = simulate_rk4(build_logistic(p), Vector::Constant(1, 0.5), 10.0, 0.01);
    ASSERT_EQ(tr.times.size(), 1001u);
    EXPECT_EQ(tr.times.back(), 10.0);
    for (std::size_t k = 0; k < tr.times.size(); ++k) {
        ASSERT_NEAR(tr.states[k][0], logistic_analytic(p, 0.5, tr.times[k]), 1e-9);
    }
}

TEST(Rk4, LinearSystemMatchesExponential)
{
    std::mt19937_64 rng(91);
    QuadraticSystem s;
    s.F1          = oracle::random_matrix(rng, 3, 3);
    s.F2          = Matrix::Zero(3, 9);
    Vector x0     = oracle::random_vector(rng, 3);
    Trajectory tr = simulate_rk4(s, x0, 1.0, 0.001);
    EXPECT_LT(oracle::rel_diff(tr.states.back(), oracle::expm_taylor(s.F1) * x0), 1e-10);
}

TEST(Rk4, EquilibriumStaysPut)
{
    Trajectory tr = simulate_rk4(build_logistic({}), Vector::Constant(1, 0.8), 5.0, 0.1);
    for (const auto& x : tr.states) {
        EXPECT_NEAR(x[0], 0.8, 1e-15);
    }
}

TEST(Rk4, FourthOrderConvergence)
{
    const LogisticParams p;
    const double exact = logistic_analytic(p, 0.5, 4.0);
    const double e1    = std::abs(simulate_rk4(build_logistic(p), Vector::Constant(1, 0.5), 4.0, 0.4).states.back()[0] - exact);
    const double e2    = std::abs(simulate_rk4(build_logistic(p), Vector::Constant(1, 0.5), 4.0, 0.2).states.back()[0] - exact);
    EXPECT_GE(e1 / e2, 8.0);
}

TEST(Rk4, ShortenedLastStepAndErrors)
{
    Trajectory tr = simulate_rk4(build_logistic({}), Vector::Constant(1, 0.5), 1.05, 0.1);
    ASSERT_EQ(tr.times.size(), 12u);
    EXPECT_EQ(tr.times.back(), 1.05);
    EXPECT_THROW(simulate_rk4(build_logistic({}), Vector::Constant(1, 0.5), 1.0, 0.0), Error);
    QuadraticSystem blow;
    blow.F1 = Matrix::Zero(1, 1);
    blow.F2 = Matrix::Constant(1, 1, 1.0);
    try {
        simulate_rk4(blow, Vector::Constant(1, 1.0), 5.0, 0.01);
        FAIL();
    }
    catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::divergence);
    }
}

namespace
{
std::vector<ReachSet> logistic_sets(double eps)
{
    const LogisticParams p;
    std::vector<ReachSet> sets;
    for (int k = 0; k < 20; ++k) {
        const double a = 0.1 * k, b = 0.1 * (k + 1);
        Vector lo      = Vector::Constant(1, logistic_analytic(p, 0.47, b) - eps);
        Vector hi      = Vector::Constant(1, logistic_analytic(p, 0.53, a) + eps);
        sets.push_back({a, b, Hyperrectangle::from_bounds(lo, hi)});
    }
    return sets;
}
} // namespace

TEST(Containment, ExactEnvelopeContainsTrajectories)
{
    auto sets     = logistic_sets(0.0);
    Trajectory tr = simulate_rk4(build_logistic({}), Vector::Constant(1, 0.5), 2.0, 0.01);
    auto rep      = check_containment(tr, sets);
    EXPECT_TRUE(rep.contained);
    EXPECT_EQ(rep.samples_checked, 201u);
    EXPECT_GE(rep.min_margin, 0.0);
}

TEST(Containment, DetectsForeignTrajectory)
{
    auto sets     = logistic_sets(0.0);
    Trajectory tr = simulate_rk4(build_logistic({-0.5, 2.0}), Vector::Constant(1, 0.5), 2.0, 0.01);
    auto rep      = check_containment(tr, sets);
    EXPECT_FALSE(rep.contained);
    ASSERT_TRUE(rep.first_violation.has_value());
    EXPECT_EQ(rep.first_violation->dim, 0u);
    EXPECT_LT(rep.first_violation->margin, 0.0);
}

TEST(Containment, MonotoneUnderBloat)
{
    Trajectory tr = simulate_rk4(build_logistic({-0.5, 0.7}), Vector::Constant(1, 0.5), 2.0, 0.01);
    auto tight    = check_containment(tr, logistic_sets(0.0));
    auto loose    = check_containment(tr, logistic_sets(0.05));
    EXPECT_GE(loose.min_margin, tight.min_margin);
    if (tight.contained) {
        EXPECT_TRUE(loose.contained);
    }
}

TEST(LocateSet, SharedEndpointGoesToEarlierSet)
{
    auto sets = logistic_sets(0.0);
    EXPECT_EQ(locate_set(sets, 0.0), 0u);
    EXPECT_EQ(locate_set(sets, 0.1), 0u);
    EXPECT_EQ(locate_set(sets, 0.15), 1u);
    EXPECT_FALSE(locate_set(sets, 5.0).has_value());
}

TEST(SampleBox, VerticesFirstAndInside)
{
    std::mt19937_64 rng(92);
    Hyperrectangle X = oracle::random_box(rng, 3);
    auto samples     = sample_box(X, 20, rng, true);
    ASSERT_EQ(samples.size(), 20u);
    auto verts = oracle::vertices(X);
    for (std::size_t k = 0; k < samples.size(); ++k) {
        EXPECT_TRUE(X.contains(samples[k]));
        if (k < 8) {
            bool is_vertex = false;
            for (const auto& v : verts) {
                is_vertex = is_vertex || v == samples[k];
            }
            EXPECT_TRUE(is_vertex);
        }
    }
}
