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
#include "carleman/carleman_lift.hpp"
#include "carleman/models.hpp"
#include "carleman/tensor_algebra.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace carleman;

namespace
{
QuadraticSystem scalar(double a, double b)
{
    QuadraticSystem s;
    s.F1 = Matrix::Constant(1, 1, a);
    s.F2 = Matrix::Constant(1, 1, b);
    return s;
}

QuadraticSystem random_system(std::mt19937_64& rng, int n)
{
    QuadraticSystem s;
    s.F1 = oracle::random_matrix(rng, n, n);
    s.F2 = oracle::random_matrix(rng, n, n * n);
    return s;
}
} // namespace

TEST(LiftedDimension, Examples)
{
    EXPECT_EQ(lifted_dimension(1, 4), 4u);
    EXPECT_EQ(lifted_dimension(3, 5), 363u);
    EXPECT_EQ(lifted_dimension(10, 3), 1110u);
    EXPECT_EQ(lifted_dimension(2, 1), 2u);
    try {
        lifted_dimension(10, 8, 1'000'000);
        FAIL();
    }
    catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::budget_exceeded);
    }
}

TEST(TransferBlock, ScalarLogistic)
{
    QuadraticSystem s = scalar(-0.5, 0.625);
    EXPECT_EQ(transfer_block(s, 3, 1)(0, 0), -1.5);
    EXPECT_EQ(transfer_block(s, 3, 2)(0, 0), 1.875);
}

TEST(TransferBlock, IdentitySandwich)
{
    QuadraticSystem s;
    s.F1 = Matrix::Identity(2, 2);
    s.F2 = Matrix::Zero(2, 4);
    EXPECT_EQ(transfer_block(s, 2, 1), Matrix(2.0 * Matrix::Identity(4, 4)));
    EXPECT_EQ(transfer_block(s, 3, 1), Matrix(3.0 * Matrix::Identity(8, 8)));
}

TEST(TransferBlock, MatchesKroneckerSumOracle)
{
    std::mt19937_64 rng(41);
    for (int n = 1; n <= 3; ++n) {
        QuadraticSystem s = random_system(rng, n);
        for (int i = 1; i <= 3; ++i) {
            Matrix t1 = transfer_block(s, i, 1);
            Matrix t2 = transfer_block(s, i, 2);
            EXPECT_LT(oracle::rel_diff(t1, oracle::kronecker_sum(s.F1, n, i)), 1e-14);
            EXPECT_LT(oracle::rel_diff(t2, oracle::kronecker_sum(s.F2, n, i)), 1e-14);
            EXPECT_EQ(t2.rows(), static_cast<Eigen::Index>(std::pow(n, i)));
            EXPECT_EQ(t2.cols(), static_cast<Eigen::Index>(std::pow(n, i + 1)));
        }
    }
    EXPECT_THROW(transfer_block(random_system(rng, 2), 2, 3), Error);
}

TEST(Assemble, ScalarLogisticMatrix)
{
    LiftedSystem L = assemble(scalar(-0.5, 0.625), 4);
    Matrix expected(4, 4);
    expected << -0.5, 0.625, 0, 0, //
        0, -1.0, 1.25, 0,          //
        0, 0, -1.5, 1.875,         //
        0, 0, 0, -2.0;
    EXPECT_EQ(Matrix(L.A), expected);
    EXPECT_EQ(L.block_offsets, (std::vector<std::size_t>{0, 1, 2, 3, 4}));
}

TEST(Assemble, BlockStructureMatchesTransferBlocks)
{
    std::mt19937_64 rng(42);
    QuadraticSystem s = random_system(rng, 2);
    const int N       = 4;
    LiftedSystem L    = assemble(s, N);
    ASSERT_EQ(L.dim, 30u);
    Matrix A = Matrix(L.A);
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            auto r0    = static_cast<Eigen::Index>(L.block_offsets[i - 1]);
            auto c0    = static_cast<Eigen::Index>(L.block_offsets[j - 1]);
            auto rows  = static_cast<Eigen::Index>(L.block_size(i));
            auto cols  = static_cast<Eigen::Index>(L.block_size(j));
            Matrix blk = A.block(r0, c0, rows, cols);
            if (j == i) {
                EXPECT_LT(oracle::rel_diff(blk, oracle::kronecker_sum(s.F1, 2, i)), 1e-14);
            }
            else if (j == i + 1) {
                EXPECT_LT(oracle::rel_diff(blk, oracle::kronecker_sum(s.F2, 2, i)), 1e-14);
            }
            else {
                EXPECT_EQ(blk.cwiseAbs().maxCoeff(), 0.0) << i << "," << j;
            }
        }
    }
}

TEST(Assemble, BuiltinModelDimensions)
{
    EXPECT_EQ(assemble(build_seir({}), 5).dim, 363u);
    EXPECT_EQ(assemble(build_burgers({}).sys, 3).dim, 1110u);
}

TEST(Assemble, DerivativeIdentityOnTruncatedBlocks)
{
    // for i < N the lifted rows reproduce d/dt x^(i) exactly along the true flow
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        const int n       = 1 + trial % 3;
        const int N       = 4;
        QuadraticSystem s = random_system(rng, n);
        LiftedSystem L    = assemble(s, N);
        Vector x          = oracle::random_vector(rng, n);
        Vector y          = lift_point(x, N);
        Vector Ay         = L.A * y;
        Vector f          = s.F1 * x + s.F2 * oracle::kron_power_loops(x, 2);
        for (int i = 1; i < N; ++i) {
            // product rule: sum over slots of x (x) .. f .. (x) x
            Vector deriv = Vector::Zero(static_cast<Eigen::Index>(std::pow(n, i)));
            for (int nu = 0; nu < i; ++nu) {
                Matrix acc = Matrix::Ones(1, 1);
                for (int slot = 0; slot < i; ++slot) {
                    acc = oracle::kron_loops(acc, slot == nu ? f : x);
                }
                deriv += acc.col(0);
            }
            auto off = static_cast<Eigen::Index>(L.block_offsets[i - 1]);
            EXPECT_LT(oracle::rel_diff(Ay.segment(off, deriv.size()), deriv), 1e-12) << "i=" << i;
        }
    }
}

TEST(LiftPoint, Examples)
{
    Vector x = Vector::Constant(1, 0.5);
    Vector y(3);
    y << 0.5, 0.25, 0.125;
    EXPECT_EQ(lift_point(x, 3), y);
    Vector v(2);
    v << 1, 2;
    EXPECT_EQ(lift_point(v, 1), v);
    EXPECT_EQ(lift_point(Vector::Zero(2), 3), Vector::Zero(14));
}

TEST(LiftBox, LogisticInitialSet)
{
    Hyperrectangle Y = lift_box(logistic_initial_set(), 3);
    ASSERT_EQ(Y.dim(), 3u);
    const double lo[3] = {0.47, 0.2209, 0.103823};
    const double hi[3] = {0.53, 0.2809, 0.148877};
    for (std::size_t k = 0; k < 3; ++k) {
        EXPECT_NEAR(Y.interval(k).lo, lo[k], 1e-15);
        EXPECT_NEAR(Y.interval(k).hi, hi[k], 1e-15);
    }
    EXPECT_LE(Y.interval(1).lo, 0.47 * 0.47);
    EXPECT_GE(Y.interval(1).hi, 0.53 * 0.53);
}

TEST(LiftBox, ContainsLiftedSamples)
{
    std::mt19937_64 rng(44);
    std::uniform_real_distribution<double> t(0.0, 1.0);
    for (int n = 1; n <= 3; ++n) {
        Hyperrectangle X = oracle::random_box(rng, n, 1.0, 0.3);
        Hyperrectangle Y = lift_box(X, 3);
        EXPECT_EQ(Y.dim(), lifted_dimension(static_cast<std::size_t>(n), 3));
        for (int s = 0; s < 1000; ++s) {
            Vector x = X.lower() + (X.upper() - X.lower()).cwiseProduct(
                                       Vector::NullaryExpr(n, [&] { return t(rng); }));
            x        = x.cwiseMax(X.lower()).cwiseMin(X.upper());
            ASSERT_TRUE(Y.contains(lift_point(x, 3), 1e-15));
        }
    }
}

TEST(QuadraticSystem, ValidateRejectsShapesAndActiveFrozenRows)
{
    QuadraticSystem s = scalar(-1.0, 0.0);
    s.F2              = Matrix::Zero(1, 2);
    EXPECT_THROW(s.validate(), Error);
    QuadraticSystem f;
    f.F1     = Matrix::Identity(2, 2);
    f.F2     = Matrix::Zero(2, 4);
    f.frozen = {0};
    EXPECT_THROW(f.validate(), Error);
    f.F1(0, 0) = 0.0;
    EXPECT_NO_THROW(f.validate());
    EXPECT_EQ(f.active_F1(), Matrix::Constant(1, 1, 1.0));
}
