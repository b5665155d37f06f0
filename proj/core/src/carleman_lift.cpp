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

#include "carleman/tensor_algebra.hpp"

#include <algorithm>
#include <string>

namespace carleman
{

void QuadraticSystem::validate() const
{
    const auto n = F1.rows();
    if (n < 1 || F1.cols() != n) {
        fail(ErrorKind::invalid_argument, "F1 must be a non-empty square matrix");
    }
    if (F2.rows() != n || F2.cols() != n * n) {
        fail(ErrorKind::invalid_argument, "F2 must be " + std::to_string(n) + " x " + std::to_string(n * n) +
                                              ", got " + std::to_string(F2.rows()) + " x " +
                                              std::to_string(F2.cols()));
    }
    if (!F1.allFinite() || !F2.allFinite()) {
        fail(ErrorKind::invalid_argument, "system matrices contain non-finite entries");
    }
    for (std::size_t k : frozen) {
        if (k >= dim()) {
            fail(ErrorKind::invalid_argument, "frozen coordinate " + std::to_string(k) + " out of range");
        }
        auto row = static_cast<Eigen::Index>(k);
        if (!F1.row(row).isZero(0.0) || !F2.row(row).isZero(0.0)) {
            fail(ErrorKind::invalid_argument,
                 "frozen coordinate " + std::to_string(k) + " has non-zero dynamics");
        }
    }
}

Vector QuadraticSystem::field(const Vector& x) const
{
    return F1 * x + F2 * kron_pow(x, 2);
}

Matrix QuadraticSystem::active_F1() const
{
    if (frozen.empty()) {
        return F1;
    }
    std::vector<Eigen::Index> keep;
    for (std::size_t k = 0; k < dim(); ++k) {
        if (std::find(frozen.begin(), frozen.end(), k) == frozen.end()) {
            keep.push_back(static_cast<Eigen::Index>(k));
        }
    }
    Matrix out(keep.size(), keep.size());
    for (std::size_t r = 0; r < keep.size(); ++r) {
        for (std::size_t c = 0; c < keep.size(); ++c) {
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = F1(keep[r], keep[c]);
        }
    }
    return out;
}

std::size_t lifted_dimension(std::size_t n, int N, std::size_t budget)
{
    if (N < 1) {
        fail(ErrorKind::invalid_argument, "truncation order must be >= 1, got " + std::to_string(N));
    }
    if (n == 1) {
        if (static_cast<std::size_t>(N) > budget) {
            fail(ErrorKind::budget_exceeded, "lifted dimension exceeds the component budget");
        }
        return static_cast<std::size_t>(N);
    }
    std::size_t total = 0;
    for (int j = 1; j <= N; ++j) {
        total += checked_pow(n, j, budget);
        if (total > budget) {
            fail(ErrorKind::budget_exceeded, "lifted dimension for n=" + std::to_string(n) + ", N=" +
                                                 std::to_string(N) + " exceeds the component budget of " +
                                                 std::to_string(budget));
        }
    }
    return total;
}

namespace
{

/**
 * Emits the entries of sum_nu I (x) .. (x) F (x) .. (x) I (i factors, F at
 * slot nu) without forming the Kronecker products. For F of size n x m, the
 * term at slot nu maps row (p, a, q) to column (p, b, q) with weight F(a, b),
 * where p ranges over n^(nu-1) prefixes and q over n^(i-nu) suffixes.
 */
template <class Emit>
void for_each_sandwich_entry(const Matrix& F, std::size_t n, int i, Emit&& emit)
{
    const auto m = static_cast<std::size_t>(F.cols());
    for (int nu = 1; nu <= i; ++nu) {
        const std::size_t prefixes = checked_pow(n, nu - 1, static_cast<std::size_t>(-1));
        const std::size_t suffixes = checked_pow(n, i - nu, static_cast<std::size_t>(-1));
        for (Eigen::Index a = 0; a < F.rows(); ++a) {
            for (Eigen::Index b = 0; b < F.cols(); ++b) {
                const double value = F(a, b);
                if (value == 0.0) {
                    continue;
                }
                for (std::size_t p = 0; p < prefixes; ++p) {
                    const std::size_t row_base = (p * n + static_cast<std::size_t>(a)) * suffixes;
                    const std::size_t col_base = (p * m + static_cast<std::size_t>(b)) * suffixes;
                    for (std::size_t q = 0; q < suffixes; ++q) {
                        emit(row_base + q, col_base + q, value);
                    }
                }
            }
        }
    }
}

const Matrix& factor(const QuadraticSystem& sys, int iprime)
{
    if (iprime == 1) {
        return sys.F1;
    }
    if (iprime == 2) {
        return sys.F2;
    }
    fail(ErrorKind::invalid_argument, "transfer block index iprime must be 1 or 2, got " + std::to_string(iprime));
}

} // namespace

Matrix transfer_block(const QuadraticSystem& sys, int i, int iprime)
{
    sys.validate();
    const Matrix& F = factor(sys, iprime);
    if (i < 1) {
        fail(ErrorKind::invalid_argument, "transfer block row must be >= 1, got " + std::to_string(i));
    }
    const std::size_t n    = sys.dim();
    const std::size_t rows = checked_pow(n, i, component_budget());
    const std::size_t cols = checked_pow(n, i + iprime - 1, component_budget());
    Matrix out             = Matrix::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for_each_sandwich_entry(F, n, i, [&](std::size_t r, std::size_t c, double v) {
        out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) += v;
    });
    return out;
}

LiftedSystem assemble(const QuadraticSystem& sys, int N, std::size_t budget)
{
    sys.validate();
    LiftedSystem lifted;
    lifted.order = N;
    lifted.n     = sys.dim();
    lifted.dim   = lifted_dimension(lifted.n, N, budget);

    lifted.block_offsets.resize(static_cast<std::size_t>(N) + 1);
    lifted.block_offsets[0] = 0;
    for (int j = 1; j <= N; ++j) {
        lifted.block_offsets[static_cast<std::size_t>(j)] =
            lifted.block_offsets[static_cast<std::size_t>(j - 1)] + checked_pow(lifted.n, j, budget);
    }

    std::vector<Eigen::Triplet<double>> triplets;
    for (int j = 1; j <= N; ++j) {
        const std::size_t row0 = lifted.block_offsets[static_cast<std::size_t>(j - 1)];
        const std::size_t diag = row0;
        const std::size_t sup  = lifted.block_offsets[static_cast<std::size_t>(j)];
        for_each_sandwich_entry(sys.F1, lifted.n, j, [&](std::size_t r, std::size_t c, double v) {
            triplets.emplace_back(static_cast<Eigen::Index>(row0 + r), static_cast<Eigen::Index>(diag + c), v);
        });
        if (j < N) {
            for_each_sandwich_entry(sys.F2, lifted.n, j, [&](std::size_t r, std::size_t c, double v) {
                triplets.emplace_back(static_cast<Eigen::Index>(row0 + r), static_cast<Eigen::Index>(sup + c), v);
            });
        }
    }
    const auto dim = static_cast<Eigen::Index>(lifted.dim);
    lifted.A.resize(dim, dim);
    lifted.A.setFromTriplets(triplets.begin(), triplets.end());
    lifted.A.makeCompressed();
    return lifted;
}

Vector lift_point(const Vector& x0, int N, std::size_t budget)
{
    const std::size_t dim = lifted_dimension(static_cast<std::size_t>(x0.size()), N, budget);
    Vector out(static_cast<Eigen::Index>(dim));
    Eigen::Index offset = 0;
    Vector power        = x0;
    for (int j = 1; j <= N; ++j) {
        if (j > 1) {
            power = kron_pow(x0, j, budget);
        }
        out.segment(offset, power.size()) = power;
        offset += power.size();
    }
    return out;
}

Hyperrectangle lift_box(const Hyperrectangle& X0, int N, std::size_t budget)
{
    const std::size_t dim = lifted_dimension(X0.dim(), N, budget);
    Vector lo(static_cast<Eigen::Index>(dim));
    Vector hi(static_cast<Eigen::Index>(dim));
    Eigen::Index offset = 0;
    for (int j = 1; j <= N; ++j) {
        Hyperrectangle block = box_kron_pow(X0, j, budget);
        const auto size      = static_cast<Eigen::Index>(block.dim());
        lo.segment(offset, size) = block.lower();
        hi.segment(offset, size) = block.upper();
        offset += size;
    }
    return Hyperrectangle::from_bounds(lo, hi);
}

} // namespace carleman
