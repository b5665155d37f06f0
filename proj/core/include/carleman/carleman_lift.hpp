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
#ifndef CARLEMAN_CARLEMAN_LIFT_HPP
#define CARLEMAN_CARLEMAN_LIFT_HPP

#include "carleman/errors.hpp"
#include "carleman/set_types.hpp"

#include <Eigen/SparseCore>

#include <cstddef>
#include <string>
#include <vector>

namespace carleman
{

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

/**
 * x' = F1 x + F2 (x (x) x). F2 is n x n^2 with columns in kron_pow order.
 *
 * `frozen` lists coordinates whose dynamics are identically zero (e.g.
 * Dirichlet boundary nodes kept to preserve the state layout); the spectral
 * abscissa used by the error bound is taken over the remaining coordinates.
 */
struct QuadraticSystem
{
    Matrix F1;
    Matrix F2;
    std::vector<std::size_t> frozen;
    std::string name;

    std::size_t dim() const
    {
        return static_cast<std::size_t>(F1.rows());
    }

    /// Throws invalid_argument unless F1 is n x n, F2 is n x n^2 and frozen rows are zero.
    void validate() const;

    /// F1 x + F2 (x (x) x).
    Vector field(const Vector& x) const;

    /// F1 with frozen rows and columns removed.
    Matrix active_F1() const;
};

/**
 * Truncated Carleman system y' = A y of order N. Blocks are numbered 1..N
 * (block j holds x^(j)); block_offsets[j - 1] is the 0-based row of block j and
 * block_offsets[N] == dim.
 */
struct LiftedSystem
{
    int order = 0;
    std::size_t n = 0;
    std::size_t dim = 0;
    SparseMatrix A;
    std::vector<std::size_t> block_offsets;

    std::size_t block_size(int j) const
    {
        return block_offsets[static_cast<std::size_t>(j)] - block_offsets[static_cast<std::size_t>(j - 1)];
    }
};

/// n + n^2 + ... + n^N, with the n = 1 case handled separately.
std::size_t lifted_dimension(std::size_t n, int N, std::size_t budget = component_budget());

/**
 * Transfer matrix A^i_{i+iprime-1} = sum over slots nu of
 * I (x) ... (x) F_iprime (x) ... (x) I, with i factors. Dense; intended for
 * inspection and tests, assemble() never materializes it.
 */
Matrix transfer_block(const QuadraticSystem& sys, int i, int iprime);

LiftedSystem assemble(const QuadraticSystem& sys, int N, std::size_t budget = component_budget());

/// (x0, x0^(2), ..., x0^(N)).
Vector lift_point(const Vector& x0, int N, std::size_t budget = component_budget());

/// Concatenation of box_kron_pow(X0, j) for j = 1..N.
Hyperrectangle lift_box(const Hyperrectangle& X0, int N, std::size_t budget = component_budget());

} // namespace carleman

#endif // CARLEMAN_CARLEMAN_LIFT_HPP
