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
#ifndef CARLEMAN_TENSOR_ALGEBRA_HPP
#define CARLEMAN_TENSOR_ALGEBRA_HPP

#include "carleman/errors.hpp"
#include "carleman/set_types.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace carleman
{

/**
 * Exponent vector of a monomial x_1^w_1 ... x_n^w_n. The order is the total
 * degree, sum(w).
 */
struct MultiIndex
{
    std::vector<unsigned> exponents;

    unsigned order() const;
    std::size_t dim() const
    {
        return exponents.size();
    }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

/// Kronecker product; block (i, j) of the result is a(i, j) * b.
Matrix kron(const Matrix& a, const Matrix& b);

/**
 * i-fold Kronecker power of x (i >= 1). Components are ordered
 * lexicographically in the factor index tuple (k_1, ..., k_i), k_1 most
 * significant, matching the recursive definition x^(i) = x^(i-1) (x) x.
 */
Vector kron_pow(const Vector& x, int i, std::size_t budget = component_budget());

/**
 * Factor index tuple (0-based, most significant first) of component `position`
 * of an i-fold Kronecker power in n dimensions.
 */
std::vector<std::size_t> position_tuple(std::size_t position, std::size_t n, int i);

/// Groups repeated variables of a 0-based factor tuple into an exponent vector.
MultiIndex canonical_monomial(std::span<const std::size_t> tuple, std::size_t n);

/// Interval evaluation of a grouped monomial over the box X.
Interval eval_monomial(const MultiIndex& w, const Hyperrectangle& X);

/**
 * Box enclosing { x^(i) : x in X }. Each component is the interval product of
 * integer powers of the grouped monomial, so a repeated variable is never
 * evaluated twice (e.g. x1^2 over [-0.1, 0.1] gives [0, 0.01]).
 */
Hyperrectangle box_kron_pow(const Hyperrectangle& X, int i, std::size_t budget = component_budget());

} // namespace carleman

#endif // CARLEMAN_TENSOR_ALGEBRA_HPP
