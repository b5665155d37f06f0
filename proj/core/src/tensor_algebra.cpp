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
#include "carleman/tensor_algebra.hpp"

#include <numeric>
#include <string>

namespace carleman
{

unsigned MultiIndex::order() const
{
    return std::accumulate(exponents.begin(), exponents.end(), 0u);
}

Matrix kron(const Matrix& a, const Matrix& b)
{
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Vector kron_pow(const Vector& x, int i, std::size_t budget)
{
    if (i < 1) {
        fail(ErrorKind::invalid_argument, "Kronecker power order must be >= 1, got " + std::to_string(i));
    }
    checked_pow(static_cast<std::size_t>(x.size()), i, budget);
    Vector out = x;
    for (int k = 1; k < i; ++k) {
        Vector next(out.size() * x.size());
        for (Eigen::Index a = 0; a < out.size(); ++a) {
            next.segment(a * x.size(), x.size()) = out[a] * x;
        }
        out = std::move(next);
    }
    return out;
}

std::vector<std::size_t> position_tuple(std::size_t position, std::size_t n, int i)
{
    std::vector<std::size_t> tuple(static_cast<std::size_t>(i));
    for (int k = i - 1; k >= 0; --k) {
        tuple[static_cast<std::size_t>(k)] = position % n;
        position /= n;
    }
    if (position != 0) {
        fail(ErrorKind::invalid_argument, "position exceeds n^i");
    }
    return tuple;
}

MultiIndex canonical_monomial(std::span<const std::size_t> tuple, std::size_t n)
{
    if (tuple.empty()) {
        fail(ErrorKind::invalid_argument, "empty factor tuple");
    }
    MultiIndex w{std::vector<unsigned>(n, 0u)};
    for (std::size_t k : tuple) {
        if (k >= n) {
            fail(ErrorKind::invalid_argument, "tuple entry " + std::to_string(k) +
                                                  " out of range for dimension " + std::to_string(n));
        }
        ++w.exponents[k];
    }
    return w;
}

Interval eval_monomial(const MultiIndex& w, const Hyperrectangle& X)
{
    if (w.dim() != X.dim()) {
        fail(ErrorKind::invalid_argument, "monomial and box dimensions differ");
    }
    Interval acc = Interval::point(1.0);
    bool first   = true;
    for (std::size_t k = 0; k < w.dim(); ++k) {
        if (w.exponents[k] == 0) {
            continue;
        }
        Interval factor = pow(X.interval(k), w.exponents[k]);
        acc             = first ? factor : acc * factor;
        first           = false;
    }
    return acc;
}

Hyperrectangle box_kron_pow(const Hyperrectangle& X, int i, std::size_t budget)
{
    if (i < 1) {
        fail(ErrorKind::invalid_argument, "Kronecker power order must be >= 1, got " + std::to_string(i));
    }
    if (i == 1) {
        return X;
    }
    const std::size_t n     = X.dim();
    const std::size_t count = checked_pow(n, i, budget);
    std::vector<Interval> components(count);
    for (std::size_t pos = 0; pos < count; ++pos) {
        auto tuple      = position_tuple(pos, n, i);
        components[pos] = eval_monomial(canonical_monomial(tuple, n), X);
    }
    return Hyperrectangle::from_intervals(components);
}

} // namespace carleman
