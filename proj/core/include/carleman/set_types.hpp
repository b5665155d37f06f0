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
#ifndef CARLEMAN_SET_TYPES_HPP
#define CARLEMAN_SET_TYPES_HPP

#include "carleman/interval.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace carleman
{

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Vector / induced matrix norm selector.
enum class NormKind
{
    two,
    inf,
};

const char* to_string(NormKind p) noexcept;
std::optional<NormKind> parse_norm(const std::string& text);

/// Template direction for support-function evaluation.
struct Direction
{
    Vector vector;
    std::string label;

    Direction() = default;
    Direction(Vector v, std::string label = {});
};

/// The 2n directions +e_1, ..., +e_n, -e_1, ..., -e_n.
std::vector<Direction> box_template(std::size_t n);

/**
 * Axis-aligned box. Stored as lower/upper corners so that interval bounds
 * round-trip without loss; center() and radius() are derived, with the radius
 * rounded up so that box(center(), radius()) always contains the stored box.
 */
class Hyperrectangle
{
public:
    Hyperrectangle() = default;

    /// Box with the given center and non-negative radius (bounds rounded outward).
    static Hyperrectangle from_center_radius(const Vector& center, const Vector& radius);
    /// Box [lower, upper]; requires lower <= upper componentwise.
    static Hyperrectangle from_bounds(const Vector& lower, const Vector& upper);
    static Hyperrectangle from_intervals(const std::vector<Interval>& components);
    static Hyperrectangle point(const Vector& x);
    /// Infinity-norm ball of radius r centered at the origin.
    static Hyperrectangle ball(std::size_t n, double r);

    std::size_t dim() const
    {
        return static_cast<std::size_t>(m_lower.size());
    }
    const Vector& lower() const
    {
        return m_lower;
    }
    const Vector& upper() const
    {
        return m_upper;
    }
    Vector center() const;
    Vector radius() const;
    Interval interval(std::size_t i) const
    {
        return {m_lower[static_cast<Eigen::Index>(i)], m_upper[static_cast<Eigen::Index>(i)]};
    }

    bool contains(const Vector& x, double slack = 0.0) const;
    /// Componentwise inclusion of this box in other.
    bool subset_of(const Hyperrectangle& other) const;

    friend bool operator==(const Hyperrectangle& a, const Hyperrectangle& b);

private:
    Hyperrectangle(Vector lower, Vector upper);

    Vector m_lower;
    Vector m_upper;
};

/// rho(d, X) = max over x in X of <d, x>.
double support(const Vector& d, const Hyperrectangle& X);
double support(const Direction& d, const Hyperrectangle& X);

/// Vector p-norm (p in {2, inf}).
double vector_norm(const Vector& x, NormKind p);

/// max over x in X of ||x||_p, attained at the vertex farthest from the origin.
double set_norm(const Hyperrectangle& X, NormKind p);

/// Minkowski sum with the infinity-ball of radius eps (eps >= 0).
Hyperrectangle bloat(const Hyperrectangle& X, double eps);

/// First k coordinates, 1 <= k <= dim(X).
Hyperrectangle project(const Hyperrectangle& X, std::size_t k);

} // namespace carleman

#endif // CARLEMAN_SET_TYPES_HPP
