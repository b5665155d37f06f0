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
#include "carleman/set_types.hpp"

#include "carleman/errors.hpp"

#include <algorithm>
#include <cmath>

namespace carleman
{

const char* to_string(NormKind p) noexcept
{
    return p == NormKind::two ? "2" : "inf";
}

std::optional<NormKind> parse_norm(const std::string& text)
{
    if (text == "2") {
        return NormKind::two;
    }
    if (text == "inf" || text == "infinity" || text == "Inf") {
        return NormKind::inf;
    }
    return std::nullopt;
}

Direction::Direction(Vector v, std::string label_)
    : vector(std::move(v))
    , label(std::move(label_))
{
    if (vector.size() == 0 || vector.isZero(0.0)) {
        fail(ErrorKind::invalid_argument, "direction vector must be nonzero");
    }
}

std::vector<Direction> box_template(std::size_t n)
{
    std::vector<Direction> dirs;
    dirs.reserve(2 * n);
    auto size = static_cast<Eigen::Index>(n);
    for (int sign : {+1, -1}) {
        for (Eigen::Index i = 0; i < size; ++i) {
            Vector e = Vector::Zero(size);
            e[i]     = sign;
            dirs.emplace_back(std::move(e), (sign > 0 ? "+e" : "-e") + std::to_string(i + 1));
        }
    }
    return dirs;
}

Hyperrectangle::Hyperrectangle(Vector lower, Vector upper)
    : m_lower(std::move(lower))
    , m_upper(std::move(upper))
{
}

Hyperrectangle Hyperrectangle::from_center_radius(const Vector& center, const Vector& radius)
{
    if (center.size() != radius.size()) {
        fail(ErrorKind::invalid_argument, "center and radius dimensions differ (" +
                                              std::to_string(center.size()) + " vs " +
                                              std::to_string(radius.size()) + ")");
    }
    Vector lo(center.size());
    Vector hi(center.size());
    for (Eigen::Index i = 0; i < center.size(); ++i) {
        if (!(radius[i] >= 0.0) || !std::isfinite(radius[i]) || !std::isfinite(center[i])) {
            fail(ErrorKind::invalid_argument,
                 "radius component " + std::to_string(i + 1) + " must be finite and non-negative");
        }
        lo[i] = sub_down(center[i], radius[i]);
        hi[i] = add_up(center[i], radius[i]);
    }
    return {std::move(lo), std::move(hi)};
}

Hyperrectangle Hyperrectangle::from_bounds(const Vector& lower, const Vector& upper)
{
    if (lower.size() != upper.size()) {
        fail(ErrorKind::invalid_argument, "lower and upper bound dimensions differ");
    }
    for (Eigen::Index i = 0; i < lower.size(); ++i) {
        if (!(lower[i] <= upper[i])) {
            fail(ErrorKind::invalid_argument,
                 "empty or non-finite bounds in component " + std::to_string(i + 1));
        }
    }
    return {lower, upper};
}

Hyperrectangle Hyperrectangle::from_intervals(const std::vector<Interval>& components)
{
    auto n = static_cast<Eigen::Index>(components.size());
    Vector lo(n);
    Vector hi(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        lo[i] = components[static_cast<std::size_t>(i)].lo;
        hi[i] = components[static_cast<std::size_t>(i)].hi;
    }
    return from_bounds(lo, hi);
}

Hyperrectangle Hyperrectangle::point(const Vector& x)
{
    return from_bounds(x, x);
}

Hyperrectangle Hyperrectangle::ball(std::size_t n, double r)
{
    if (!(r >= 0.0)) {
        fail(ErrorKind::invalid_argument, "ball radius must be non-negative");
    }
    auto size = static_cast<Eigen::Index>(n);
    return {Vector::Constant(size, -r), Vector::Constant(size, r)};
}

Vector Hyperrectangle::center() const
{
    return (m_lower + m_upper) / 2.0;
}

Vector Hyperrectangle::radius() const
{
    Vector c = center();
    Vector r(c.size());
    for (Eigen::Index i = 0; i < c.size(); ++i) {
        r[i] = std::max(sub_up(m_upper[i], c[i]), sub_up(c[i], m_lower[i]));
    }
    return r;
}

bool Hyperrectangle::contains(const Vector& x, double slack) const
{
    if (x.size() != m_lower.size()) {
        return false;
    }
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (x[i] < m_lower[i] - slack || x[i] > m_upper[i] + slack) {
            return false;
        }
    }
    return true;
}

bool Hyperrectangle::subset_of(const Hyperrectangle& other) const
{
    return dim() == other.dim() && (other.m_lower.array() <= m_lower.array()).all() &&
           (m_upper.array() <= other.m_upper.array()).all();
}

bool operator==(const Hyperrectangle& a, const Hyperrectangle& b)
{
    return a.dim() == b.dim() && a.m_lower == b.m_lower && a.m_upper == b.m_upper;
}

double support(const Vector& d, const Hyperrectangle& X)
{
    if (static_cast<std::size_t>(d.size()) != X.dim()) {
        fail(ErrorKind::invalid_argument, "support: direction has dimension " +
                                              std::to_string(d.size()) + ", set has " +
                                              std::to_string(X.dim()));
    }
    return (d.array() * X.upper().array()).max(d.array() * X.lower().array()).sum();
}

double support(const Direction& d, const Hyperrectangle& X)
{
    return support(d.vector, X);
}

double vector_norm(const Vector& x, NormKind p)
{
    return p == NormKind::two ? x.norm() : x.lpNorm<Eigen::Infinity>();
}

double set_norm(const Hyperrectangle& X, NormKind p)
{
    Vector farthest = X.lower().cwiseAbs().cwiseMax(X.upper().cwiseAbs());
    return vector_norm(farthest, p);
}

Hyperrectangle bloat(const Hyperrectangle& X, double eps)
{
    if (!(eps >= 0.0)) {
        fail(ErrorKind::invalid_argument, "bloat radius must be non-negative");
    }
    Vector lo = X.lower();
    Vector hi = X.upper();
    for (Eigen::Index i = 0; i < lo.size(); ++i) {
        lo[i] = sub_down(lo[i], eps);
        hi[i] = add_up(hi[i], eps);
    }
    return Hyperrectangle::from_bounds(lo, hi);
}

Hyperrectangle project(const Hyperrectangle& X, std::size_t k)
{
    if (k < 1 || k > X.dim()) {
        fail(ErrorKind::invalid_argument, "projection dimension " + std::to_string(k) +
                                              " outside [1, " + std::to_string(X.dim()) + "]");
    }
    auto size = static_cast<Eigen::Index>(k);
    return Hyperrectangle::from_bounds(X.lower().head(size), X.upper().head(size));
}

} // namespace carleman
