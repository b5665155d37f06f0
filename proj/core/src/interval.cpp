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
#include "carleman/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

namespace carleman
{

namespace
{

constexpr double inf = std::numeric_limits<double>::infinity();

// Below this magnitude the fma residual of a product may itself be rounded.
constexpr double tiny_product = 0x1p-960;

double next_down(double x)
{
    return std::nextafter(x, -inf);
}

double next_up(double x)
{
    return std::nextafter(x, inf);
}

// Knuth's TwoSum: s + err == a + b exactly when no overflow occurs.
double two_sum_error(double a, double b, double s)
{
    double bb = s - a;
    return (a - (s - bb)) + (b - bb);
}

} // namespace

double add_down(double a, double b)
{
    double s = a + b;
    if (!std::isfinite(s)) {
        return (std::isfinite(a) && std::isfinite(b) && s > 0) ? std::numeric_limits<double>::max() : s;
    }
    return two_sum_error(a, b, s) < 0 ? next_down(s) : s;
}

double add_up(double a, double b)
{
    double s = a + b;
    if (!std::isfinite(s)) {
        return (std::isfinite(a) && std::isfinite(b) && s < 0) ? std::numeric_limits<double>::lowest() : s;
    }
    return two_sum_error(a, b, s) > 0 ? next_up(s) : s;
}

double sub_down(double a, double b)
{
    return add_down(a, -b);
}

double sub_up(double a, double b)
{
    return add_up(a, -b);
}

double mul_down(double a, double b)
{
    if (a == 0.0 || b == 0.0) {
        return 0.0;
    }
    double p = a * b;
    if (!std::isfinite(p)) {
        return (std::isfinite(a) && std::isfinite(b) && p > 0) ? std::numeric_limits<double>::max() : p;
    }
    if (std::abs(p) < tiny_product) {
        return next_down(p);
    }
    return std::fma(a, b, -p) < 0 ? next_down(p) : p;
}

double mul_up(double a, double b)
{
    if (a == 0.0 || b == 0.0) {
        return 0.0;
    }
    double p = a * b;
    if (!std::isfinite(p)) {
        return (std::isfinite(a) && std::isfinite(b) && p < 0) ? std::numeric_limits<double>::lowest() : p;
    }
    if (std::abs(p) < tiny_product) {
        return next_up(p);
    }
    return std::fma(a, b, -p) > 0 ? next_up(p) : p;
}

double Interval::magnitude() const
{
    return std::max(std::abs(lo), std::abs(hi));
}

Interval operator+(const Interval& a, const Interval& b)
{
    return {add_down(a.lo, b.lo), add_up(a.hi, b.hi)};
}

Interval operator*(const Interval& a, const Interval& b)
{
    double lo = std::min({mul_down(a.lo, b.lo), mul_down(a.lo, b.hi), mul_down(a.hi, b.lo),
                          mul_down(a.hi, b.hi)});
    double hi = std::max(
        {mul_up(a.lo, b.lo), mul_up(a.lo, b.hi), mul_up(a.hi, b.lo), mul_up(a.hi, b.hi)});
    return {lo, hi};
}

namespace
{

// Bounds on x^k for x >= 0.
double pow_nonneg_down(double x, unsigned k)
{
    double p = 1.0;
    for (unsigned i = 0; i < k; ++i) {
        p = mul_down(p, x);
    }
    return p;
}

double pow_nonneg_up(double x, unsigned k)
{
    double p = 1.0;
    for (unsigned i = 0; i < k; ++i) {
        p = mul_up(p, x);
    }
    return p;
}

// Bounds on the real number x^k for any sign of x.
double pow_down(double x, unsigned k)
{
    if (x >= 0 || k % 2 == 0) {
        return pow_nonneg_down(std::abs(x), k);
    }
    return -pow_nonneg_up(-x, k);
}

double pow_up(double x, unsigned k)
{
    if (x >= 0 || k % 2 == 0) {
        return pow_nonneg_up(std::abs(x), k);
    }
    return -pow_nonneg_down(-x, k);
}

} // namespace

Interval pow(const Interval& x, unsigned k)
{
    if (k == 0) {
        return {1.0, 1.0};
    }
    if (k == 1) {
        return x;
    }
    if (k % 2 == 1 || x.lo >= 0) {
        return {pow_down(x.lo, k), pow_up(x.hi, k)};
    }
    if (x.hi <= 0) {
        return {pow_down(x.hi, k), pow_up(x.lo, k)};
    }
    return {0.0, std::max(pow_up(x.lo, k), pow_up(x.hi, k))};
}

std::ostream& operator<<(std::ostream& os, const Interval& x)
{
    return os << '[' << x.lo << ", " << x.hi << ']';
}

} // namespace carleman
