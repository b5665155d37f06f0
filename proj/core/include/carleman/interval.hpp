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
#ifndef CARLEMAN_INTERVAL_HPP
#define CARLEMAN_INTERVAL_HPP

#include <iosfwd>

namespace carleman
{

// Directed rounding. Each result is the nearest double on the requested side
// of the exact value (error-free transforms decide whether a nudge is needed).
double add_down(double a, double b);
double add_up(double a, double b);
double sub_down(double a, double b);
double sub_up(double a, double b);
double mul_down(double a, double b);
double mul_up(double a, double b);

/// Closed real interval [lo, hi] with outward-rounded arithmetic.
struct Interval
{
    double lo = 0.0;
    double hi = 0.0;

    static Interval point(double x)
    {
        return {x, x};
    }

    bool contains(double x) const
    {
        return lo <= x && x <= hi;
    }
    bool subset_of(const Interval& other) const
    {
        return other.lo <= lo && hi <= other.hi;
    }
    double width() const
    {
        return hi - lo;
    }
    double magnitude() const;

    friend bool operator==(const Interval&, const Interval&) = default;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);

/**
 * Integer power with the monotone/even case split: for even k and an interval
 * straddling zero the result is [0, max(lo^k, hi^k)], never a negative lower
 * bound. pow(x, 0) = [1, 1].
 */
Interval pow(const Interval& x, unsigned k);

std::ostream& operator<<(std::ostream& os, const Interval& x);

} // namespace carleman

#endif // CARLEMAN_INTERVAL_HPP
