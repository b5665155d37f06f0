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
#include "carleman/errors.hpp"

#include <cerrno>
#include <cstdlib>
#include <limits>

namespace carleman
{

const char* to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::invalid_argument:
        return "invalid-argument";
    case ErrorKind::assumptions_violated:
        return "assumptions-violated";
    case ErrorKind::budget_exceeded:
        return "budget-exceeded";
    case ErrorKind::divergence:
        return "numerical-divergence";
    case ErrorKind::numerical:
        return "numerical-failure";
    case ErrorKind::config:
        return "config-error";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message)
    , m_kind(kind)
{
}

void fail(ErrorKind kind, const std::string& message)
{
    throw Error(kind, message);
}

std::size_t component_budget()
{
    const char* raw = std::getenv(component_budget_env);
    if (raw == nullptr || *raw == '\0') {
        return default_component_budget;
    }
    char* end   = nullptr;
    errno       = 0;
    auto parsed = std::strtoull(raw, &end, 10);
    if (errno != 0 || end == raw || *end != '\0' || parsed == 0) {
        return default_component_budget;
    }
    return static_cast<std::size_t>(parsed);
}

std::size_t checked_pow(std::size_t n, int i, std::size_t budget)
{
    if (i < 0) {
        fail(ErrorKind::invalid_argument, "negative exponent in checked_pow");
    }
    std::size_t result = 1;
    for (int k = 0; k < i; ++k) {
        if (n != 0 && result > std::numeric_limits<std::size_t>::max() / n) {
            fail(ErrorKind::budget_exceeded,
                 std::to_string(n) + "^" + std::to_string(i) + " overflows the index type");
        }
        result *= n;
        if (result > budget) {
            fail(ErrorKind::budget_exceeded, std::to_string(n) + "^" + std::to_string(i) +
                                                 " components exceed the budget of " +
                                                 std::to_string(budget));
        }
    }
    return result;
}

} // namespace carleman
