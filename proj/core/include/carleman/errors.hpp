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
#ifndef CARLEMAN_ERRORS_HPP
#define CARLEMAN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace carleman
{

/// Failure categories. The CLI maps each one to a distinct exit status.
enum class ErrorKind
{
    invalid_argument,
    assumptions_violated,
    budget_exceeded,
    divergence,
    numerical,
    config,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept
    {
        return m_kind;
    }

private:
    ErrorKind m_kind;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

/// Default cap on the number of components of any Kronecker power or lifted vector.
inline constexpr std::size_t default_component_budget = 10'000'000;

/// Name of the environment variable that overrides the component budget.
inline constexpr const char* component_budget_env = "CARLEMAN_COMPONENT_BUDGET";

/**
 * Component budget in effect: the value of CARLEMAN_COMPONENT_BUDGET when it
 * parses as a positive integer, otherwise default_component_budget.
 */
std::size_t component_budget();

/// n^i with overflow checking; throws budget_exceeded if the result exceeds budget.
std::size_t checked_pow(std::size_t n, int i, std::size_t budget);

} // namespace carleman

#endif // CARLEMAN_ERRORS_HPP
