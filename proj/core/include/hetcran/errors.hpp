/*
   Copyright 2026 The hetcran Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace hetcran {

/// Invalid configuration value, unknown key, or malformed input.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the domain of a mathematical operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Quadrature or series failed to converge, or produced a non-finite value.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& integral, const std::string& detail)
        : std::runtime_error(integral + ": " + detail), integral_(integral) {}

    const std::string& integral() const noexcept { return integral_; }

private:
    std::string integral_;
};

}  // namespace hetcran
