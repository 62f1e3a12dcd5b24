/*
   Copyright 2026 The idealab Authors

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

#ifndef IDEALAB_ERROR_HPP
#define IDEALAB_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace idealab {

enum class ErrorKind {
    DomainMismatch,
    DivisionByZero,
    NoInverse,
    InvalidDomain,
    OutOfRange,
    InvalidIdeal,
    NotAChain,
    RingMismatch,
    NotUnivariate,
    ZeroPolynomial,
    SyntaxError,
    UnknownVariable,
    BadCoefficient,
    UnsupportedDomain,
    InseparableCase,
    NotEnoughVariables,
    ZeroIdeal,
    TooLarge,
    DegenerateWindow,
    NotBivariate,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `position` is set for parse errors
/// and is a 0-based offset into the input text.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& message, std::optional<std::size_t> position = std::nullopt)
        : std::runtime_error(message), kind_(kind), position_(position) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<std::size_t> position() const noexcept { return position_; }

   private:
    ErrorKind kind_;
    std::optional<std::size_t> position_;
};

}  // namespace idealab

#endif
