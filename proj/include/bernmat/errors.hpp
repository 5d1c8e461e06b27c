// Copyright 2026 The bernmat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BERNMAT_ERRORS_HPP
#define BERNMAT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bernmat {

/// Invalid argument for an exact operation: division by zero, shape
/// mismatch, parameter outside the operation's domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Index outside the range a value can answer for (e.g. a series
/// coefficient past its truncation order).
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Raised by every inversion routine when the matrix has no inverse.
class SingularMatrixError : public DomainError {
public:
    SingularMatrixError(const std::string &what, std::size_t column)
        : DomainError(what + " (pivot column " + std::to_string(column) + ")"), column_(column)
    {
    }

    /// Column at which elimination found no usable pivot.
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

/// Malformed textual input (rational literals, JSON payloads, CLI values).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace bernmat

#endif
