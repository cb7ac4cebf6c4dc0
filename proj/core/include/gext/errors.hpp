// Copyright 2026 The gext authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GEXT_ERRORS_HPP
#define GEXT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gext {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// The zero polynomial has no multiplicity / weighted multiplicity.
struct ZeroPolynomialError : Error {
    ZeroPolynomialError() : Error("zero-polynomial") {}
};

// Exact division failed; `witness` names a monomial not divisible by the divisor.
struct NotDivisibleError : Error {
    std::string witness;
    explicit NotDivisibleError(std::string w)
        : Error("not-divisible: witness monomial " + w), witness(std::move(w)) {}
};

// A verdict cannot be reached at the current truncation order.
struct TruncationError : Error {
    int required_order;
    explicit TruncationError(int required)
        : Error("undecided-at-truncation: requires order >= " + std::to_string(required)),
          required_order(required) {}
};

// An exact coordinate change would need an irrational algebraic number.
struct NeedsAlgebraicExtension : Error {
    explicit NeedsAlgebraicExtension(const std::string& what)
        : Error("needs-algebraic-extension: " + what) {}
};

// Equation not graded-homogeneous under a listed group action.
struct InvarianceError : Error {
    std::string offending_monomial;
    explicit InvarianceError(std::string mono)
        : Error("action-invariance failure at monomial " + mono),
          offending_monomial(std::move(mono)) {}
};

struct ParseError : Error {
    int line, column;
    ParseError(const std::string& msg, int ln, int col)
        : Error("parse error at " + std::to_string(ln) + ":" + std::to_string(col) + ": " + msg),
          line(ln), column(col) {}
};

}  // namespace gext

#endif
