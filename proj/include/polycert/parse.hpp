/*
 *   Copyright 2026 The polycert authors
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

#pragma once

#include <stdexcept>
#include <string>

#include "polycert/polynomial.hpp"

namespace polycert {

/// Parse failure with the 0-based offset of the offending character.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const { return position_; }

   private:
    std::size_t position_;
};

/// Core text grammar:
///   poly   := term (('+'|'-') term)*
///   term   := coeff | coeff '*' factors | factors
///   factor := 'X'<i> | 'X'<i>'^'<int>        (i >= 1; negative exponents ok)
///   coeff  := decimal integer | 'a/b' fraction
/// Example: "2 + 3*X1*X2^2 - 1/2*X1^-1".
///
/// min_dimension lets callers embed the result into a larger variable set;
/// the dimension of the result is max(min_dimension, largest index seen).
Polynomial parse_polynomial(const std::string& text, int min_dimension = 0);

/// CLI grammar: the core grammar plus parenthesized subexpressions with
/// integer powers, e.g. "(1+X1)^2 * (2 - X2)".
Polynomial parse_polynomial_expr(const std::string& text, int min_dimension = 0);

/// Canonical rendering in the core grammar, graded-lex term order.
/// format/parse round-trips bit-exactly.
std::string format_polynomial(const Polynomial& p);

}  // namespace polycert
