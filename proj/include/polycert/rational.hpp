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

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace polycert {

/// Exact rational scalar. All order decisions in the library are made on
/// this type; floating point only appears in the spectrum heuristics.
using Rational = mpq_class;

/// Parses "a", "-a" or "a/b" (decimal integers). Throws std::invalid_argument
/// on anything else, including b = 0.
Rational rational_from_string(const std::string& text);

/// Canonical "a" / "a/b" rendering (reduced, denominator omitted when 1).
std::string rational_to_string(const Rational& q);

/// Exact q^n for n >= 0.
Rational rational_pow(const Rational& q, unsigned long n);

/// Smallest integer >= q, as a Rational with denominator 1.
Rational rational_ceil(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace polycert
