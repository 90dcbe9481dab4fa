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

#include <string>

#include "polycert/polynomial.hpp"

namespace polycert {

enum class CoeffDomain { naturals, nonneg_rationals };

std::string to_string(CoeffDomain d);
CoeffDomain coeff_domain_from_string(const std::string& s);

/// Descriptor of a concrete preordered polynomial semiring under the
/// coefficientwise order: d variables, coefficients in N or Q+, optionally
/// Laurent, optionally restricted to strictly positive constant coefficient
/// (together with zero). The restriction and the Laurent flag exclude each
/// other: Laurent semirings need no constant-coefficient restriction.
struct SemiringInstance {
    int dimension = 1;
    CoeffDomain domain = CoeffDomain::nonneg_rationals;
    bool laurent = false;
    bool positive_constant_restriction = false;

    SemiringInstance() = default;
    SemiringInstance(int dimension, CoeffDomain domain, bool laurent,
                     bool positive_constant_restriction);

    bool operator==(const SemiringInstance&) const = default;
};

/// The canonical polynomially universal element:
///   1 + sum_i X_i                 (non-Laurent)
///   1 + sum_i (X_i + X_i^-1)      (Laurent)
Polynomial universal_element(const SemiringInstance& inst);

/// Membership: coefficients lie in the declared domain, exponents respect the
/// Laurent flag, and under the constant restriction the polynomial is zero or
/// has strictly positive constant coefficient.
bool is_member(const SemiringInstance& inst, const Polynomial& p);

/// The instance preorder a <= b, i.e. b - a has nonnegative coefficients.
/// Both arguments must be members.
bool leq(const SemiringInstance& inst, const Polynomial& a, const Polynomial& b);

}  // namespace polycert
