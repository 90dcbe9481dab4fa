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

#include "polycert/semiring.hpp"

#include <stdexcept>

namespace polycert {

std::string to_string(CoeffDomain d) { return d == CoeffDomain::naturals ? "N" : "Q+"; }

CoeffDomain coeff_domain_from_string(const std::string& s) {
    if (s == "N") return CoeffDomain::naturals;
    if (s == "Q+") return CoeffDomain::nonneg_rationals;
    throw std::invalid_argument("unknown coefficient domain: '" + s + "'");
}

SemiringInstance::SemiringInstance(int dimension, CoeffDomain domain, bool laurent,
                                   bool positive_constant_restriction)
    : dimension(dimension),
      domain(domain),
      laurent(laurent),
      positive_constant_restriction(positive_constant_restriction) {
    if (dimension < 1) throw std::invalid_argument("semiring dimension must be positive");
    if (laurent && positive_constant_restriction)
        throw std::invalid_argument(
            "the positive-constant restriction does not apply to Laurent semirings");
}

Polynomial universal_element(const SemiringInstance& inst) {
    Polynomial u = Polynomial::one(inst.dimension);
    for (int i = 0; i < inst.dimension; ++i) {
        u += Polynomial::variable(inst.dimension, i, 1);
        if (inst.laurent) u += Polynomial::variable(inst.dimension, i, -1);
    }
    return u;
}

bool is_member(const SemiringInstance& inst, const Polynomial& p) {
    if (p.dimension() != inst.dimension) return false;
    if (!inst.laurent && p.has_negative_exponent()) return false;
    if (!p.all_coefficients_nonnegative()) return false;
    if (inst.domain == CoeffDomain::naturals && !p.all_coefficients_integral()) return false;
    if (inst.positive_constant_restriction && !p.is_zero() && p.constant_term() <= 0) return false;
    return true;
}

bool leq(const SemiringInstance& inst, const Polynomial& a, const Polynomial& b) {
    if (!is_member(inst, a) || !is_member(inst, b))
        throw std::invalid_argument("leq arguments must be members of the semiring instance");
    return coeffwise_geq(b, a);
}

}  // namespace polycert
