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

#include <random>

#include "polycert/semiring.hpp"
#include "polycert/spectrum.hpp"

namespace polycert::testing {

// Deterministic generators for the property suites. Coefficient magnitudes
// stay <= 4 so the universality cap k_max(D) = D + 1 + ceil(log2(max coeff))
// from the semiring property suite is honest.
class Fuzzer {
   public:
    explicit Fuzzer(std::uint64_t seed) : engine_(seed) {}

    std::mt19937_64& engine() { return engine_; }

    int uniform(int lo, int hi) {  // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(engine_);
    }

    bool chance(double p) { return std::bernoulli_distribution(p)(engine_); }

    Rational coefficient(CoeffDomain domain, bool allow_zero = true) {
        if (domain == CoeffDomain::naturals) return Rational(uniform(allow_zero ? 0 : 1, 4));
        int den = uniform(1, 3);
        int num = uniform(allow_zero ? 0 : 1, 4 * den);
        return Rational(num) / Rational(den);
    }

    Exponents exponents(int dim, int max_deg, bool laurent) {
        Exponents e(dim, 0);
        int budget = max_deg;
        for (int i = 0; i < dim && budget > 0; ++i) {
            int mag = uniform(0, budget);
            budget -= mag;
            e[i] = laurent && chance(0.5) ? -mag : mag;
        }
        return e;
    }

    /// Nonzero member of the instance. Under the positive-constant
    /// restriction the constant coefficient is at least 1, which also makes
    /// the power-universality lower bound u^k x >= 1 attainable.
    Polynomial member(const SemiringInstance& inst, int max_deg = 3, int max_terms = 4) {
        Polynomial p(inst.dimension);
        if (inst.positive_constant_restriction || chance(0.7)) {
            Rational c = inst.domain == CoeffDomain::naturals
                             ? Rational(uniform(1, 4))
                             : Rational(1) + coefficient(inst.domain);
            if (c > 4) c = 4;
            p += Polynomial::constant(inst.dimension, c);
        }
        int terms = uniform(0, max_terms);
        for (int t = 0; t < terms; ++t) {
            Rational c = coefficient(inst.domain);
            // In Laurent instances the universality lower bound u^k x >= 1
            // feeds on x's own coefficients, so keep them >= 1 there.
            if (inst.laurent && c != 0 && c < 1) c += 1;
            p += Polynomial::monomial(exponents(inst.dimension, max_deg, inst.laurent), c);
        }
        if (p.is_zero()) p = Polynomial::one(inst.dimension);
        return p;
    }

    /// Signed polynomial (not necessarily a member).
    Polynomial signed_poly(int dim, int max_deg = 3, int max_terms = 5, bool laurent = false) {
        Polynomial p(dim);
        int terms = uniform(1, max_terms);
        for (int t = 0; t < terms; ++t) {
            Rational c = coefficient(CoeffDomain::nonneg_rationals, false);
            if (chance(0.5)) c = -c;
            p += Polynomial::monomial(exponents(dim, max_deg, laurent), c);
        }
        return p;
    }

    SemiringInstance instance(int max_dim = 3) {
        int d = uniform(1, max_dim);
        CoeffDomain domain = chance(0.5) ? CoeffDomain::naturals : CoeffDomain::nonneg_rationals;
        bool laurent = chance(0.3);
        bool prime = !laurent && chance(0.6);
        return SemiringInstance(d, domain, laurent, prime);
    }

    EvaluationPoint point(const SemiringInstance& inst, int max_num = 8, int max_den = 4) {
        EvaluationPoint p(inst.dimension);
        for (auto& coord : p) {
            int den = uniform(1, max_den);
            int num = uniform(inst.laurent ? 1 : 0, max_num);
            coord = Rational(num) / Rational(den);
        }
        return p;
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace polycert::testing
