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
#include <variant>
#include <vector>

#include "polycert/semiring.hpp"

namespace polycert {

/// The single-variable bound polynomial p that gets applied to the universal
/// element u. Coefficients c0..cD; a valid certificate has every coefficient
/// >= 0 (and integral when the instance coefficient domain is N). Violations
/// are reported by the verifiers as invalid certificates, so this type does
/// not enforce them.
class UnivariatePoly {
   public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<Rational> coefficients);

    static UnivariatePoly constant(const Rational& c);
    /// c * X^degree
    static UnivariatePoly monomial(const Rational& c, int degree);

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool all_nonnegative() const;
    bool all_integral() const;

    Rational operator()(const Rational& r) const;
    /// p(u), evaluated in polynomial arithmetic.
    Polynomial operator()(const Polynomial& u) const;

    bool operator==(const UnivariatePoly&) const = default;

   private:
    std::vector<Rational> coeffs_;  // canonical: no trailing zeros
};

/// The quantified context "for every r in R+ and eps > 0" that a single
/// certificate instantiates.
struct BoundContext {
    Rational r = 0;
    Rational eps = 1;

    void validate() const;
    bool operator==(const BoundContext&) const = default;
};

// Certificate payloads, one per equivalent order characterization.

/// Witnesses m z x + p(u) z >= m z y with p(r) <= eps m.
struct ClosureCertificate {
    UnivariatePoly p;
    Polynomial z;
    mpz_class m = 1;
};

/// Witnesses p(u) z x >= m z y with p(r) <= (1+eps) m.
struct CatalyticCertificate {
    UnivariatePoly p;
    Polynomial z;
    mpz_class m = 1;
};

/// Witnesses p(u) x^n >= m y^n with p(r) <= (1+eps)^n m.
struct AsymptoticCertificate {
    UnivariatePoly p;
    int n = 1;
    mpz_class m = 1;
};

/// Witnesses 2^k x^n >= y^n with k <= eps n.
struct StrassenCertificate {
    int k = 0;
    int n = 1;
};

/// Witnesses that h (f + p(u)) + sum_i multipliers[i] * ideal_gens[i] has
/// nonnegative coefficients with p(r) <= eps, certifying f >= 0 on the zero
/// locus of the ideal within the nonnegative orthant.
struct IdealCertificate {
    Polynomial h;
    UnivariatePoly p;
    std::vector<Polynomial> multipliers;
    std::vector<Polynomial> ideal_gens;
};

/// Witnesses p(u) x^n >= l y^m with m/n >= lambda - eps and
/// p(r) <= (1+eps)^n l.
struct RateWitnessCertificate {
    int m = 1;
    int n = 1;
    mpz_class l = 1;
    UnivariatePoly p;
};

using Certificate = std::variant<ClosureCertificate, CatalyticCertificate, AsymptoticCertificate,
                                 StrassenCertificate, IdealCertificate, RateWitnessCertificate>;

std::string form_name(const Certificate& c);

/// A verifier distinguishes a clean reject (the certified inequality or the
/// scalar bound fails) from an invalid certificate (structural violation:
/// z = 0, non-member payload, wrong arity, negative p coefficient, ...).
enum class VerifyStatus { accepted, rejected, invalid };

struct VerifyOutcome {
    VerifyStatus status = VerifyStatus::invalid;
    std::string detail;

    bool accepted() const { return status == VerifyStatus::accepted; }
    static VerifyOutcome accept() { return {VerifyStatus::accepted, ""}; }
    static VerifyOutcome reject(std::string why) { return {VerifyStatus::rejected, std::move(why)}; }
    static VerifyOutcome bad(std::string why) { return {VerifyStatus::invalid, std::move(why)}; }
};

VerifyOutcome verify_closure(const SemiringInstance& inst, const Polynomial& x,
                             const Polynomial& y, const ClosureCertificate& c,
                             const BoundContext& ctx);

VerifyOutcome verify_catalytic(const SemiringInstance& inst, const Polynomial& x,
                               const Polynomial& y, const CatalyticCertificate& c,
                               const BoundContext& ctx);

VerifyOutcome verify_asymptotic(const SemiringInstance& inst, const Polynomial& x,
                                const Polynomial& y, const AsymptoticCertificate& c,
                                const BoundContext& ctx);

VerifyOutcome verify_strassen(const SemiringInstance& inst, const Polynomial& x,
                              const Polynomial& y, const StrassenCertificate& c,
                              const Rational& eps);

/// f is signed; the ambient u is 1 + sum X_i in f's dimension.
VerifyOutcome verify_ideal(const Polynomial& f, const IdealCertificate& c,
                           const BoundContext& ctx);

/// Requires x >= 1 and y >= 1 coefficientwise.
VerifyOutcome verify_rate_witness(const SemiringInstance& inst, const Polynomial& x,
                                  const Polynomial& y, const Rational& lambda,
                                  const RateWitnessCertificate& c, const BoundContext& ctx);

}  // namespace polycert
