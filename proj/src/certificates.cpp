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

#include "polycert/certificates.hpp"

#include <stdexcept>

namespace polycert {

UnivariatePoly::UnivariatePoly(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UnivariatePoly UnivariatePoly::constant(const Rational& c) {
    return UnivariatePoly(std::vector<Rational>{c});
}

UnivariatePoly UnivariatePoly::monomial(const Rational& c, int degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    std::vector<Rational> cs(degree + 1, Rational(0));
    cs.back() = c;
    return UnivariatePoly(std::move(cs));
}

bool UnivariatePoly::all_nonnegative() const {
    for (const auto& c : coeffs_)
        if (c < 0) return false;
    return true;
}

bool UnivariatePoly::all_integral() const {
    for (const auto& c : coeffs_)
        if (!is_integer(c)) return false;
    return true;
}

Rational UnivariatePoly::operator()(const Rational& r) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + *it;
    return acc;
}

Polynomial UnivariatePoly::operator()(const Polynomial& u) const {
    Polynomial acc(u.dimension());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * u + Polynomial::constant(u.dimension(), *it);
    return acc;
}

void BoundContext::validate() const {
    if (r < 0) throw std::invalid_argument("context r must be nonnegative");
    if (eps <= 0) throw std::invalid_argument("context eps must be positive");
}

std::string form_name(const Certificate& c) {
    struct Namer {
        std::string operator()(const ClosureCertificate&) const { return "closure"; }
        std::string operator()(const CatalyticCertificate&) const { return "catalytic"; }
        std::string operator()(const AsymptoticCertificate&) const { return "asymptotic"; }
        std::string operator()(const StrassenCertificate&) const { return "strassen"; }
        std::string operator()(const IdealCertificate&) const { return "ideal"; }
        std::string operator()(const RateWitnessCertificate&) const { return "rate_witness"; }
    };
    return std::visit(Namer{}, c);
}

namespace {

// Common well-formedness for the order-certificate family.
VerifyOutcome check_pair(const SemiringInstance& inst, const Polynomial& x, const Polynomial& y) {
    if (x.is_zero() || y.is_zero()) return VerifyOutcome::bad("x and y must be nonzero");
    if (!is_member(inst, x)) return VerifyOutcome::bad("x is not a member of the instance");
    if (!is_member(inst, y)) return VerifyOutcome::bad("y is not a member of the instance");
    return VerifyOutcome::accept();
}

VerifyOutcome check_bound_poly(const SemiringInstance& inst, const UnivariatePoly& p) {
    if (!p.all_nonnegative()) return VerifyOutcome::bad("p has a negative coefficient");
    if (inst.domain == CoeffDomain::naturals && !p.all_integral())
        return VerifyOutcome::bad("p must have natural coefficients in an N instance");
    return VerifyOutcome::accept();
}

VerifyOutcome check_catalyst(const SemiringInstance& inst, const Polynomial& z) {
    if (z.is_zero()) return VerifyOutcome::bad("catalyst z is zero");
    if (!is_member(inst, z)) return VerifyOutcome::bad("catalyst z is not a member");
    return VerifyOutcome::accept();
}

Rational mpz_to_rational(const mpz_class& v) { return Rational(v); }

}  // namespace

VerifyOutcome verify_closure(const SemiringInstance& inst, const Polynomial& x,
                             const Polynomial& y, const ClosureCertificate& c,
                             const BoundContext& ctx) {
    ctx.validate();
    if (auto o = check_pair(inst, x, y); !o.accepted()) return o;
    if (auto o = check_bound_poly(inst, c.p); !o.accepted()) return o;
    if (auto o = check_catalyst(inst, c.z); !o.accepted()) return o;
    if (c.m <= 0) return VerifyOutcome::bad("m must be positive");

    if (c.p(ctx.r) > ctx.eps * mpz_to_rational(c.m))
        return VerifyOutcome::reject("scalar bound p(r) <= eps*m fails");
    const Polynomial u = universal_element(inst);
    const Rational m(c.m);
    Polynomial lhs = m * (c.z * x) + c.p(u) * c.z;
    Polynomial rhs = m * (c.z * y);
    if (!coeffwise_geq(lhs, rhs))
        return VerifyOutcome::reject("m z x + p(u) z >= m z y fails coefficientwise");
    return VerifyOutcome::accept();
}

VerifyOutcome verify_catalytic(const SemiringInstance& inst, const Polynomial& x,
                               const Polynomial& y, const CatalyticCertificate& c,
                               const BoundContext& ctx) {
    ctx.validate();
    if (auto o = check_pair(inst, x, y); !o.accepted()) return o;
    if (auto o = check_bound_poly(inst, c.p); !o.accepted()) return o;
    if (auto o = check_catalyst(inst, c.z); !o.accepted()) return o;
    if (c.m <= 0) return VerifyOutcome::bad("m must be positive");

    if (c.p(ctx.r) > (1 + ctx.eps) * mpz_to_rational(c.m))
        return VerifyOutcome::reject("scalar bound p(r) <= (1+eps)*m fails");
    const Polynomial u = universal_element(inst);
    const Rational m(c.m);
    if (!coeffwise_geq(c.p(u) * c.z * x, m * (c.z * y)))
        return VerifyOutcome::reject("p(u) z x >= m z y fails coefficientwise");
    return VerifyOutcome::accept();
}

VerifyOutcome verify_asymptotic(const SemiringInstance& inst, const Polynomial& x,
                                const Polynomial& y, const AsymptoticCertificate& c,
                                const BoundContext& ctx) {
    ctx.validate();
    if (auto o = check_pair(inst, x, y); !o.accepted()) return o;
    if (auto o = check_bound_poly(inst, c.p); !o.accepted()) return o;
    if (c.n < 1) return VerifyOutcome::bad("n must be positive");
    if (c.m <= 0) return VerifyOutcome::bad("m must be positive");

    Rational budget = rational_pow(1 + ctx.eps, static_cast<unsigned long>(c.n)) *
                      mpz_to_rational(c.m);
    if (c.p(ctx.r) > budget) return VerifyOutcome::reject("scalar bound p(r) <= (1+eps)^n m fails");
    const Polynomial u = universal_element(inst);
    const Rational m(c.m);
    const unsigned n = static_cast<unsigned>(c.n);
    if (!coeffwise_geq(c.p(u) * x.pow(n), m * y.pow(n)))
        return VerifyOutcome::reject("p(u) x^n >= m y^n fails coefficientwise");
    return VerifyOutcome::accept();
}

VerifyOutcome verify_strassen(const SemiringInstance& inst, const Polynomial& x,
                              const Polynomial& y, const StrassenCertificate& c,
                              const Rational& eps) {
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    if (auto o = check_pair(inst, x, y); !o.accepted()) return o;
    if (c.k < 0) return VerifyOutcome::bad("k must be nonnegative");
    if (c.n < 1) return VerifyOutcome::bad("n must be positive");

    if (Rational(c.k) > eps * Rational(c.n))
        return VerifyOutcome::reject("scalar bound k <= eps*n fails");
    Rational two_k = rational_pow(Rational(2), static_cast<unsigned long>(c.k));
    const unsigned n = static_cast<unsigned>(c.n);
    if (!coeffwise_geq(two_k * x.pow(n), y.pow(n)))
        return VerifyOutcome::reject("2^k x^n >= y^n fails coefficientwise");
    return VerifyOutcome::accept();
}

VerifyOutcome verify_ideal(const Polynomial& f, const IdealCertificate& c,
                           const BoundContext& ctx) {
    ctx.validate();
    const int d = f.dimension();
    if (d < 1) return VerifyOutcome::bad("f must have at least one variable");
    if (f.has_negative_exponent()) return VerifyOutcome::bad("ideal certificates are non-Laurent");
    if (c.h.is_zero()) return VerifyOutcome::bad("h is zero");
    if (c.h.dimension() != d) return VerifyOutcome::bad("h dimension mismatch");
    if (!c.h.all_coefficients_nonnegative() || c.h.has_negative_exponent())
        return VerifyOutcome::bad("h must have nonnegative coefficients");
    if (!c.p.all_nonnegative()) return VerifyOutcome::bad("p has a negative coefficient");
    if (c.ideal_gens.empty()) return VerifyOutcome::bad("ideal generator list is empty");
    if (c.multipliers.size() != c.ideal_gens.size())
        return VerifyOutcome::bad("one multiplier per ideal generator required");
    for (const auto& g : c.ideal_gens)
        if (g.dimension() != d || g.has_negative_exponent())
            return VerifyOutcome::bad("ideal generator dimension mismatch");
    for (const auto& m : c.multipliers)
        if (m.dimension() != d || m.has_negative_exponent())
            return VerifyOutcome::bad("multiplier dimension mismatch");

    if (c.p(ctx.r) > ctx.eps) return VerifyOutcome::reject("scalar bound p(r) <= eps fails");
    SemiringInstance ambient(d, CoeffDomain::nonneg_rationals, false, false);
    const Polynomial u = universal_element(ambient);
    Polynomial total = c.h * (f + c.p(u));
    for (std::size_t i = 0; i < c.ideal_gens.size(); ++i)
        total += c.multipliers[i] * c.ideal_gens[i];
    if (!total.all_coefficients_nonnegative())
        return VerifyOutcome::reject("h (f + p(u)) + g has a negative coefficient");
    return VerifyOutcome::accept();
}

VerifyOutcome verify_rate_witness(const SemiringInstance& inst, const Polynomial& x,
                                  const Polynomial& y, const Rational& lambda,
                                  const RateWitnessCertificate& c, const BoundContext& ctx) {
    ctx.validate();
    if (lambda < 0) throw std::invalid_argument("lambda must be nonnegative");
    if (auto o = check_pair(inst, x, y); !o.accepted()) return o;
    const Polynomial one = Polynomial::one(inst.dimension);
    if (!coeffwise_geq(x, one) || !coeffwise_geq(y, one))
        return VerifyOutcome::bad("rate witnesses require x >= 1 and y >= 1");
    if (auto o = check_bound_poly(inst, c.p); !o.accepted()) return o;
    if (c.m < 1 || c.n < 1) return VerifyOutcome::bad("m and n must be positive");
    if (c.l <= 0) return VerifyOutcome::bad("l must be positive");

    if (Rational(c.m) / Rational(c.n) < lambda - ctx.eps)
        return VerifyOutcome::reject("rate bound m/n >= lambda - eps fails");
    Rational budget = rational_pow(1 + ctx.eps, static_cast<unsigned long>(c.n)) *
                      mpz_to_rational(c.l);
    if (c.p(ctx.r) > budget) return VerifyOutcome::reject("scalar bound p(r) <= (1+eps)^n l fails");
    const Polynomial u = universal_element(inst);
    const Rational l(c.l);
    if (!coeffwise_geq(c.p(u) * x.pow(static_cast<unsigned>(c.n)),
                       l * y.pow(static_cast<unsigned>(c.m))))
        return VerifyOutcome::reject("p(u) x^n >= l y^m fails coefficientwise");
    return VerifyOutcome::accept();
}

}  // namespace polycert
