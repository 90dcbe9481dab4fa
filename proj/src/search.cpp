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

#include "polycert/search.hpp"

#include <sstream>
#include <stdexcept>

#include "polycert/parse.hpp"

namespace polycert {

namespace {

std::string describe_monomial(const Exponents& e, const Rational& value) {
    std::ostringstream os;
    os << format_polynomial(Polynomial::monomial(e, 1)) << " -> " << rational_to_string(value);
    return os.str();
}

// First negative coefficient in grlex order, if any.
std::optional<std::pair<Exponents, Rational>> first_negative(const Polynomial& p) {
    for (const auto& [e, c] : p.terms())
        if (c < 0) return std::make_pair(e, c);
    return std::nullopt;
}

// a*A >= b*B coefficientwise, for nonnegative scalars a, b.
bool scaled_geq(const Rational& a, const Polynomial& A, const Rational& b, const Polynomial& B) {
    auto ia = A.terms().begin(), ea = A.terms().end();
    auto ib = B.terms().begin(), eb = B.terms().end();
    GrlexLess less;
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && less(ia->first, ib->first))) {
            if (a * ia->second < 0) return false;
            ++ia;
        } else if (ia == ea || less(ib->first, ia->first)) {
            if (b * ib->second > 0) return false;
            ++ib;
        } else {
            if (a * ia->second < b * ib->second) return false;
            ++ia;
            ++ib;
        }
    }
    return true;
}

int accumulated(const Exponents& current, int upto) {
    int total = 0;
    for (int i = 0; i < upto; ++i) total += current[i];
    return total;
}

void enumerate_monomials(int dim, int max_degree, int index, Exponents& current,
                         std::vector<Exponents>& out) {
    if (index == dim) {
        out.push_back(current);
        return;
    }
    for (int e = 0; e + accumulated(current, index) <= max_degree; ++e) {
        current[index] = e;
        enumerate_monomials(dim, max_degree, index + 1, current, out);
    }
    current[index] = 0;
}

}  // namespace

PolyaResult polya_search(const PolyaQuery& query) {
    if (query.q.is_zero()) throw std::invalid_argument("polya_search requires a nonzero q");
    if (query.q.has_negative_exponent())
        throw std::invalid_argument("polya_search requires a non-Laurent q");
    if (query.delta < 0) throw std::invalid_argument("polya gap must be nonnegative");
    if (query.k_max < 0) throw std::invalid_argument("k_max must be nonnegative");

    PolyaResult result;
    result.report.caps["k_max"] = std::to_string(query.k_max);
    result.report.caps["delta"] = rational_to_string(query.delta);

    const int d = query.q.dimension();
    SemiringInstance ambient(std::max(d, 1), CoeffDomain::nonneg_rationals, false, false);
    const Polynomial u = universal_element(ambient).extended(std::max(d, 1));
    Polynomial base = query.q.extended(std::max(d, 1));
    if (query.delta > 0)
        base += query.delta * u.pow(static_cast<unsigned>(*query.q.degree()));

    Polynomial current = base;
    for (int k = 0; k <= query.k_max; ++k) {
        ++result.report.iterations;
        auto bad = first_negative(current);
        if (!bad) {
            result.k = k;
            result.report.failure.clear();
            return result;
        }
        result.report.failure = describe_monomial(bad->first, bad->second);
        current *= u;
    }
    return result;
}

ClosureSearchResult closure_from_polya(const SemiringInstance& inst, const Polynomial& x,
                                       const Polynomial& y, const BoundContext& ctx, int k_max) {
    ctx.validate();
    if (inst.laurent) throw std::invalid_argument("the Polya path requires a non-Laurent instance");
    if (x.is_zero() || y.is_zero() || !is_member(inst, x) || !is_member(inst, y))
        throw std::invalid_argument("x and y must be nonzero members of the instance");

    ClosureSearchResult result;
    result.report.caps["k_max"] = std::to_string(k_max);

    Polynomial q = x - y;
    if (q.is_zero()) {
        result.certificate = ClosureCertificate{UnivariatePoly{}, Polynomial::one(inst.dimension), 1};
        return result;
    }

    const int deg_q = *q.degree();
    const Rational delta = ctx.eps / std::max(Rational(1), rational_pow(ctx.r, deg_q));
    result.report.caps["delta"] = rational_to_string(delta);

    PolyaResult polya = polya_search({q, delta, k_max});
    result.report.iterations = polya.report.iterations;
    result.report.failure = polya.report.failure;
    if (!polya.k) return result;

    // Clear denominators so p lands in N[X] when the instance demands it.
    mpz_class m = 1;
    if (inst.domain == CoeffDomain::naturals) m = delta.get_den();
    ClosureCertificate cert{UnivariatePoly::monomial(Rational(m) * delta, deg_q),
                            universal_element(inst).pow(static_cast<unsigned>(*polya.k)), m};
    if (!verify_closure(inst, x, y, cert, ctx).accepted())
        throw std::logic_error("closure_from_polya produced a certificate its verifier rejects");
    result.certificate = std::move(cert);
    return result;
}

AsymptoticSearchResult asymptotic_search(const SemiringInstance& inst, const Polynomial& x,
                                         const Polynomial& y, const BoundContext& ctx,
                                         const AsymptoticCaps& caps) {
    ctx.validate();
    if (x.is_zero() || y.is_zero() || !is_member(inst, x) || !is_member(inst, y))
        throw std::invalid_argument("x and y must be nonzero members of the instance");
    if (caps.n_max < 1 || caps.j_max < 0 || caps.c_max < 0)
        throw std::invalid_argument("invalid asymptotic search caps");

    AsymptoticSearchResult result;
    result.report.caps["n_max"] = std::to_string(caps.n_max);
    result.report.caps["j_max"] = std::to_string(caps.j_max);
    result.report.caps["c_max"] = std::to_string(caps.c_max);

    const Polynomial u = universal_element(inst);
    Polynomial xn = Polynomial::one(inst.dimension);
    Polynomial yn = Polynomial::one(inst.dimension);
    for (int n = 1; n <= caps.n_max; ++n) {
        xn *= x;
        yn *= y;
        const Rational growth = rational_pow(1 + ctx.eps, static_cast<unsigned long>(n));
        Polynomial uj_xn = xn;
        for (int j = 0; j <= caps.j_max; ++j) {
            if (j > 0) uj_xn *= u;
            const Rational rj = rational_pow(ctx.r, static_cast<unsigned long>(j));
            for (long c = 0; c <= caps.c_max; ++c) {
                ++result.report.iterations;
                // Smallest m passing the scalar bound p(r) = c r^j <= (1+eps)^n m;
                // the coefficientwise side only gets harder as m grows.
                Rational m_rat = rational_ceil(Rational(c) * rj / growth);
                mpz_class m = m_rat.get_num();
                if (m < 1) m = 1;
                if (scaled_geq(Rational(c), uj_xn, Rational(m), yn)) {
                    AsymptoticCertificate cert{UnivariatePoly::monomial(Rational(c), j), n, m};
                    if (!verify_asymptotic(inst, x, y, cert, ctx).accepted())
                        throw std::logic_error(
                            "asymptotic_search produced a certificate its verifier rejects");
                    result.certificate = std::move(cert);
                    return result;
                }
            }
        }
    }
    result.report.failure = "caps exhausted";
    return result;
}

IdealSearchResult ideal_search(const Polynomial& f, const std::vector<Polynomial>& gens,
                               const BoundContext& ctx, const IdealCaps& caps) {
    ctx.validate();
    if (f.is_zero()) throw std::invalid_argument("ideal_search requires a nonzero f");
    if (f.has_negative_exponent()) throw std::invalid_argument("ideal_search is non-Laurent");
    if (gens.empty()) throw std::invalid_argument("ideal generator list is empty");
    const int d = f.dimension();
    for (const auto& g : gens)
        if (g.dimension() != d || g.has_negative_exponent())
            throw std::invalid_argument("ideal generators must match f's dimension");

    const int deg_f = *f.degree();
    const int deg_h = caps.deg_h >= 0 ? caps.deg_h : 2 * deg_f;
    const int deg_mult = caps.deg_mult >= 0 ? caps.deg_mult : 2 * deg_f;

    IdealSearchResult result;
    result.report.caps["deg_h"] = std::to_string(deg_h);
    result.report.caps["deg_mult"] = std::to_string(deg_mult);

    std::vector<Rational> schedule = caps.delta_schedule;
    if (schedule.empty()) {
        Rational d0 = ctx.eps / rational_pow(1 + ctx.r, static_cast<unsigned long>(deg_f));
        schedule = {d0, d0 / 2, d0 / 4};
    }

    SemiringInstance ambient(d, CoeffDomain::nonneg_rationals, false, false);
    const Polynomial u = universal_element(ambient);
    const Rational level_bound = rational_pow(1 + ctx.r * d, static_cast<unsigned long>(deg_f));

    std::vector<Exponents> h_monomials, mult_monomials;
    {
        Exponents scratch(d, 0);
        enumerate_monomials(d, deg_h, 0, scratch, h_monomials);
        scratch.assign(d, 0);
        enumerate_monomials(d, deg_mult, 0, scratch, mult_monomials);
    }

    int gen_deg_max = 0;
    for (const auto& g : gens) gen_deg_max = std::max(gen_deg_max, g.degree().value_or(0));

    for (const auto& delta : schedule) {
        if (delta <= 0 || delta * level_bound > ctx.eps) continue;
        ++result.report.iterations;

        const UnivariatePoly p = UnivariatePoly::monomial(delta, deg_f);
        const Polynomial shifted = f + p(u);

        FeasibilityProblem prob;
        std::vector<FeasibilityProblem::VarId> h_vars;
        h_vars.reserve(h_monomials.size());
        for (const auto& e : h_monomials)
            h_vars.push_back(prob.add_variable("h:" + format_polynomial(Polynomial::monomial(e, 1)),
                                               /*nonnegative=*/true));
        std::vector<std::vector<FeasibilityProblem::VarId>> mult_vars(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (const auto& e : mult_monomials)
                mult_vars[i].push_back(
                    prob.add_variable("g" + std::to_string(i) + ":" +
                                          format_polynomial(Polynomial::monomial(e, 1)),
                                      /*nonnegative=*/false));

        // Normalize away the scaling freedom in h.
        FeasibilityProblem::LinearExpr norm;
        for (auto v : h_vars) norm.emplace_back(v, Rational(1));
        prob.add_constraint(std::move(norm), FeasibilityProblem::Relation::eq, Rational(1));

        // One constraint per possible product monomial gamma:
        // [h * shifted + sum multipliers[i] * gens[i]]_gamma >= 0.
        const int total_deg = std::max(deg_h + std::max(deg_f, 0), deg_mult + gen_deg_max);
        std::vector<Exponents> gammas;
        Exponents scratch(d, 0);
        enumerate_monomials(d, total_deg, 0, scratch, gammas);
        for (const auto& gamma : gammas) {
            FeasibilityProblem::LinearExpr expr;
            Exponents residual(d);
            auto add_products = [&](const std::vector<Exponents>& monos,
                                    const std::vector<FeasibilityProblem::VarId>& vars,
                                    const Polynomial& poly) {
                for (std::size_t t = 0; t < monos.size(); ++t) {
                    bool ok = true;
                    for (int i = 0; i < d; ++i) {
                        residual[i] = gamma[i] - monos[t][i];
                        if (residual[i] < 0) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) continue;
                    Rational coeff = poly.coefficient(residual);
                    if (coeff != 0) expr.emplace_back(vars[t], coeff);
                }
            };
            add_products(h_monomials, h_vars, shifted);
            for (std::size_t i = 0; i < gens.size(); ++i)
                add_products(mult_monomials, mult_vars[i], gens[i]);
            if (expr.empty()) continue;
            prob.add_constraint(std::move(expr), FeasibilityProblem::Relation::geq, Rational(0));
        }

        FeasibilityResult lp = solve_feasibility(prob);
        if (!lp.feasible) {
            result.report.failure = "infeasible at delta = " + rational_to_string(delta);
            continue;
        }

        Polynomial h(d);
        for (std::size_t t = 0; t < h_monomials.size(); ++t)
            h += Polynomial::monomial(h_monomials[t], lp.assignment[h_vars[t]]);
        std::vector<Polynomial> multipliers;
        multipliers.reserve(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i) {
            Polynomial mult(d);
            for (std::size_t t = 0; t < mult_monomials.size(); ++t)
                mult += Polynomial::monomial(mult_monomials[t], lp.assignment[mult_vars[i][t]]);
            multipliers.push_back(std::move(mult));
        }
        IdealCertificate cert{std::move(h), p, std::move(multipliers), gens};
        if (!verify_ideal(f, cert, ctx).accepted())
            throw std::logic_error("ideal_search produced a certificate its verifier rejects");
        result.certificate = std::move(cert);
        return result;
    }
    if (result.report.failure.empty()) result.report.failure = "no admissible delta in schedule";
    return result;
}

}  // namespace polycert
