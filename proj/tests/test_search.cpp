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

#include <doctest.h>

#include "fuzz.hpp"
#include "polycert/parse.hpp"
#include "polycert/search.hpp"

using namespace polycert;
using polycert::testing::Fuzzer;

namespace {

Polynomial P(const std::string& text, int dim = 1) { return parse_polynomial_expr(text, dim); }

const SemiringInstance kN1(1, CoeffDomain::naturals, false, true);
const SemiringInstance kQ2(2, CoeffDomain::nonneg_rationals, false, false);

// Independent recheck of the Polya condition at a given exponent.
bool polya_condition_holds(const Polynomial& q, const Rational& delta, int k) {
    SemiringInstance ambient(q.dimension(), CoeffDomain::nonneg_rationals, false, false);
    Polynomial u = universal_element(ambient);
    Polynomial target = q + delta * u.pow(static_cast<unsigned>(*q.degree()));
    return coeffwise_nonneg(u.pow(static_cast<unsigned>(k)) * target);
}

}  // namespace

TEST_CASE("polya search: minimal exponent for 1 - X + X^2") {
    PolyaResult r = polya_search({P("X1^2-X1+1"), Rational(0), 60});
    REQUIRE(r.k.has_value());
    CHECK(*r.k == 1);
    // exact expansion (1+X)(X^2-X+1) = 1+X^3
    CHECK(P("1+X1") * P("X1^2-X1+1") == P("1+X1^3"));
}

TEST_CASE("polya search: nonnegative coefficients need no power") {
    CHECK(*polya_search({P("1+2*X1+X2"), Rational(1) / 2, 60}).k == 0);
    CHECK(*polya_search({P("3"), Rational(0), 60}).k == 0);
}

TEST_CASE("polya search: (X1-X2)^2 fails at delta 0 but succeeds with a gap") {
    PolyaResult fail = polya_search({P("(X1-X2)^2"), Rational(0), 25});
    CHECK_FALSE(fail.k.has_value());
    CHECK(fail.report.iterations == 26);
    CHECK_FALSE(fail.report.failure.empty());

    PolyaResult ok = polya_search({P("(X1-X2)^2"), Rational(1) / 2, 60});
    REQUIRE(ok.k.has_value());
    // exhaustive increment from below confirms minimality
    for (int k = 0; k < *ok.k; ++k)
        CHECK_FALSE(polya_condition_holds(P("(X1-X2)^2"), Rational(1) / 2, k));
    CHECK(polya_condition_holds(P("(X1-X2)^2"), Rational(1) / 2, *ok.k));
}

TEST_CASE("polya search: exponent growth law for the square deficit") {
    // for (X1-X2)^2 the minimal exponent is exactly 1/delta - 1
    for (int j = 1; j <= 6; ++j) {
        Rational delta = Rational(1) / (1 << j);
        PolyaResult r = polya_search({P("(X1-X2)^2"), delta, 200});
        REQUIRE(r.k.has_value());
        CHECK(*r.k == (1 << j) - 1);
    }
}

TEST_CASE("polya search: input validation") {
    CHECK_THROWS_AS(polya_search({Polynomial(1), Rational(0), 10}), std::invalid_argument);
    CHECK_THROWS_AS(polya_search({P("X1^-1"), Rational(0), 10}), std::invalid_argument);
    CHECK_THROWS_AS(polya_search({P("X1"), Rational(-1), 10}), std::invalid_argument);
}

TEST_CASE("closure search: the running pair certifies with z = (1+X)^k") {
    BoundContext ctx{Rational(10), Rational(1) / 10};
    ClosureSearchResult r = closure_from_polya(kN1, P("2+X1+2*X1^2"), P("1+2*X1+X1^2"), ctx);
    REQUIRE(r.certificate.has_value());
    const auto& cert = *r.certificate;
    CHECK(coeffwise_geq(P("(1+X1)^3"), cert.z));  // z = u^k with k <= 3
    CHECK(verify_closure(kN1, P("2+X1+2*X1^2"), P("1+2*X1+X1^2"), cert, ctx).accepted());
    // scalar bound is exact: p(r) <= eps * m
    CHECK(cert.p(ctx.r) <= ctx.eps * Rational(cert.m));
    // in the N instance, m clears the denominators of delta
    CHECK(cert.p.all_integral());
}

TEST_CASE("closure search: x = y short-circuits to the trivial certificate") {
    BoundContext ctx{Rational(1), Rational(1)};
    Polynomial x = P("1+X1");
    ClosureSearchResult r = closure_from_polya(kN1, x, x, ctx);
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->p.is_zero());
    CHECK(r.certificate->z == Polynomial::one(1));
    CHECK(r.certificate->m == 1);
    CHECK(verify_closure(kN1, x, x, *r.certificate, ctx).accepted());
}

TEST_CASE("closure search: pointwise-false pairs exhaust the cap") {
    BoundContext ctx{Rational(1), Rational(1) / 4};
    ClosureSearchResult r = closure_from_polya(kN1, P("1+2*X1"), P("2+X1"), ctx, 15);
    CHECK_FALSE(r.certificate.has_value());
    CHECK_FALSE(r.report.failure.empty());
}

TEST_CASE("asymptotic search: fixed enumeration order") {
    BoundContext ctx{Rational(1), Rational(1)};
    Polynomial x = P("1+X1");
    AsymptoticSearchResult same = asymptotic_search(kN1, x, x, ctx);
    REQUIRE(same.certificate.has_value());
    CHECK(same.certificate->n == 1);
    CHECK(same.certificate->m == 1);
    CHECK(same.certificate->p.coefficients() == std::vector<Rational>{Rational(1)});

    AsymptoticSearchResult pair =
        asymptotic_search(kN1, P("2+X1+2*X1^2"), P("1+2*X1+X1^2"), ctx);
    REQUIRE(pair.certificate.has_value());
    CHECK(verify_asymptotic(kN1, P("2+X1+2*X1^2"), P("1+2*X1+X1^2"), *pair.certificate, ctx)
              .accepted());

    // constants compare numerically: 1 >= m 2^n is hopeless for eps < 1
    BoundContext small{Rational(1), Rational(1) / 2};
    AsymptoticSearchResult hopeless = asymptotic_search(kN1, P("1"), P("2"), small, {6, 4, 64});
    CHECK_FALSE(hopeless.certificate.has_value());
    CHECK(hopeless.report.failure == "caps exhausted");
}

TEST_CASE("ideal search: trivial certificate for coefficientwise-nonnegative f") {
    BoundContext ctx{Rational(1), Rational(1)};
    IdealSearchResult r = ideal_search(P("X1+X2+1"), {P("X1*X2-1")}, ctx, {1, 1, {}});
    REQUIRE(r.certificate.has_value());
    CHECK(verify_ideal(P("X1+X2+1"), *r.certificate, ctx).accepted());
}

TEST_CASE("ideal search: AM-GM needs the ideal and the delta slack") {
    BoundContext ctx{Rational(1), Rational(1)};
    Polynomial f = P("X1+X2-2");
    IdealSearchResult r = ideal_search(f, {P("X1*X2-1")}, ctx, {6, 6, {}});
    REQUIRE(r.certificate.has_value());
    CHECK(verify_ideal(f, *r.certificate, ctx).accepted());
    // independent coefficientwise recheck of the emitted data
    const auto& cert = *r.certificate;
    SemiringInstance ambient(2, CoeffDomain::nonneg_rationals, false, false);
    Polynomial total = cert.h * (f + cert.p(universal_element(ambient)));
    for (std::size_t i = 0; i < cert.ideal_gens.size(); ++i)
        total += cert.multipliers[i] * cert.ideal_gens[i];
    CHECK(coeffwise_nonneg(total));
    CHECK(cert.p(ctx.r) <= ctx.eps);
}

TEST_CASE("ideal search: square deficit on the hyperbola") {
    // f = X1^2 + X2^2 - 2 is nonnegative on X1 X2 = 1; deg f = 2 makes the
    // schedule filter delta (1 + r d)^2 <= eps skip the first two deltas.
    BoundContext ctx{Rational(1), Rational(1)};
    Polynomial f = P("X1^2+X2^2-2");
    IdealSearchResult r = ideal_search(f, {P("X1*X2-1")}, ctx, {6, 6, {}});
    REQUIRE(r.certificate.has_value());
    CHECK(verify_ideal(f, *r.certificate, ctx).accepted());
    CHECK(r.certificate->p(ctx.r) <= ctx.eps);
}

TEST_CASE("ideal search: f = -1 is infeasible at every cap") {
    // deg f = 0 makes p a constant delta <= eps, so eps must stay below 1
    // to keep f + p(u) negative; at eps = 1 the boundary delta = 1 would
    // cancel f exactly and legitimately certify this single context.
    BoundContext ctx{Rational(1), Rational(1) / 2};
    IdealSearchResult r = ideal_search(P("-1", 2), {P("X1*X2-1")}, ctx, {4, 4, {}});
    CHECK_FALSE(r.certificate.has_value());
    CHECK_FALSE(r.report.failure.empty());
}

TEST_CASE("search-verify round trip on fuzzed dominating pairs") {
    Fuzzer fuzz(61);
    int closures = 0, asymptotics = 0;
    for (int i = 0; i < 60; ++i) {
        SemiringInstance inst(fuzz.uniform(1, 2), CoeffDomain::nonneg_rationals, false,
                              fuzz.chance(0.5));
        Polynomial y = fuzz.member(inst, 2, 3);
        Polynomial x = y + fuzz.member(inst, 2, 2);
        BoundContext ctx{Rational(fuzz.uniform(0, 4)), Rational(fuzz.uniform(1, 4)) / 2};
        ClosureSearchResult c = closure_from_polya(inst, x, y, ctx, 40);
        if (c.certificate) {
            ++closures;
            CHECK(verify_closure(inst, x, y, *c.certificate, ctx).accepted());
            // the emitted scalar bound holds exactly
            CHECK(c.certificate->p(ctx.r) <= ctx.eps * Rational(c.certificate->m));
        }
        AsymptoticSearchResult a = asymptotic_search(inst, x, y, ctx, {4, 4, 64});
        if (a.certificate) {
            ++asymptotics;
            CHECK(verify_asymptotic(inst, x, y, *a.certificate, ctx).accepted());
        }
    }
    CHECK(closures == 60);  // x >= y coefficientwise: the Polya path cannot fail
    CHECK(asymptotics == 60);
}

TEST_CASE("family soundness: certificates along an eps-schedule bound the gap") {
    // When accepted certificates exist for every eps in a decreasing
    // schedule, the pointwise order holds at every sampled point in the
    // limit. Checked on searcher outputs over dominating pairs.
    Fuzzer fuzz(63);
    for (int i = 0; i < 20; ++i) {
        SemiringInstance inst(fuzz.uniform(1, 2), CoeffDomain::nonneg_rationals, false, true);
        Polynomial y = fuzz.member(inst, 2, 3);
        Polynomial x = y + fuzz.member(inst, 2, 2);
        const Polynomial u = universal_element(inst);
        for (int pt = 0; pt < 10; ++pt) {
            EvaluationPoint s = fuzz.point(inst);
            Rational r = u.evaluate(s);
            Rational eps(1);
            for (int step = 0; step < 5; ++step, eps /= 2) {
                BoundContext ctx{r, eps};
                ClosureSearchResult c = closure_from_polya(inst, x, y, ctx, 40);
                REQUIRE(c.certificate.has_value());
                REQUIRE(verify_closure(inst, x, y, *c.certificate, ctx).accepted());
                // accepted at {r = u(s), eps} with z(s) > 0: x(s) + eps >= y(s)
                REQUIRE(c.certificate->z.evaluate(s) > 0);
                CHECK(x.evaluate(s) + eps >= y.evaluate(s));
            }
            // schedule limit
            CHECK(x.evaluate(s) >= y.evaluate(s));
        }
    }
}

TEST_CASE("polya termination on strictly positive instances") {
    // q = positive-definite deficit pattern + nonnegative noise + eta u^deg
    // stays strictly positive on the simplex, so delta = 0 terminates.
    Fuzzer fuzz(67);
    for (int i = 0; i < 20; ++i) {
        int d = fuzz.uniform(1, 3);
        SemiringInstance inst(d, CoeffDomain::nonneg_rationals, false, false);
        Polynomial u = universal_element(inst);
        Rational eta = fuzz.chance(0.5) ? Rational(1) / 4 : Rational(1) / 2;
        Polynomial m = d == 1 ? P("X1")
                              : Polynomial::variable(d, 0, 1) *
                                    Polynomial::variable(d, fuzz.uniform(1, d - 1), 1);
        Polynomial w = fuzz.member(inst, 4, 3);
        Polynomial q = eta * (u * u - Rational(3) * m) + w;
        PolyaResult r = polya_search({q, Rational(0), 60});
        REQUIRE_MESSAGE(r.k.has_value(), "exhausted on ", format_polynomial(q));
        if (*r.k > 0) CHECK_FALSE(polya_condition_holds(q, Rational(0), *r.k - 1));
    }
}
