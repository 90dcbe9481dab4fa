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

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "polycert/certificate_io.hpp"
#include "polycert/cli.hpp"
#include "polycert/parse.hpp"
#include "polycert/search.hpp"
#include "polycert/spectrum.hpp"

namespace py = pybind11;
using namespace polycert;

namespace {

Rational rat(const std::string& text) { return rational_from_string(text); }

std::vector<Rational> rats(const std::vector<std::string>& texts) {
    std::vector<Rational> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(rat(t));
    return out;
}

std::vector<std::string> strs(const std::vector<Rational>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(rational_to_string(v));
    return out;
}

std::string status_name(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::accepted: return "accepted";
        case VerifyStatus::rejected: return "rejected";
        case VerifyStatus::invalid: return "invalid";
    }
    return "?";
}

py::dict report_dict(const SearchReport& r) {
    py::dict d;
    d["caps"] = r.caps;
    d["iterations"] = r.iterations;
    d["failure"] = r.failure;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact order certificates for preordered polynomial semirings";

    py::register_exception<ParseError>(m, "PolynomialParseError", PyExc_ValueError);
    py::register_exception<CertificateFormatError>(m, "CertificateFormatError", PyExc_ValueError);

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init<int>(), py::arg("dimension") = 0)
        .def_property_readonly("dimension", &Polynomial::dimension)
        .def_property_readonly("is_zero", &Polynomial::is_zero)
        .def_property_readonly("term_count", &Polynomial::term_count)
        .def_property_readonly("degree",
                               [](const Polynomial& p) -> py::object {
                                   auto d = p.degree();
                                   return d ? py::cast(*d) : py::none();
                               })
        .def("coefficient",
             [](const Polynomial& p, const Exponents& e) {
                 return rational_to_string(p.coefficient(e));
             })
        .def("evaluate",
             [](const Polynomial& p, const std::vector<std::string>& point) {
                 return rational_to_string(p.evaluate(rats(point)));
             })
        .def("homogenized", &Polynomial::homogenized)
        .def("dehomogenized", &Polynomial::dehomogenized)
        .def("extended", &Polynomial::extended)
        .def("pow", &Polynomial::pow)
        .def("__pow__", [](const Polynomial& p, unsigned n) { return p.pow(n); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__str__", [](const Polynomial& p) { return format_polynomial(p); })
        .def("__repr__",
             [](const Polynomial& p) { return "Polynomial('" + format_polynomial(p) + "')"; });

    m.def("parse", &parse_polynomial, py::arg("text"), py::arg("min_dimension") = 0,
          "Parse the core polynomial grammar");
    m.def("parse_expr", &parse_polynomial_expr, py::arg("text"), py::arg("min_dimension") = 0,
          "Parse the CLI grammar (parenthesized powers allowed)");
    m.def("format", &format_polynomial);
    m.def("coeffwise_geq", &coeffwise_geq);
    m.def("embezzlement_identity", &embezzlement_identity, py::arg("n"));

    py::enum_<CoeffDomain>(m, "CoeffDomain")
        .value("naturals", CoeffDomain::naturals)
        .value("nonneg_rationals", CoeffDomain::nonneg_rationals);

    py::class_<SemiringInstance>(m, "SemiringInstance")
        .def(py::init([](int d, const std::string& domain, bool laurent, bool prime) {
                 return SemiringInstance(d, coeff_domain_from_string(domain), laurent, prime);
             }),
             py::arg("d"), py::arg("domain") = "Q+", py::arg("laurent") = false,
             py::arg("prime") = false)
        .def_readonly("dimension", &SemiringInstance::dimension)
        .def_readonly("laurent", &SemiringInstance::laurent)
        .def_readonly("prime", &SemiringInstance::positive_constant_restriction)
        .def_property_readonly("domain",
                               [](const SemiringInstance& i) { return to_string(i.domain); })
        .def(py::self == py::self);

    m.def("universal_element", &universal_element);
    m.def("is_member", &is_member);
    m.def("leq", &leq);

    py::class_<UnivariatePoly>(m, "UnivariatePoly")
        .def(py::init([](const std::vector<std::string>& coeffs) {
                 return UnivariatePoly(rats(coeffs));
             }),
             py::arg("coefficients") = std::vector<std::string>{})
        .def_property_readonly("coefficients",
                               [](const UnivariatePoly& p) { return strs(p.coefficients()); })
        .def("__call__",
             [](const UnivariatePoly& p, const std::string& r) {
                 return rational_to_string(p(rat(r)));
             })
        .def("at", [](const UnivariatePoly& p, const Polynomial& u) { return p(u); });

    py::class_<BoundContext>(m, "BoundContext")
        .def(py::init([](const std::string& r, const std::string& eps) {
                 BoundContext ctx{rat(r), rat(eps)};
                 ctx.validate();
                 return ctx;
             }),
             py::arg("r") = "1", py::arg("eps") = "1/2")
        .def_property_readonly("r", [](const BoundContext& c) { return rational_to_string(c.r); })
        .def_property_readonly("eps",
                               [](const BoundContext& c) { return rational_to_string(c.eps); });

    py::class_<ClosureCertificate>(m, "ClosureCertificate")
        .def(py::init([](const UnivariatePoly& p, const Polynomial& z, const std::string& mm) {
                 return ClosureCertificate{p, z, mpz_class(mm)};
             }),
             py::arg("p"), py::arg("z"), py::arg("m") = "1")
        .def_readonly("p", &ClosureCertificate::p)
        .def_readonly("z", &ClosureCertificate::z)
        .def_property_readonly("m", [](const ClosureCertificate& c) { return c.m.get_str(); });

    py::class_<CatalyticCertificate>(m, "CatalyticCertificate")
        .def(py::init([](const UnivariatePoly& p, const Polynomial& z, const std::string& mm) {
                 return CatalyticCertificate{p, z, mpz_class(mm)};
             }),
             py::arg("p"), py::arg("z"), py::arg("m") = "1")
        .def_readonly("p", &CatalyticCertificate::p)
        .def_readonly("z", &CatalyticCertificate::z)
        .def_property_readonly("m", [](const CatalyticCertificate& c) { return c.m.get_str(); });

    py::class_<AsymptoticCertificate>(m, "AsymptoticCertificate")
        .def(py::init([](const UnivariatePoly& p, int n, const std::string& mm) {
                 return AsymptoticCertificate{p, n, mpz_class(mm)};
             }),
             py::arg("p"), py::arg("n") = 1, py::arg("m") = "1")
        .def_readonly("p", &AsymptoticCertificate::p)
        .def_readonly("n", &AsymptoticCertificate::n)
        .def_property_readonly("m", [](const AsymptoticCertificate& c) { return c.m.get_str(); });

    py::class_<StrassenCertificate>(m, "StrassenCertificate")
        .def(py::init<int, int>(), py::arg("k") = 0, py::arg("n") = 1)
        .def_readonly("k", &StrassenCertificate::k)
        .def_readonly("n", &StrassenCertificate::n);

    py::class_<IdealCertificate>(m, "IdealCertificate")
        .def(py::init<Polynomial, UnivariatePoly, std::vector<Polynomial>,
                      std::vector<Polynomial>>(),
             py::arg("h"), py::arg("p"), py::arg("multipliers"), py::arg("ideal_gens"))
        .def_readonly("h", &IdealCertificate::h)
        .def_readonly("p", &IdealCertificate::p)
        .def_readonly("multipliers", &IdealCertificate::multipliers)
        .def_readonly("ideal_gens", &IdealCertificate::ideal_gens);

    py::class_<RateWitnessCertificate>(m, "RateWitnessCertificate")
        .def(py::init([](int mm, int n, const std::string& l, const UnivariatePoly& p) {
                 return RateWitnessCertificate{mm, n, mpz_class(l), p};
             }),
             py::arg("m") = 1, py::arg("n") = 1, py::arg("l") = "1",
             py::arg("p") = UnivariatePoly::constant(1))
        .def_readonly("m", &RateWitnessCertificate::m)
        .def_readonly("n", &RateWitnessCertificate::n)
        .def_property_readonly("l", [](const RateWitnessCertificate& c) { return c.l.get_str(); })
        .def_readonly("p", &RateWitnessCertificate::p);

    py::class_<VerifyOutcome>(m, "VerifyOutcome")
        .def_property_readonly("status",
                               [](const VerifyOutcome& o) { return status_name(o.status); })
        .def_readonly("detail", &VerifyOutcome::detail)
        .def_property_readonly("accepted", &VerifyOutcome::accepted)
        .def("__bool__", &VerifyOutcome::accepted)
        .def("__repr__", [](const VerifyOutcome& o) {
            return "VerifyOutcome(" + status_name(o.status) +
                   (o.detail.empty() ? std::string() : ", '" + o.detail + "'") + ")";
        });

    m.def("verify_closure", &verify_closure);
    m.def("verify_catalytic", &verify_catalytic);
    m.def("verify_asymptotic", &verify_asymptotic);
    m.def("verify_strassen",
          [](const SemiringInstance& inst, const Polynomial& x, const Polynomial& y,
             const StrassenCertificate& c, const std::string& eps) {
              return verify_strassen(inst, x, y, c, rat(eps));
          });
    m.def("verify_ideal", &verify_ideal);
    m.def("verify_rate_witness",
          [](const SemiringInstance& inst, const Polynomial& x, const Polynomial& y,
             const std::string& lambda, const RateWitnessCertificate& c, const BoundContext& ctx) {
              return verify_rate_witness(inst, x, y, rat(lambda), c, ctx);
          });

    m.def(
        "polya_search",
        [](const Polynomial& q, const std::string& delta, int k_max) {
            PolyaResult r = polya_search({q, rat(delta), k_max});
            py::dict d;
            d["k"] = r.k ? py::cast(*r.k) : py::none();
            d["report"] = report_dict(r.report);
            return d;
        },
        py::arg("q"), py::arg("delta") = "0", py::arg("k_max") = 60);

    m.def(
        "closure_from_polya",
        [](const SemiringInstance& inst, const Polynomial& x, const Polynomial& y,
           const BoundContext& ctx, int k_max) {
            ClosureSearchResult r = closure_from_polya(inst, x, y, ctx, k_max);
            py::dict d;
            d["certificate"] = r.certificate ? py::cast(*r.certificate) : py::none();
            d["report"] = report_dict(r.report);
            return d;
        },
        py::arg("inst"), py::arg("x"), py::arg("y"), py::arg("ctx"), py::arg("k_max") = 60);

    m.def(
        "asymptotic_search",
        [](const SemiringInstance& inst, const Polynomial& x, const Polynomial& y,
           const BoundContext& ctx, int n_max, int j_max, long c_max) {
            AsymptoticSearchResult r = asymptotic_search(inst, x, y, ctx, {n_max, j_max, c_max});
            py::dict d;
            d["certificate"] = r.certificate ? py::cast(*r.certificate) : py::none();
            d["report"] = report_dict(r.report);
            return d;
        },
        py::arg("inst"), py::arg("x"), py::arg("y"), py::arg("ctx"), py::arg("n_max") = 12,
        py::arg("j_max") = 8, py::arg("c_max") = 256);

    m.def(
        "ideal_search",
        [](const Polynomial& f, const std::vector<Polynomial>& gens, const BoundContext& ctx,
           int deg_h, int deg_mult, const std::vector<std::string>& deltas) {
            IdealCaps caps{deg_h, deg_mult, rats(deltas)};
            IdealSearchResult r = ideal_search(f, gens, ctx, caps);
            py::dict d;
            d["certificate"] = r.certificate ? py::cast(*r.certificate) : py::none();
            d["report"] = report_dict(r.report);
            return d;
        },
        py::arg("f"), py::arg("gens"), py::arg("ctx"), py::arg("deg_h") = -1,
        py::arg("deg_mult") = -1, py::arg("deltas") = std::vector<std::string>{});

    m.def(
        "solve_feasibility",
        [](const std::vector<std::pair<std::string, bool>>& variables,
           const std::vector<std::tuple<std::vector<std::pair<std::string, std::string>>,
                                        std::string, std::string>>& constraints) -> py::object {
            FeasibilityProblem prob;
            std::map<std::string, FeasibilityProblem::VarId> ids;
            for (const auto& [name, nonneg] : variables)
                ids[name] = prob.add_variable(name, nonneg);
            for (const auto& [lhs, rel, rhs] : constraints) {
                FeasibilityProblem::LinearExpr expr;
                for (const auto& [name, coeff] : lhs) {
                    auto it = ids.find(name);
                    if (it == ids.end())
                        throw std::invalid_argument("unknown variable '" + name + "'");
                    expr.emplace_back(it->second, rat(coeff));
                }
                FeasibilityProblem::Relation relation;
                if (rel == "==")
                    relation = FeasibilityProblem::Relation::eq;
                else if (rel == "<=")
                    relation = FeasibilityProblem::Relation::leq;
                else if (rel == ">=")
                    relation = FeasibilityProblem::Relation::geq;
                else
                    throw std::invalid_argument("relation must be ==, <= or >=");
                prob.add_constraint(std::move(expr), relation, rat(rhs));
            }
            FeasibilityResult result = solve_feasibility(prob);
            if (!result.feasible) return py::none();
            py::dict assignment;
            for (const auto& [name, id] : ids)
                assignment[py::str(name)] = rational_to_string(result.assignment[id]);
            return assignment;
        },
        py::arg("variables"), py::arg("constraints"),
        "Exact rational linear feasibility: variables as (name, nonnegative) pairs, "
        "constraints as (coeff list, '=='|'<='|'>=', rhs); returns an assignment dict "
        "or None when infeasible");

    py::class_<SampleConfig>(m, "SampleConfig")
        .def(py::init([](int compact, int box, const std::string& box_max, int rounds) {
                 SampleConfig c;
                 c.compact_per_axis = compact;
                 c.box_per_axis = box;
                 c.box_max = rat(box_max);
                 c.refine_rounds = rounds;
                 return c;
             }),
             py::arg("compact_per_axis") = 64, py::arg("box_per_axis") = 17,
             py::arg("box_max") = "4", py::arg("refine_rounds") = 3)
        .def("describe", &SampleConfig::describe);

    m.def(
        "pointwise_check",
        [](const SemiringInstance& inst, const Polynomial& x, const Polynomial& y,
           const SampleConfig& config) {
            PointwiseResult r = pointwise_check(inst, x, y, config);
            py::dict d;
            d["holds_on_samples"] = r.holds_on_samples;
            d["counterexample"] =
                r.counterexample ? py::cast(strs(*r.counterexample)) : py::none();
            d["samples"] = r.samples;
            d["min_gap"] = rational_to_string(r.min_gap);
            return d;
        },
        py::arg("inst"), py::arg("x"), py::arg("y"), py::arg("config") = SampleConfig{});

    m.def(
        "rate",
        [](const SemiringInstance& inst, const Polynomial& x, const Polynomial& y,
           const SampleConfig& config) {
            RateResult r = rate(inst, x, y, config);
            py::dict d;
            d["value"] = r.value;
            d["argmin"] = strs(r.argmin);
            d["resolution"] = r.resolution;
            d["exact"] = r.exact;
            return d;
        },
        py::arg("inst"), py::arg("x"), py::arg("y"), py::arg("config") = SampleConfig{});

    m.def("serialize_certificate", &serialize_certificate);
    m.def("deserialize_certificate", &deserialize_certificate);
    m.def("verify_document", &verify_document);
    py::class_<CertificateDocument>(m, "CertificateDocument")
        .def_readonly("instance", &CertificateDocument::instance)
        .def_readonly("x", &CertificateDocument::x)
        .def_readonly("y", &CertificateDocument::y)
        .def_readonly("f", &CertificateDocument::f)
        .def_property_readonly(
            "form", [](const CertificateDocument& d) { return form_name(d.certificate); });

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        "Run a polycert CLI invocation in-process; returns (exit_code, stdout, stderr)");

    m.attr("__version__") = "0.1.0";
}
