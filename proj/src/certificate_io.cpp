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

#include "polycert/certificate_io.hpp"

#include <json.hpp>

#include <istream>
#include <iterator>
#include <ostream>

#include "polycert/parse.hpp"

namespace polycert {

namespace {

using nlohmann::json;

json rational_json(const Rational& q) { return rational_to_string(q); }

Rational rational_field(const json& j, const char* what) {
    if (!j.is_string()) throw CertificateFormatError(std::string(what) + " must be an 'a/b' string");
    try {
        return rational_from_string(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw CertificateFormatError(std::string(what) + ": " + e.what());
    }
}

json poly_json(const Polynomial& p) { return format_polynomial(p); }

Polynomial poly_field(const json& j, int dim, const char* what) {
    if (!j.is_string()) throw CertificateFormatError(std::string(what) + " must be a string");
    try {
        Polynomial p = parse_polynomial(j.get<std::string>(), dim);
        if (dim > 0 && p.dimension() != dim)
            throw CertificateFormatError(std::string(what) + " exceeds the instance dimension");
        return p;
    } catch (const ParseError& e) {
        throw CertificateFormatError(std::string(what) + ": " + e.what());
    }
}

json univariate_json(const UnivariatePoly& p) {
    json arr = json::array();
    for (const auto& c : p.coefficients()) arr.push_back(rational_json(c));
    return arr;
}

UnivariatePoly univariate_field(const json& j, const char* what) {
    if (!j.is_array()) throw CertificateFormatError(std::string(what) + " must be an array");
    std::vector<Rational> cs;
    cs.reserve(j.size());
    for (const auto& item : j) cs.push_back(rational_field(item, what));
    return UnivariatePoly(std::move(cs));
}

mpz_class scalar_field(const json& j, const char* what) {
    Rational q = rational_field(j, what);
    if (!is_integer(q)) throw CertificateFormatError(std::string(what) + " must be an integer");
    return q.get_num();
}

int int_field(const json& j, const char* what) {
    if (!j.is_number_integer()) throw CertificateFormatError(std::string(what) + " must be an integer");
    return j.get<int>();
}

const json& member(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw CertificateFormatError(std::string("missing field '") + key + "'");
    return *it;
}

json instance_json(const SemiringInstance& inst) {
    return json{{"d", inst.dimension},
                {"domain", to_string(inst.domain)},
                {"laurent", inst.laurent},
                {"prime", inst.positive_constant_restriction}};
}

SemiringInstance instance_field(const json& j) {
    if (!j.is_object()) throw CertificateFormatError("instance must be an object");
    try {
        return SemiringInstance(int_field(member(j, "d"), "instance.d"),
                                coeff_domain_from_string(member(j, "domain").get<std::string>()),
                                member(j, "laurent").get<bool>(),
                                member(j, "prime").get<bool>());
    } catch (const std::invalid_argument& e) {
        throw CertificateFormatError(std::string("instance: ") + e.what());
    }
}

json certificate_json(const Certificate& cert) {
    json j;
    std::visit(
        [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, ClosureCertificate> ||
                          std::is_same_v<T, CatalyticCertificate>) {
                j["p"] = univariate_json(c.p);
                j["z"] = poly_json(c.z);
                j["m"] = c.m.get_str();
            } else if constexpr (std::is_same_v<T, AsymptoticCertificate>) {
                j["p"] = univariate_json(c.p);
                j["n"] = c.n;
                j["m"] = c.m.get_str();
            } else if constexpr (std::is_same_v<T, StrassenCertificate>) {
                j["k"] = c.k;
                j["n"] = c.n;
            } else if constexpr (std::is_same_v<T, IdealCertificate>) {
                j["h"] = poly_json(c.h);
                j["p"] = univariate_json(c.p);
                json mults = json::array();
                for (const auto& m : c.multipliers) mults.push_back(poly_json(m));
                j["multipliers"] = mults;
                json gens = json::array();
                for (const auto& g : c.ideal_gens) gens.push_back(poly_json(g));
                j["ideal_gens"] = gens;
            } else if constexpr (std::is_same_v<T, RateWitnessCertificate>) {
                j["m"] = c.m;
                j["n"] = c.n;
                j["l"] = c.l.get_str();
                j["p"] = univariate_json(c.p);
            }
        },
        cert);
    return j;
}

Certificate certificate_field(const std::string& form, const json& j, int dim) {
    if (!j.is_object()) throw CertificateFormatError("certificate must be an object");
    if (form == "closure")
        return ClosureCertificate{univariate_field(member(j, "p"), "p"),
                                  poly_field(member(j, "z"), dim, "z"),
                                  scalar_field(member(j, "m"), "m")};
    if (form == "catalytic")
        return CatalyticCertificate{univariate_field(member(j, "p"), "p"),
                                    poly_field(member(j, "z"), dim, "z"),
                                    scalar_field(member(j, "m"), "m")};
    if (form == "asymptotic")
        return AsymptoticCertificate{univariate_field(member(j, "p"), "p"),
                                     int_field(member(j, "n"), "n"),
                                     scalar_field(member(j, "m"), "m")};
    if (form == "strassen")
        return StrassenCertificate{int_field(member(j, "k"), "k"), int_field(member(j, "n"), "n")};
    if (form == "ideal") {
        IdealCertificate c;
        c.h = poly_field(member(j, "h"), dim, "h");
        c.p = univariate_field(member(j, "p"), "p");
        for (const auto& m : member(j, "multipliers"))
            c.multipliers.push_back(poly_field(m, dim, "multiplier"));
        for (const auto& g : member(j, "ideal_gens"))
            c.ideal_gens.push_back(poly_field(g, dim, "ideal generator"));
        return c;
    }
    if (form == "rate_witness")
        return RateWitnessCertificate{int_field(member(j, "m"), "m"), int_field(member(j, "n"), "n"),
                                      scalar_field(member(j, "l"), "l"),
                                      univariate_field(member(j, "p"), "p")};
    throw CertificateFormatError("unknown certificate form '" + form + "'");
}

json report_json(const SearchReport& r) {
    json j;
    j["caps"] = r.caps;
    j["iterations"] = r.iterations;
    if (!r.failure.empty()) j["failure"] = r.failure;
    return j;
}

SearchReport report_field(const json& j) {
    SearchReport r;
    if (auto it = j.find("caps"); it != j.end())
        r.caps = it->get<std::map<std::string, std::string>>();
    if (auto it = j.find("iterations"); it != j.end()) r.iterations = it->get<long>();
    if (auto it = j.find("failure"); it != j.end()) r.failure = it->get<std::string>();
    return r;
}

json manifest_json(const RunManifest& m) {
    return json{{"command", m.command},
                {"parameters", m.parameters},
                {"tool_version", m.tool_version}};
}

RunManifest manifest_field(const json& j) {
    RunManifest m;
    m.command = member(j, "command").get<std::string>();
    m.parameters = member(j, "parameters").get<std::map<std::string, std::string>>();
    m.tool_version = member(j, "tool_version").get<std::string>();
    return m;
}

}  // namespace

std::string serialize_certificate(const CertificateDocument& doc) {
    json j;
    j["version"] = doc.version;
    j["form"] = form_name(doc.certificate);
    j["instance"] = instance_json(doc.instance);
    if (std::holds_alternative<IdealCertificate>(doc.certificate)) {
        j["f"] = poly_json(doc.f);
    } else {
        j["x"] = poly_json(doc.x);
        j["y"] = poly_json(doc.y);
    }
    if (std::holds_alternative<RateWitnessCertificate>(doc.certificate))
        j["lambda"] = rational_json(doc.lambda);
    j["context"] = json{{"r", rational_json(doc.context.r)}, {"eps", rational_json(doc.context.eps)}};
    j["certificate"] = certificate_json(doc.certificate);
    if (doc.report) j["report"] = report_json(*doc.report);
    if (doc.manifest) j["manifest"] = manifest_json(*doc.manifest);
    return j.dump(2) + "\n";
}

CertificateDocument deserialize_certificate(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw CertificateFormatError(std::string("not a certificate document: ") + e.what());
    }
    if (!j.is_object()) throw CertificateFormatError("certificate document must be a JSON object");
    try {
        CertificateDocument doc;
        doc.version = int_field(member(j, "version"), "version");
        if (doc.version != 1) throw CertificateFormatError("unsupported document version");
        doc.instance = instance_field(member(j, "instance"));
        const std::string form = member(j, "form").get<std::string>();
        doc.certificate = certificate_field(form, member(j, "certificate"), doc.instance.dimension);
        if (form == "ideal") {
            doc.f = poly_field(member(j, "f"), doc.instance.dimension, "f");
        } else {
            doc.x = poly_field(member(j, "x"), doc.instance.dimension, "x");
            doc.y = poly_field(member(j, "y"), doc.instance.dimension, "y");
        }
        if (form == "rate_witness") doc.lambda = rational_field(member(j, "lambda"), "lambda");
        const json& ctx = member(j, "context");
        doc.context.r = rational_field(member(ctx, "r"), "context.r");
        doc.context.eps = rational_field(member(ctx, "eps"), "context.eps");
        if (auto it = j.find("report"); it != j.end()) doc.report = report_field(*it);
        if (auto it = j.find("manifest"); it != j.end()) doc.manifest = manifest_field(*it);
        return doc;
    } catch (const json::exception& e) {
        throw CertificateFormatError(std::string("malformed certificate document: ") + e.what());
    }
}

void save_certificate(std::ostream& os, const CertificateDocument& doc) {
    os << serialize_certificate(doc);
}

CertificateDocument load_certificate(std::istream& is) {
    std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    return deserialize_certificate(text);
}

VerifyOutcome verify_document(const CertificateDocument& doc) {
    return std::visit(
        [&](const auto& c) -> VerifyOutcome {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, ClosureCertificate>)
                return verify_closure(doc.instance, doc.x, doc.y, c, doc.context);
            else if constexpr (std::is_same_v<T, CatalyticCertificate>)
                return verify_catalytic(doc.instance, doc.x, doc.y, c, doc.context);
            else if constexpr (std::is_same_v<T, AsymptoticCertificate>)
                return verify_asymptotic(doc.instance, doc.x, doc.y, c, doc.context);
            else if constexpr (std::is_same_v<T, StrassenCertificate>)
                return verify_strassen(doc.instance, doc.x, doc.y, c, doc.context.eps);
            else if constexpr (std::is_same_v<T, IdealCertificate>)
                return verify_ideal(doc.f, c, doc.context);
            else
                return verify_rate_witness(doc.instance, doc.x, doc.y, doc.lambda, c, doc.context);
        },
        doc.certificate);
}

}  // namespace polycert
