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

#include "polycert/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "polycert/certificate_io.hpp"
#include "polycert/parse.hpp"
#include "polycert/search.hpp"
#include "polycert/spectrum.hpp"

namespace polycert::cli {

namespace {

struct CommonOptions {
    std::string x_text, y_text, f_text;
    std::vector<std::string> ideal_texts;
    std::string r_text = "1";
    std::string eps_text = "1/2";
    std::string form = "closure";
    std::string delta_text;
    std::string lambda_text = "0";
    int kmax = 60;
    int nmax = 12;
    int deg_h = -1;
    int deg_mult = -1;
    int grid = 64;
    long seed = 0;
    std::string out_path;
    std::string domain = "Q+";
    bool laurent = false;
    bool prime = false;
    std::string certificate_path;
};

struct ParsedPair {
    SemiringInstance instance;
    Polynomial x, y;
};

Rational rational_flag(const std::string& text, const std::string& flag) {
    try {
        return rational_from_string(text);
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError(flag, "expected a rational 'a' or 'a/b', got '" + text + "'");
    }
}

SemiringInstance make_instance(const CommonOptions& opt, int dimension) {
    return SemiringInstance(std::max(1, dimension), coeff_domain_from_string(opt.domain),
                            opt.laurent, opt.prime);
}

ParsedPair parse_pair(const CommonOptions& opt, std::ostream& err) {
    if (opt.x_text.empty() || opt.y_text.empty())
        throw CLI::RequiredError("--x and --y are required");
    Polynomial x = parse_polynomial_expr(opt.x_text);
    Polynomial y = parse_polynomial_expr(opt.y_text);
    const int d = std::max({1, x.dimension(), y.dimension()});
    x = x.extended(d);
    y = y.extended(d);
    SemiringInstance inst = make_instance(opt, d);
    if (!is_member(inst, x) || !is_member(inst, y)) {
        err << "error: inputs are not members of the instance "
            << "(domain " << opt.domain << (opt.laurent ? ", laurent" : "")
            << (opt.prime ? ", positive constant" : "") << ")\n";
        throw CLI::ValidationError("--x/--y", "non-member input");
    }
    return {inst, std::move(x), std::move(y)};
}

SampleConfig make_config(const CommonOptions& opt) {
    SampleConfig config;
    config.compact_per_axis = opt.grid;
    return config;
}

RunManifest make_manifest(const std::string& command,
                          std::map<std::string, std::string> parameters) {
    return RunManifest{command, std::move(parameters), kToolVersion};
}

std::map<std::string, std::string> base_parameters(const CommonOptions& opt) {
    std::map<std::string, std::string> params;
    params["domain"] = opt.domain;
    params["laurent"] = opt.laurent ? "true" : "false";
    params["prime"] = opt.prime ? "true" : "false";
    params["r"] = rational_to_string(rational_flag(opt.r_text, "--r"));
    params["eps"] = rational_to_string(rational_flag(opt.eps_text, "--eps"));
    params["grid"] = std::to_string(opt.grid);
    params["seed"] = std::to_string(opt.seed);
    return params;
}

class Stopwatch {
   public:
    long long elapsed_ms() const {
        using namespace std::chrono;
        return duration_cast<milliseconds>(steady_clock::now() - start_).count();
    }

   private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

nlohmann::json point_json(const EvaluationPoint& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p) arr.push_back(rational_to_string(c));
    return arr;
}

// Machine-readable report with the run manifest; no timing, identical runs
// write identical bytes.
void write_report(const std::string& path, const RunManifest& manifest,
                  nlohmann::json result, std::ostream& out) {
    nlohmann::json j;
    j["command"] = manifest.command;
    j["manifest"] = {{"command", manifest.command},
                     {"parameters", manifest.parameters},
                     {"tool_version", manifest.tool_version}};
    j["result"] = std::move(result);
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
    file << j.dump(2) << "\n";
    out << "report written to " << path << "\n";
}

int cmd_check(const CommonOptions& opt, std::ostream& out, std::ostream& err) {
    ParsedPair in = parse_pair(opt, err);
    Stopwatch watch;
    PointwiseResult result = pointwise_check(in.instance, in.x, in.y, make_config(opt));
    err << "checked " << result.samples << " samples in " << watch.elapsed_ms() << " ms\n";

    nlohmann::json report;
    report["samples"] = result.samples;
    int code;
    if (result.counterexample) {
        out << "status: counterexample\n";
        out << "s = " << format_point(*result.counterexample) << "\n";
        out << "x(s) = " << rational_to_string(result.x_at_witness) << "\n";
        out << "y(s) = " << rational_to_string(result.y_at_witness) << "\n";
        report["status"] = "counterexample";
        report["witness"] = point_json(*result.counterexample);
        report["x_at_witness"] = rational_to_string(result.x_at_witness);
        report["y_at_witness"] = rational_to_string(result.y_at_witness);
        code = exit_disproved;
    } else {
        out << "status: holds_on_samples\n";
        out << "samples: " << result.samples << "\n";
        out << "min gap x(s)-y(s): " << rational_to_string(result.min_gap) << " at "
            << format_point(result.min_gap_point) << "\n";
        report["status"] = "holds_on_samples";
        report["min_gap"] = rational_to_string(result.min_gap);
        report["min_gap_at"] = point_json(result.min_gap_point);
        code = exit_ok;
    }
    if (!opt.out_path.empty()) {
        auto params = base_parameters(opt);
        params["x"] = format_polynomial(in.x);
        params["y"] = format_polynomial(in.y);
        write_report(opt.out_path, make_manifest("check", std::move(params)), std::move(report),
                     out);
    }
    return code;
}

void write_document(const CertificateDocument& doc, const std::string& path, std::ostream& out) {
    std::string payload = serialize_certificate(doc);
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
    file << payload;
    out << "certificate written to " << path << "\n";
}

int certify_order_pair(const CommonOptions& opt, std::ostream& out, std::ostream& err) {
    ParsedPair in = parse_pair(opt, err);
    BoundContext ctx{rational_flag(opt.r_text, "--r"), rational_flag(opt.eps_text, "--eps")};

    PointwiseResult pointwise = pointwise_check(in.instance, in.x, in.y, make_config(opt));
    if (pointwise.counterexample) {
        out << "disproved: x - y < 0 at s = " << format_point(*pointwise.counterexample) << "\n";
        out << "x(s) = " << rational_to_string(pointwise.x_at_witness)
            << ", y(s) = " << rational_to_string(pointwise.y_at_witness) << "\n";
        return exit_disproved;
    }

    Stopwatch watch;
    std::optional<Certificate> certificate;
    SearchReport report;
    if (opt.form == "closure") {
        if (in.instance.laurent) {
            err << "error: --form closure uses the Polya path, which is non-Laurent\n";
            return exit_usage;
        }
        ClosureSearchResult search = closure_from_polya(in.instance, in.x, in.y, ctx, opt.kmax);
        report = search.report;
        if (search.certificate) certificate = *search.certificate;
    } else if (opt.form == "asymptotic") {
        AsymptoticCaps caps;
        caps.n_max = opt.nmax;
        AsymptoticSearchResult search = asymptotic_search(in.instance, in.x, in.y, ctx, caps);
        report = search.report;
        if (search.certificate) certificate = *search.certificate;
    } else {
        err << "error: unknown --form '" << opt.form << "' (closure|asymptotic|ideal)\n";
        return exit_usage;
    }
    err << "search finished in " << watch.elapsed_ms() << " ms\n";

    if (!certificate) {
        out << "inconclusive: caps exhausted (" << report.failure << ")\n";
        return exit_inconclusive;
    }

    CertificateDocument doc;
    doc.instance = in.instance;
    doc.certificate = *certificate;
    doc.x = in.x;
    doc.y = in.y;
    doc.context = ctx;
    doc.report = report;
    auto params = base_parameters(opt);
    params["form"] = opt.form;
    params["x"] = format_polynomial(in.x);
    params["y"] = format_polynomial(in.y);
    params["kmax"] = std::to_string(opt.kmax);
    params["nmax"] = std::to_string(opt.nmax);
    doc.manifest = make_manifest("certify", std::move(params));

    VerifyOutcome outcome = verify_document(doc);
    if (!outcome.accepted()) throw std::logic_error("freshly searched certificate failed: " + outcome.detail);
    write_document(doc, opt.out_path.empty() ? "certificate.json" : opt.out_path, out);
    out << "verified: accepted\n";
    return exit_ok;
}

int certify_ideal(const CommonOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.f_text.empty() || opt.ideal_texts.empty())
        throw CLI::RequiredError("--form ideal requires --f and at least one --ideal");
    Polynomial f = parse_polynomial_expr(opt.f_text);
    int d = std::max(1, f.dimension());
    std::vector<Polynomial> gens;
    for (const auto& text : opt.ideal_texts) {
        Polynomial g = parse_polynomial_expr(text);
        d = std::max(d, g.dimension());
        gens.push_back(std::move(g));
    }
    f = f.extended(d);
    for (auto& g : gens) g = g.extended(d);
    BoundContext ctx{rational_flag(opt.r_text, "--r"), rational_flag(opt.eps_text, "--eps")};

    if (auto witness = ideal_pointwise_witness(f, gens, make_config(opt))) {
        out << "disproved: f < 0 on the variety at s = " << format_point(*witness) << "\n";
        out << "f(s) = " << rational_to_string(f.evaluate(*witness)) << "\n";
        return exit_disproved;
    }

    IdealCaps caps;
    caps.deg_h = opt.deg_h;
    caps.deg_mult = opt.deg_mult;
    if (!opt.delta_text.empty()) caps.delta_schedule = {rational_flag(opt.delta_text, "--delta")};

    Stopwatch watch;
    IdealSearchResult search = ideal_search(f, gens, ctx, caps);
    err << "feasibility search finished in " << watch.elapsed_ms() << " ms\n";
    if (!search.certificate) {
        out << "inconclusive: " << search.report.failure << "\n";
        return exit_inconclusive;
    }

    CertificateDocument doc;
    doc.instance = SemiringInstance(d, CoeffDomain::nonneg_rationals, false, false);
    doc.certificate = *search.certificate;
    doc.f = f;
    doc.context = ctx;
    doc.report = search.report;
    auto params = base_parameters(opt);
    params["form"] = "ideal";
    params["f"] = format_polynomial(f);
    for (std::size_t i = 0; i < gens.size(); ++i)
        params["ideal." + std::to_string(i)] = format_polynomial(gens[i]);
    params["deg_h"] = std::to_string(opt.deg_h);
    params["deg_mult"] = std::to_string(opt.deg_mult);
    doc.manifest = make_manifest("certify", std::move(params));

    VerifyOutcome outcome = verify_document(doc);
    if (!outcome.accepted()) throw std::logic_error("freshly searched certificate failed: " + outcome.detail);
    write_document(doc, opt.out_path.empty() ? "certificate.json" : opt.out_path, out);
    out << "verified: accepted\n";
    return exit_ok;
}

int cmd_certify(const CommonOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.form == "ideal") return certify_ideal(opt, out, err);
    return certify_order_pair(opt, out, err);
}

int cmd_verify(const CommonOptions& opt, std::ostream& out, std::ostream& err) {
    std::ifstream file(opt.certificate_path, std::ios::binary);
    if (!file) {
        err << "error: cannot read '" << opt.certificate_path << "'\n";
        return exit_usage;
    }
    CertificateDocument doc = load_certificate(file);
    VerifyOutcome outcome = verify_document(doc);
    switch (outcome.status) {
        case VerifyStatus::accepted:
            out << "accepted: " << form_name(doc.certificate) << " certificate\n";
            return exit_ok;
        case VerifyStatus::rejected:
            out << "rejected: " << outcome.detail << "\n";
            return exit_disproved;
        case VerifyStatus::invalid:
            out << "invalid certificate: " << outcome.detail << "\n";
            return exit_invalid_certificate;
    }
    return exit_usage;
}

int cmd_rate(const CommonOptions& opt, std::ostream& out, std::ostream& err) {
    ParsedPair in = parse_pair(opt, err);
    const Polynomial one = Polynomial::one(in.instance.dimension);
    if (!coeffwise_geq(in.x, one) || !coeffwise_geq(in.y, one)) {
        err << "error: rate requires x >= 1 and y >= 1 coefficientwise\n";
        return exit_usage;
    }
    Stopwatch watch;
    RateResult result = rate(in.instance, in.x, in.y, make_config(opt));
    err << "rate computed in " << watch.elapsed_ms() << " ms\n";
    std::ostringstream value;
    if (std::isinf(result.value))
        value << "inf";
    else
        value << std::setprecision(12) << result.value;
    out << "rate: " << value.str() << "\n";
    out << "argmin: " << format_point(result.argmin) << "\n";
    out << "resolution: " << result.resolution << "\n";
    if (!opt.out_path.empty()) {
        std::ostringstream exact_value;
        exact_value << std::setprecision(17) << result.value;
        nlohmann::json report;
        report["value"] = std::isinf(result.value) ? "inf" : exact_value.str();
        report["argmin"] = point_json(result.argmin);
        report["resolution"] = result.resolution;
        report["exact"] = result.exact;
        auto params = base_parameters(opt);
        params["x"] = format_polynomial(in.x);
        params["y"] = format_polynomial(in.y);
        write_report(opt.out_path, make_manifest("rate", std::move(params)), std::move(report),
                     out);
    }
    return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"order certificates for preordered polynomial semirings", "polycert"};
    app.require_subcommand(1);
    CommonOptions opt;

    auto add_instance_flags = [&](CLI::App* sub) {
        sub->add_option("--domain", opt.domain, "coefficient domain: N or Q+")
            ->check(CLI::IsMember({"N", "Q+"}));
        sub->add_flag("--laurent", opt.laurent, "Laurent exponents allowed");
        sub->add_flag("--prime", opt.prime,
                      "restrict membership to strictly positive constant coefficient");
    };
    auto add_context_flags = [&](CLI::App* sub) {
        sub->add_option("--r", opt.r_text, "context scalar r (rational)");
        sub->add_option("--eps", opt.eps_text, "context epsilon > 0 (rational)");
    };

    CLI::App* check = app.add_subcommand("check", "sample x - y over the orthant exactly");
    check->add_option("--x", opt.x_text, "left polynomial")->required();
    check->add_option("--y", opt.y_text, "right polynomial")->required();
    check->add_option("--grid", opt.grid, "compactified samples per axis");
    check->add_option("--seed", opt.seed, "recorded in the manifest; sampling is deterministic");
    check->add_option("--out", opt.out_path, "write a JSON report with the run manifest");
    add_instance_flags(check);

    CLI::App* certify = app.add_subcommand("certify", "search for an order certificate");
    certify->add_option("--x", opt.x_text, "left polynomial");
    certify->add_option("--y", opt.y_text, "right polynomial");
    certify->add_option("--f", opt.f_text, "polynomial for --form ideal");
    certify->add_option("--ideal", opt.ideal_texts, "ideal generator (repeatable)");
    certify->add_option("--form", opt.form, "closure|asymptotic|ideal");
    certify->add_option("--delta", opt.delta_text, "ideal search: fixed Polya gap delta");
    certify->add_option("--kmax", opt.kmax, "closure search: Polya exponent cap");
    certify->add_option("--nmax", opt.nmax, "asymptotic search: power cap");
    certify->add_option("--deg-h", opt.deg_h, "ideal search: degree cap for h");
    certify->add_option("--deg-mult", opt.deg_mult, "ideal search: degree cap for multipliers");
    certify->add_option("--grid", opt.grid, "compactified samples per axis");
    certify->add_option("--seed", opt.seed, "recorded in the manifest; search is deterministic");
    certify->add_option("--out", opt.out_path, "certificate output path");
    add_context_flags(certify);
    add_instance_flags(certify);

    CLI::App* verify = app.add_subcommand("verify", "verify a certificate file");
    verify->add_option("certificate", opt.certificate_path, "certificate file")->required();

    CLI::App* rate_cmd = app.add_subcommand("rate", "regularized rate inf log x(s)/log y(s)");
    rate_cmd->add_option("--x", opt.x_text, "left polynomial")->required();
    rate_cmd->add_option("--y", opt.y_text, "right polynomial")->required();
    rate_cmd->add_option("--grid", opt.grid, "compactified samples per axis");
    rate_cmd->add_option("--seed", opt.seed, "recorded in the manifest; sampling is deterministic");
    rate_cmd->add_option("--out", opt.out_path, "write a JSON report with the run manifest");
    add_instance_flags(rate_cmd);

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (app.got_subcommand(check)) return cmd_check(opt, out, err);
        if (app.got_subcommand(certify)) return cmd_certify(opt, out, err);
        if (app.got_subcommand(verify)) return cmd_verify(opt, out, err);
        if (app.got_subcommand(rate_cmd)) return cmd_rate(opt, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const CertificateFormatError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace polycert::cli
