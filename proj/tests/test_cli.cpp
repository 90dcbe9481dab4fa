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

#include <cstdio>
#include <fstream>
#include <sstream>

#include "polycert/certificate_io.hpp"
#include "polycert/cli.hpp"

using namespace polycert;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempFile {
    explicit TempFile(std::string name) : path("cli_test_" + std::move(name)) {}
    ~TempFile() { std::remove(path.c_str()); }
    std::string path;
};

}  // namespace

TEST_CASE("check: exit codes for hold, counterexample and parse error") {
    RunResult holds = run({"check", "--x", "2+X1+2*X1^2", "--y", "1+2*X1+X1^2"});
    CHECK(holds.code == cli::exit_ok);
    CHECK(holds.out.find("holds_on_samples") != std::string::npos);

    RunResult witness = run({"check", "--x", "1+2*X1", "--y", "2+X1"});
    CHECK(witness.code == cli::exit_disproved);
    CHECK(witness.out.find("s = (0)") != std::string::npos);

    RunResult malformed = run({"check", "--x", "1+", "--y", "1"});
    CHECK(malformed.code == cli::exit_usage);
    CHECK(malformed.err.find("position") != std::string::npos);

    CHECK(run({"check", "--x", "1+X1"}).code == cli::exit_usage);  // missing --y
    CHECK(run({"frobnicate"}).code == cli::exit_usage);
}

TEST_CASE("certify + verify round trip through a file") {
    TempFile file("closure.json");
    RunResult certify = run({"certify", "--form", "closure", "--x", "2+X1+2*X1^2", "--y",
                             "1+2*X1+X1^2", "--r", "10", "--eps", "1/10", "--out", file.path});
    REQUIRE(certify.code == cli::exit_ok);
    CHECK(run({"verify", file.path}).code == cli::exit_ok);

    // tampering with the catalyst turns acceptance into a clean reject
    std::string text = slurp(file.path);
    const std::string z_field = "\"z\": \"1 + X1\"";
    auto at = text.find(z_field);
    REQUIRE(at != std::string::npos);
    text.replace(at, z_field.size(), "\"z\": \"1 + 2*X1\"");
    {
        std::ofstream rewrite(file.path, std::ios::binary);
        rewrite << text;
    }
    int tampered = run({"verify", file.path}).code;
    CHECK((tampered == cli::exit_disproved || tampered == cli::exit_invalid_certificate));

    // truncation is a deserialization error
    {
        std::ofstream rewrite(file.path, std::ios::binary);
        rewrite << text.substr(0, text.size() / 3);
    }
    CHECK(run({"verify", file.path}).code == cli::exit_usage);
    CHECK(run({"verify", "no_such_file.json"}).code == cli::exit_usage);
}

TEST_CASE("certify: disproved pairs exit 1 before any search") {
    RunResult r = run({"certify", "--form", "closure", "--x", "1", "--y", "2"});
    CHECK(r.code == cli::exit_disproved);
    CHECK(r.out.find("s = (0)") != std::string::npos);

    RunResult asymptotic = run({"certify", "--form", "asymptotic", "--x", "1", "--y", "2"});
    CHECK(asymptotic.code == cli::exit_disproved);
}

TEST_CASE("certify: only searchable forms are accepted") {
    CHECK(run({"certify", "--form", "catalytic", "--x", "1+X1", "--y", "1+X1"}).code ==
          cli::exit_usage);
    CHECK(run({"certify", "--form", "closure", "--laurent", "--x", "1+X1+X1^-1", "--y",
               "1+X1"}).code == cli::exit_usage);
}

TEST_CASE("certify: inconclusive searches exit 3") {
    // x - y = (X1-X2)^2 vanishes at X1 = X2, and the automatic delta is far
    // too small to lift it within a 5-step cap.
    RunResult r = run({"certify", "--form", "closure", "--x", "1/100+X1^2+X2^2", "--y",
                       "1/100+2*X1*X2", "--r", "100", "--eps", "1/100", "--kmax", "5"});
    CHECK(r.code == cli::exit_inconclusive);
    CHECK(r.out.find("inconclusive") != std::string::npos);
}

TEST_CASE("certify: ideal form") {
    TempFile file("ideal.json");
    RunResult certify = run({"certify", "--form", "ideal", "--f", "X1+X2-2", "--ideal",
                             "X1*X2-1", "--r", "1", "--eps", "1", "--deg-h", "6", "--deg-mult",
                             "6", "--out", file.path});
    REQUIRE(certify.code == cli::exit_ok);
    CHECK(run({"verify", file.path}).code == cli::exit_ok);

    RunResult disproved =
        run({"certify", "--form", "ideal", "--f", "-1", "--ideal", "X1*X2-1"});
    CHECK(disproved.code == cli::exit_disproved);
    CHECK(disproved.out.find("disproved: f < 0 on the variety") != std::string::npos);
}

TEST_CASE("rate: values and precondition") {
    RunResult exact = run({"rate", "--x", "(1+X1)^2", "--y", "1+X1"});
    CHECK(exact.code == cli::exit_ok);
    CHECK(exact.out.find("rate: 2\n") != std::string::npos);

    RunResult tiny = run({"rate", "--x", "1+X1^2", "--y", "1+X1"});
    CHECK(tiny.code == cli::exit_ok);

    RunResult bad = run({"rate", "--x", "X1", "--y", "1+X1"});
    CHECK(bad.code == cli::exit_usage);
    CHECK(bad.err.find("x >= 1") != std::string::npos);
}

TEST_CASE("check and rate write manifest-bearing reports") {
    TempFile a("check_a.json"), b("check_b.json"), r("rate.json");
    std::vector<std::string> check_args = {"check", "--x", "2+X1+2*X1^2", "--y",
                                           "1+2*X1+X1^2", "--out", a.path};
    REQUIRE(run(check_args).code == cli::exit_ok);
    check_args.back() = b.path;
    REQUIRE(run(check_args).code == cli::exit_ok);
    std::string report = slurp(a.path);
    CHECK(report == slurp(b.path));
    CHECK(report.find("\"min_gap\": \"3/4\"") != std::string::npos);
    CHECK(report.find("\"tool_version\"") != std::string::npos);

    REQUIRE(run({"rate", "--x", "(1+X1)^2", "--y", "1+X1", "--out", r.path}).code ==
            cli::exit_ok);
    std::string rate_report = slurp(r.path);
    CHECK(rate_report.find("\"value\": \"2\"") != std::string::npos);
    CHECK(rate_report.find("\"exact\": true") != std::string::npos);
}

TEST_CASE("identical manifests produce byte-identical artifacts") {
    TempFile first("det_a.json"), second("det_b.json");
    std::vector<std::string> base = {"certify", "--form",  "closure", "--x", "2+X1+2*X1^2",
                                     "--y",     "1+2*X1+X1^2", "--r", "10",  "--eps", "1/10"};
    auto with_out = [&](const std::string& path) {
        auto args = base;
        args.push_back("--out");
        args.push_back(path);
        return args;
    };
    REQUIRE(run(with_out(first.path)).code == cli::exit_ok);
    REQUIRE(run(with_out(second.path)).code == cli::exit_ok);
    CHECK(slurp(first.path) == slurp(second.path));
}

TEST_CASE("certify exit 0 implies verify exit 0 on its own output") {
    TempFile file("chain.json");
    std::vector<std::vector<std::string>> runs = {
        {"certify", "--form", "closure", "--x", "(1+X1)^2", "--y", "1+2*X1", "--out", file.path},
        {"certify", "--form", "asymptotic", "--x", "2+X1+2*X1^2", "--y", "1+2*X1+X1^2", "--r",
         "1", "--eps", "1", "--out", file.path},
        {"certify", "--form", "ideal", "--f", "X1+X2+1", "--ideal", "X1*X2-1", "--out",
         file.path},
    };
    for (const auto& args : runs) {
        REQUIRE(run(args).code == cli::exit_ok);
        CHECK(run({"verify", file.path}).code == cli::exit_ok);
    }
}

TEST_CASE("laurent instances are reachable from the command line") {
    RunResult r = run({"check", "--laurent", "--x", "X1+X1^-1", "--y", "2"});
    CHECK(r.code == cli::exit_ok);
    RunResult rejected = run({"check", "--x", "X1+X1^-1", "--y", "2"});
    CHECK(rejected.code == cli::exit_usage);  // Laurent exponent without --laurent
}
