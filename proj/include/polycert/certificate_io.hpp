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

#include <iosfwd>
#include <optional>

#include "polycert/certificates.hpp"
#include "polycert/search.hpp"

namespace polycert {

/// Thrown when a certificate document cannot be decoded at all (bad JSON,
/// missing fields, malformed polynomial/rational text). Distinct from a
/// decodable document that fails verification.
class CertificateFormatError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Everything a rerun needs to reproduce an output byte for byte: the
/// subcommand, the normalized parameters, and the tool version. Timing is
/// deliberately not part of it.
struct RunManifest {
    std::string command;
    std::map<std::string, std::string> parameters;
    std::string tool_version;

    bool operator==(const RunManifest&) const = default;
};

/// The on-disk certificate document: instance, inputs, context, payload,
/// and optional run metadata. Serialization is lossless; all rationals
/// travel as "a/b" strings.
struct CertificateDocument {
    int version = 1;
    SemiringInstance instance;
    Certificate certificate;
    // Inputs: x/y for the order certificates, f for ideal certificates.
    Polynomial x;
    Polynomial y;
    Polynomial f;
    Rational lambda = 0;  // rate witnesses only
    BoundContext context;
    std::optional<SearchReport> report;
    std::optional<RunManifest> manifest;
};

std::string serialize_certificate(const CertificateDocument& doc);
CertificateDocument deserialize_certificate(const std::string& text);

void save_certificate(std::ostream& os, const CertificateDocument& doc);
CertificateDocument load_certificate(std::istream& is);

/// Dispatches to the variant's verifier using the document's own inputs.
VerifyOutcome verify_document(const CertificateDocument& doc);

}  // namespace polycert
