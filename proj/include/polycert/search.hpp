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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polycert/certificates.hpp"
#include "polycert/feasibility.hpp"

namespace polycert {

/// Caps used, iteration counts and, on failure, the last offending
/// coefficient. Serialized alongside certificates. Timing never enters the
/// artifact; identical runs must produce identical bytes.
struct SearchReport {
    std::map<std::string, std::string> caps;
    long iterations = 0;
    std::string failure;  // empty on success

    bool operator==(const SearchReport&) const = default;
};

struct PolyaQuery {
    Polynomial q;       // signed difference x - y; nonzero
    Rational delta = 0; // the Polya gap; >= 0
    int k_max = 60;
};

struct PolyaResult {
    std::optional<int> k;
    SearchReport report;
};

/// Minimal k <= k_max with u^k (q + delta u^{deg q}) coefficientwise
/// nonnegative, u = 1 + sum X_i.
PolyaResult polya_search(const PolyaQuery& query);

struct ClosureSearchResult {
    std::optional<ClosureCertificate> certificate;
    SearchReport report;
};

/// Polya-backed closure certificate for x >= y: q = x - y,
/// delta = eps / max(1, r^{deg q}), p = m * delta * X^{deg q}, z = u^k, with
/// m clearing denominators in N instances. Any returned certificate passes
/// verify_closure.
ClosureSearchResult closure_from_polya(const SemiringInstance& inst, const Polynomial& x,
                                       const Polynomial& y, const BoundContext& ctx,
                                       int k_max = 60);

struct AsymptoticCaps {
    int n_max = 12;
    int j_max = 8;
    long c_max = 256;
};

struct AsymptoticSearchResult {
    std::optional<AsymptoticCertificate> certificate;
    SearchReport report;
};

/// Enumerates p = c X^j and the minimal admissible m in the fixed order
/// (n ascending, then j, then c, then m) and returns the first certificate
/// accepted by verify_asymptotic.
AsymptoticSearchResult asymptotic_search(const SemiringInstance& inst, const Polynomial& x,
                                         const Polynomial& y, const BoundContext& ctx,
                                         const AsymptoticCaps& caps = {});

struct IdealCaps {
    int deg_h = -1;     // < 0: default 2 * deg f
    int deg_mult = -1;  // < 0: default 2 * deg f
    /// deltas to try; empty: eps/(1+r)^{deg f} halved twice. Entries with
    /// delta (1 + r d)^{deg f} > eps are skipped.
    std::vector<Rational> delta_schedule;
};

struct IdealSearchResult {
    std::optional<IdealCertificate> certificate;
    SearchReport report;
};

/// Bounded-degree exact linear feasibility search for an ideal-constrained
/// certificate of f >= 0 on V_+(gens): fixes p = delta X^{deg f}, solves for
/// h (nonnegative, sum of coefficients 1) and one signed multiplier per
/// generator. Exhaustion is inconclusive, never a negative proof.
IdealSearchResult ideal_search(const Polynomial& f, const std::vector<Polynomial>& gens,
                               const BoundContext& ctx, const IdealCaps& caps = {});

}  // namespace polycert
