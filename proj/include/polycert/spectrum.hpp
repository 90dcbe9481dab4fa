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

#include <optional>
#include <string>
#include <vector>

#include "polycert/semiring.hpp"

namespace polycert {

/// A point of the nonnegative orthant realizing the monotone homomorphism
/// "evaluate at s". Strictly positive coordinates in Laurent mode.
using EvaluationPoint = std::vector<Rational>;

/// "(s1, s2, ...)" with exact rational coordinates.
std::string format_point(const EvaluationPoint& p);

/// Sampling grid: a uniform grid on [0, box_max] per axis plus the
/// compactified points s = t/(1-t), t = j/compact_per_axis, which reach both
/// ends of the half line with finitely many samples.
struct SampleConfig {
    int compact_per_axis = 64;
    int box_per_axis = 17;
    Rational box_max = 4;
    int refine_rounds = 3;  // rate-only local refinement

    std::string describe() const;
};

struct PointwiseResult {
    /// true: x - y >= 0 held at every sample (evidence, not a proof).
    bool holds_on_samples = false;
    /// An exact disproof of "f(x) >= f(y) for all monotone homomorphisms".
    std::optional<EvaluationPoint> counterexample;
    Rational x_at_witness;
    Rational y_at_witness;
    /// Smallest sampled value of x - y and where it occurred.
    Rational min_gap;
    EvaluationPoint min_gap_point;
    long samples = 0;
};

/// Exact evaluation of x - y over the sample grid; the first (odometer
/// order) strictly negative sample is returned as counterexample.
PointwiseResult pointwise_check(const SemiringInstance& inst, const Polynomial& x,
                                const Polynomial& y, const SampleConfig& config = {});

/// Grid point with every generator exactly zero and f exactly negative:
/// an exact witness that f < 0 somewhere on V_+(gens).
std::optional<EvaluationPoint> ideal_pointwise_witness(const Polynomial& f,
                                                       const std::vector<Polynomial>& gens,
                                                       const SampleConfig& config = {});

struct RateResult {
    /// min over samples of log x(s) / log y(s), conventions 0/0 := inf and
    /// c/0 := inf; may be +infinity.
    double value = 0;
    EvaluationPoint argmin;
    std::string resolution;
    /// true when the value came from the exact constant-ratio path.
    bool exact = false;
};

/// Numeric estimate of the regularized rate inf_f log f(x) / log f(y).
/// Requires x >= 1 and y >= 1 coefficientwise. When x^b = y^a exactly (the
/// candidate a/b is fixed by the degree ratio) the value a/b is returned
/// without sampling.
RateResult rate(const SemiringInstance& inst, const Polynomial& x, const Polynomial& y,
                const SampleConfig& config = {});

}  // namespace polycert
