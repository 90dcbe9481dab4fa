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

#include <string>
#include <utility>
#include <vector>

#include "polycert/rational.hpp"

namespace polycert {

/// Exact rational linear feasibility system. Variables are declared up
/// front (optionally sign-constrained); constraints are linear equalities
/// or inequalities over the declared variables.
class FeasibilityProblem {
   public:
    using VarId = int;
    enum class Relation { eq, leq, geq };

    /// sum of coeff * var terms; repeated VarIds accumulate.
    using LinearExpr = std::vector<std::pair<VarId, Rational>>;

    struct Constraint {
        LinearExpr lhs;
        Relation rel;
        Rational rhs;
    };

    VarId add_variable(std::string name, bool nonnegative);
    void add_constraint(LinearExpr lhs, Relation rel, Rational rhs);

    int variable_count() const { return static_cast<int>(names_.size()); }
    const std::string& variable_name(VarId v) const { return names_.at(v); }
    bool is_nonnegative(VarId v) const { return nonneg_.at(v); }
    const std::vector<Constraint>& constraints() const { return constraints_; }

    /// Exact evaluation of a constraint's left-hand side.
    Rational lhs_value(const Constraint& c, const std::vector<Rational>& assignment) const;
    bool satisfied(const Constraint& c, const std::vector<Rational>& assignment) const;

   private:
    std::vector<std::string> names_;
    std::vector<bool> nonneg_;
    std::vector<Constraint> constraints_;
};

struct FeasibilityResult {
    bool feasible = false;
    /// Indexed by VarId; empty when infeasible.
    std::vector<Rational> assignment;
};

/// Exact Phase-I simplex with Bland's rule: deterministic pivoting, no
/// floating point anywhere, terminating on every input. Any feasible
/// assignment returned has been rechecked against every constraint.
FeasibilityResult solve_feasibility(const FeasibilityProblem& prob);

}  // namespace polycert
