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

#include "polycert/feasibility.hpp"

#include <stdexcept>

namespace polycert {

FeasibilityProblem::VarId FeasibilityProblem::add_variable(std::string name, bool nonnegative) {
    names_.push_back(std::move(name));
    nonneg_.push_back(nonnegative);
    return static_cast<VarId>(names_.size()) - 1;
}

void FeasibilityProblem::add_constraint(LinearExpr lhs, Relation rel, Rational rhs) {
    for (const auto& [v, c] : lhs)
        if (v < 0 || v >= variable_count())
            throw std::invalid_argument("constraint references an undeclared variable");
    constraints_.push_back(Constraint{std::move(lhs), rel, std::move(rhs)});
}

Rational FeasibilityProblem::lhs_value(const Constraint& c,
                                       const std::vector<Rational>& assignment) const {
    Rational acc(0);
    for (const auto& [v, coeff] : c.lhs) acc += coeff * assignment.at(v);
    return acc;
}

bool FeasibilityProblem::satisfied(const Constraint& c,
                                   const std::vector<Rational>& assignment) const {
    Rational v = lhs_value(c, assignment);
    switch (c.rel) {
        case Relation::eq: return v == c.rhs;
        case Relation::leq: return v <= c.rhs;
        case Relation::geq: return v >= c.rhs;
    }
    return false;
}

namespace {

// Dense Phase-I tableau. Columns: structural columns (one per nonnegative
// variable, two per free variable), one slack per inequality row, one
// artificial per row, then the right-hand side.
class PhaseOneSimplex {
   public:
    explicit PhaseOneSimplex(const FeasibilityProblem& prob) : prob_(prob) {
        const int nvar = prob.variable_count();
        col_of_var_.resize(nvar);
        for (int v = 0; v < nvar; ++v) {
            col_of_var_[v] = ncols_;
            ncols_ += prob.is_nonnegative(v) ? 1 : 2;  // free v = v_pos - v_neg
        }
        structural_ = ncols_;
        for (const auto& c : prob.constraints())
            if (c.rel != FeasibilityProblem::Relation::eq) ++nslack_;
        ncols_ += nslack_;
        const int nrows = static_cast<int>(prob.constraints().size());
        artificial0_ = ncols_;
        ncols_ += nrows;

        rows_.assign(nrows, std::vector<Rational>(ncols_ + 1, Rational(0)));
        basis_.resize(nrows);
        int slack = 0;
        for (int i = 0; i < nrows; ++i) {
            const auto& c = prob.constraints()[i];
            auto& row = rows_[i];
            for (const auto& [v, coeff] : c.lhs) {
                row[col_of_var_[v]] += coeff;
                if (!prob.is_nonnegative(v)) row[col_of_var_[v] + 1] -= coeff;
            }
            if (c.rel == FeasibilityProblem::Relation::leq)
                row[structural_ + slack++] = 1;
            else if (c.rel == FeasibilityProblem::Relation::geq)
                row[structural_ + slack++] = -1;
            row[ncols_] = c.rhs;
            if (row[ncols_] < 0)
                for (auto& entry : row) entry = -entry;
            row[artificial0_ + i] = 1;
            basis_[i] = artificial0_ + i;
        }
    }

    bool run() {
        for (;;) {
            int entering = pick_entering();
            if (entering < 0) break;
            int leaving = pick_leaving(entering);
            if (leaving < 0) break;  // unbounded cannot happen in Phase I
            pivot(leaving, entering);
        }
        return objective() == 0;
    }

    std::vector<Rational> extract() const {
        std::vector<Rational> columns(ncols_, Rational(0));
        for (std::size_t i = 0; i < basis_.size(); ++i) columns[basis_[i]] = rows_[i][ncols_];
        std::vector<Rational> assignment(prob_.variable_count());
        for (int v = 0; v < prob_.variable_count(); ++v) {
            assignment[v] = columns[col_of_var_[v]];
            if (!prob_.is_nonnegative(v)) assignment[v] -= columns[col_of_var_[v] + 1];
        }
        return assignment;
    }

   private:
    Rational objective() const {
        Rational total(0);
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i] >= artificial0_) total += rows_[i][ncols_];
        return total;
    }

    // Reduced cost of column j for minimizing the sum of artificials:
    // r_j = c_j - sum over rows with artificial basic of T[i][j].
    Rational reduced_cost(int j) const {
        Rational r = j >= artificial0_ ? 1 : 0;
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i] >= artificial0_) r -= rows_[i][j];
        return r;
    }

    // Bland's rule: smallest-index column with negative reduced cost.
    int pick_entering() const {
        for (int j = 0; j < artificial0_; ++j)
            if (reduced_cost(j) < 0) return j;
        return -1;
    }

    int pick_leaving(int entering) const {
        int best = -1;
        Rational best_ratio(0);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rational& a = rows_[i][entering];
            if (a <= 0) continue;
            Rational ratio = rows_[i][ncols_] / a;
            if (best < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis_[i] < basis_[best])) {
                best = static_cast<int>(i);
                best_ratio = ratio;
            }
        }
        return best;
    }

    void pivot(int row, int col) {
        auto& prow = rows_[row];
        Rational inv = Rational(1) / prow[col];
        for (auto& entry : prow) entry *= inv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (static_cast<int>(i) == row) continue;
            const Rational factor = rows_[i][col];
            if (factor == 0) continue;
            for (int j = 0; j <= ncols_; ++j) rows_[i][j] -= factor * prow[j];
        }
        basis_[row] = col;
    }

    const FeasibilityProblem& prob_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<int> basis_;
    std::vector<int> col_of_var_;
    int ncols_ = 0;
    int structural_ = 0;
    int nslack_ = 0;
    int artificial0_ = 0;
};

}  // namespace

FeasibilityResult solve_feasibility(const FeasibilityProblem& prob) {
    if (prob.constraints().empty())
        return {true, std::vector<Rational>(prob.variable_count(), Rational(0))};
    PhaseOneSimplex simplex(prob);
    if (!simplex.run()) return {false, {}};
    FeasibilityResult result{true, simplex.extract()};
    for (const auto& c : prob.constraints())
        if (!prob.satisfied(c, result.assignment))
            throw std::logic_error("simplex returned an assignment violating a constraint");
    return result;
}

}  // namespace polycert
