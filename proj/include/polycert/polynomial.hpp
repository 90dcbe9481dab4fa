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
#include <vector>

#include "polycert/rational.hpp"

namespace polycert {

/// Exponent vector of a monomial; entry i is the exponent of variable X{i+1}.
/// Negative entries encode Laurent monomials.
using Exponents = std::vector<int>;

/// Graded lexicographic monomial order: total degree first (over Laurent
/// exponents as well), then lexicographic with earlier variables first, so
/// X1 precedes X2 within one degree.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        long da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        return a > b;
    }
};

/// Immutable-after-construction multivariate (Laurent-)polynomial with exact
/// rational coefficients, kept in canonical form: no zero coefficients, all
/// exponent vectors of length dimension(), terms ordered graded-lex.
///
/// The type itself is signed; semiring membership (nonnegative coefficients,
/// constant-term restrictions) is checked by SemiringInstance.
class Polynomial {
   public:
    using TermMap = std::map<Exponents, Rational, GrlexLess>;

    explicit Polynomial(int dimension = 0) : dim_(check_dim(dimension)) {}

    static Polynomial constant(int dimension, const Rational& value);
    /// X{index+1}^exponent, 0-based index.
    static Polynomial variable(int dimension, int index, int exponent = 1);
    static Polynomial monomial(Exponents exponents, const Rational& coeff);
    static Polynomial one(int dimension) { return constant(dimension, 1); }

    int dimension() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Total degree; nullopt is the "minus infinity" degree of the zero
    /// polynomial. For Laurent polynomials this may be negative.
    std::optional<int> degree() const;

    /// max over terms of sum_i |e_i|; 0 for the zero polynomial.
    int support_radius() const;

    bool has_negative_exponent() const;
    bool all_coefficients_nonnegative() const;
    bool all_coefficients_integral() const;

    /// Coefficient of the given monomial; 0 when absent.
    Rational coefficient(const Exponents& exponents) const;
    Rational constant_term() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    bool operator==(const Polynomial& rhs) const = default;

    Polynomial pow(unsigned n) const;

    /// Same polynomial viewed in a larger ambient dimension (new trailing
    /// variables do not occur).
    Polynomial extended(int new_dimension) const;

    /// Exact evaluation at a point of the nonnegative orthant. Coordinates
    /// meeting a negative exponent must be strictly positive.
    Rational evaluate(const std::vector<Rational>& point) const;

    /// Adds one homogenizing variable as the new last slot and pads every
    /// term up to the total degree. Rejects Laurent input.
    Polynomial homogenized() const;

    /// Substitutes 1 for the last variable and drops it; inverse of
    /// homogenized() on its image.
    Polynomial dehomogenized() const;

   private:
    static int check_dim(int d);
    void insert_term(Exponents e, Rational c);

    int dim_;
    TermMap terms_;
};

/// true iff every coefficient of a - b is >= 0 (the coefficientwise preorder).
bool coeffwise_geq(const Polynomial& a, const Polynomial& b);

inline bool coeffwise_nonneg(const Polynomial& a) { return a.all_coefficients_nonnegative(); }

/// Checks, in exact arithmetic, the one-variable Laurent identity
///   (X + X^-1) z + (2/n) = 2 z + (1/n)(X^-n + X^n)
/// for z = sum_{j=-n..n} (1 - |j|/n) X^j. Holds for every n >= 1.
bool embezzlement_identity(int n);

}  // namespace polycert
