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

#include "polycert/polynomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace polycert {

int Polynomial::check_dim(int d) {
    if (d < 0) throw std::invalid_argument("negative polynomial dimension");
    return d;
}

void Polynomial::insert_term(Exponents e, Rational c) {
    if (static_cast<int>(e.size()) != dim_)
        throw std::invalid_argument("exponent length does not match dimension");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(std::move(e), std::move(c));
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::constant(int dimension, const Rational& value) {
    Polynomial p(dimension);
    if (value != 0) p.terms_.emplace(Exponents(dimension, 0), value);
    return p;
}

Polynomial Polynomial::variable(int dimension, int index, int exponent) {
    if (index < 0 || index >= dimension) throw std::invalid_argument("variable index out of range");
    Polynomial p(dimension);
    if (exponent == 0) return one(dimension);
    Exponents e(dimension, 0);
    e[index] = exponent;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

Polynomial Polynomial::monomial(Exponents exponents, const Rational& coeff) {
    Polynomial p(static_cast<int>(exponents.size()));
    if (coeff != 0) p.terms_.emplace(std::move(exponents), coeff);
    return p;
}

std::optional<int> Polynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    // grlex order: the last term has maximal total degree
    const Exponents& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

int Polynomial::support_radius() const {
    int best = 0;
    for (const auto& [e, c] : terms_) {
        int r = 0;
        for (int x : e) r += std::abs(x);
        best = std::max(best, r);
    }
    return best;
}

bool Polynomial::has_negative_exponent() const {
    for (const auto& [e, c] : terms_)
        if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) return true;
    return false;
}

bool Polynomial::all_coefficients_nonnegative() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

bool Polynomial::all_coefficients_integral() const {
    for (const auto& [e, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

Rational Polynomial::coefficient(const Exponents& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Exponents(dim_, 0)); }

Polynomial Polynomial::operator-() const {
    Polynomial out(dim_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.dim_ != dim_) throw std::invalid_argument("dimension mismatch in +");
    for (const auto& [e, c] : rhs.terms_) insert_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.dim_ != dim_) throw std::invalid_argument("dimension mismatch in -");
    for (const auto& [e, c] : rhs.terms_) insert_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("dimension mismatch in *");
    Polynomial out(a.dim_);
    Exponents e(a.dim_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.dim_; ++i) e[i] = ea[i] + eb[i];
            out.insert_term(e, ca * cb);
        }
    }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
}

Polynomial Polynomial::pow(unsigned n) const {
    Polynomial result = one(dim_);
    Polynomial base = *this;
    while (n > 0) {
        if (n & 1u) result *= base;
        n >>= 1u;
        if (n > 0) base *= base;
    }
    return result;
}

Polynomial Polynomial::extended(int new_dimension) const {
    if (new_dimension < dim_) throw std::invalid_argument("extended() cannot shrink dimension");
    Polynomial out(new_dimension);
    for (const auto& [e, c] : terms_) {
        Exponents padded(e);
        padded.resize(new_dimension, 0);
        out.terms_.emplace(std::move(padded), c);
    }
    return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != dim_)
        throw std::invalid_argument("evaluation point has wrong dimension");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < dim_; ++i) {
            if (e[i] == 0) continue;
            if (point[i] == 0 && e[i] < 0)
                throw std::domain_error("zero coordinate with negative exponent");
            Rational p = rational_pow(point[i], static_cast<unsigned long>(std::abs(e[i])));
            if (e[i] > 0)
                term *= p;
            else
                term /= p;
        }
        total += term;
    }
    return total;
}

Polynomial Polynomial::homogenized() const {
    if (has_negative_exponent())
        throw std::invalid_argument("cannot homogenize a Laurent polynomial");
    Polynomial out(dim_ + 1);
    auto deg = degree();
    if (!deg) return out;
    for (const auto& [e, c] : terms_) {
        Exponents padded(e);
        int d = std::accumulate(e.begin(), e.end(), 0);
        padded.push_back(*deg - d);
        out.terms_.emplace(std::move(padded), c);
    }
    return out;
}

Polynomial Polynomial::dehomogenized() const {
    if (dim_ == 0) throw std::invalid_argument("no variable to dehomogenize");
    Polynomial out(dim_ - 1);
    for (const auto& [e, c] : terms_) {
        Exponents head(e.begin(), e.end() - 1);
        out.insert_term(std::move(head), c);
    }
    return out;
}

bool coeffwise_geq(const Polynomial& a, const Polynomial& b) {
    if (a.dimension() != b.dimension())
        throw std::invalid_argument("dimension mismatch in coefficientwise comparison");
    // every coefficient of a - b must be >= 0
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    GrlexLess less;
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && less(ia->first, ib->first))) {
            if (ia->second < 0) return false;
            ++ia;
        } else if (ia == ea || less(ib->first, ia->first)) {
            if (ib->second > 0) return false;
            ++ib;
        } else {
            if (ia->second < ib->second) return false;
            ++ia;
            ++ib;
        }
    }
    return true;
}

bool embezzlement_identity(int n) {
    if (n < 1) throw std::invalid_argument("embezzlement_identity requires n >= 1");
    const Rational inv_n = Rational(1) / Rational(n);
    Polynomial z(1);
    for (int j = -n; j <= n; ++j) {
        Rational w = Rational(1) - Rational(std::abs(j)) * inv_n;
        z += Polynomial::monomial({j}, w);
    }
    Polynomial x_plus_inv = Polynomial::monomial({1}, 1) + Polynomial::monomial({-1}, 1);
    Polynomial lhs = x_plus_inv * z + Polynomial::constant(1, 2 * inv_n);
    Polynomial rhs = Rational(2) * z +
                     inv_n * (Polynomial::monomial({-n}, 1) + Polynomial::monomial({n}, 1));
    return lhs == rhs;
}

}  // namespace polycert
