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

#include "polycert/parse.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace polycert {

namespace {

void align(Polynomial& a, Polynomial& b) {
    int d = std::max(a.dimension(), b.dimension());
    if (a.dimension() < d) a = a.extended(d);
    if (b.dimension() < d) b = b.extended(d);
}

class Parser {
   public:
    Parser(const std::string& text, bool allow_parens) : s_(text), parens_(allow_parens) {}

    Polynomial run(int min_dimension) {
        Polynomial p = parse_sum();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        if (p.dimension() < min_dimension) p = p.extended(min_dimension);
        return p;
    }

   private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    long parse_uint() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a digit");
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1'000'000'000L) fail("integer literal too large");
            ++pos_;
        }
        return v;
    }

    long parse_int() {
        bool neg = eat('-');
        long v = parse_uint();
        return neg ? -v : v;
    }

    Rational parse_coeff() {
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
            ++pos_;
        try {
            return rational_from_string(s_.substr(start, pos_ - start));
        } catch (const std::invalid_argument& e) {
            pos_ = start;
            fail(e.what());
        }
    }

    Polynomial parse_sum() {
        skip_ws();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Polynomial acc = parse_product();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            if (eat('+'))
                neg = false;
            else if (eat('-'))
                neg = true;
            else
                break;
            Polynomial t = parse_product();
            align(acc, t);
            if (neg)
                acc -= t;
            else
                acc += t;
        }
        return acc;
    }

    Polynomial parse_product() {
        Polynomial acc = parse_atom();
        for (;;) {
            skip_ws();
            if (!eat('*')) break;
            Polynomial f = parse_atom();
            align(acc, f);
            acc *= f;
        }
        return acc;
    }

    Polynomial parse_atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            if (!parens_) fail("parentheses are not part of the core grammar");
            ++pos_;
            Polynomial inner = parse_sum();
            skip_ws();
            if (!eat(')')) fail("expected ')'");
            skip_ws();
            if (eat('^')) {
                skip_ws();
                long e = parse_int();
                if (e < 0) fail("negative power of a parenthesized expression");
                inner = inner.pow(static_cast<unsigned>(e));
            }
            return inner;
        }
        if (c == 'X' || c == 'x') {
            ++pos_;
            long index = parse_uint();
            if (index < 1) fail("variable index must be >= 1");
            if (index > 64) fail("variable index exceeds the supported 64 variables");
            long exp = 1;
            std::size_t mark = pos_;
            skip_ws();
            if (eat('^')) {
                skip_ws();
                exp = parse_int();
                if (exp == 0) return Polynomial::one(static_cast<int>(index));
            } else {
                pos_ = mark;
            }
            if (std::abs(exp) > 100000) fail("exponent too large");
            return Polynomial::variable(static_cast<int>(index), static_cast<int>(index) - 1,
                                        static_cast<int>(exp));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(0, parse_coeff());
        fail("expected a coefficient, a variable, or '('");
    }

    const std::string& s_;
    bool parens_;
    std::size_t pos_ = 0;
};

void append_factors(std::ostream& os, const Exponents& e, bool with_leading_star) {
    bool first = !with_leading_star;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << '*';
        first = false;
        os << 'X' << (i + 1);
        if (e[i] != 1) os << '^' << e[i];
    }
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, int min_dimension) {
    return Parser(text, /*allow_parens=*/false).run(min_dimension);
}

Polynomial parse_polynomial_expr(const std::string& text, int min_dimension) {
    return Parser(text, /*allow_parens=*/true).run(min_dimension);
}

std::string format_polynomial(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rational mag = c;
        if (first) {
            if (c < 0) {
                os << '-';
                mag = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) mag = -c;
        }
        first = false;
        bool is_const = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        if (is_const) {
            os << rational_to_string(mag);
        } else if (mag != 1) {
            os << rational_to_string(mag);
            append_factors(os, e, /*with_leading_star=*/true);
        } else {
            append_factors(os, e, /*with_leading_star=*/false);
        }
    }
    return os.str();
}

}  // namespace polycert
