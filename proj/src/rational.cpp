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

#include "polycert/rational.hpp"

#include <cctype>

namespace polycert {

namespace {

bool looks_like_rational(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (s[i] == '-' || s[i] == '+') ++i;
    if (i == s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    bool seen_slash = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '/') {
            if (seen_slash || i + 1 == s.size()) return false;
            seen_slash = true;
        } else if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
    if (!looks_like_rational(text))
        throw std::invalid_argument("not a rational literal: '" + text + "'");
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational literal: '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Rational rational_pow(const Rational& q, unsigned long n) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), q.get_num_mpz_t(), n);
    mpz_pow_ui(out.get_den_mpz_t(), q.get_den_mpz_t(), n);
    out.canonicalize();
    return out;
}

Rational rational_ceil(const Rational& q) {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(c);
}

}  // namespace polycert
