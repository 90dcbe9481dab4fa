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

#include "polycert/rational.hpp"

using namespace polycert;

TEST_CASE("rational parsing accepts integers and fractions") {
    CHECK(rational_from_string("3") == 3);
    CHECK(rational_from_string("-7") == -7);
    CHECK(rational_from_string("3/4") == Rational(3) / 4);
    CHECK(rational_from_string("6/4") == Rational(3) / 2);  // canonicalized
    CHECK(rational_to_string(rational_from_string("6/4")) == "3/2");
    CHECK(rational_to_string(Rational(5)) == "5");
}

TEST_CASE("rational parsing rejects garbage") {
    CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("1/"), std::invalid_argument);
}

TEST_CASE("rational powering and ceiling are exact") {
    CHECK(rational_pow(Rational(3) / 2, 4) == Rational(81) / 16);
    CHECK(rational_pow(Rational(7), 0) == 1);
    CHECK(rational_pow(Rational(0), 3) == 0);
    CHECK(rational_ceil(Rational(7) / 2) == 4);
    CHECK(rational_ceil(Rational(-7) / 2) == -3);
    CHECK(rational_ceil(Rational(4)) == 4);
}
