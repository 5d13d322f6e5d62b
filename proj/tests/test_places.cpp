/*
   Copyright 2026 The drinfeld-heights Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace drinfeld;
using namespace testutil;

TEST_CASE("valuation examples") {
    auto F3 = make_field(3);
    CHECK(valuation(K(F3, "t"), Place::infinite()) == -1);
    CHECK(valuation(K(F3, "(t^2-1)/t"), V(F3, "t-1")) == 1);
    CHECK(valuation(K(F3, "1"), V(F3, "t")) == 0);
    CHECK(valuation(K(F3, "1"), Place::infinite()) == 0);
    CHECK(valuation(RatK(F3), Place::infinite()) == kValuationOfZero);
}

TEST_CASE("log_abs examples") {
    auto F2 = make_field(2);
    CHECK(log_abs(K(F2, "t"), Place::infinite()) == 1);
    CHECK(log_abs(K(F2, "1/t"), V(F2, "t")) == 1);
    CHECK(log_abs(K(F2, "t^2+t+1"), V(F2, "t^2+t+1")) == -2);
    CHECK(log_abs(RatK(F2), V(F2, "t")) == kLogOfZero);
}

TEST_CASE("product formula examples") {
    auto F3 = make_field(3);
    auto F7 = make_field(7);
    CHECK(product_formula_check(K(F3, "t")) == 0);
    CHECK(product_formula_check(K(F7, "5")) == 0);
    CHECK(product_formula_check(K(F3, "(t^2-1)/t")) == 0);
    CHECK_THROWS_AS(product_formula_check(RatK(F3)), DomainError);
}

TEST_CASE("support examples") {
    auto F2 = make_field(2);
    auto s = support(K(F2, "t"));
    REQUIRE(s.size() == 2);
    CHECK(s[0].first == V(F2, "t"));
    CHECK(s[0].second == 1);
    CHECK(s[1].first == Place::infinite());
    CHECK(s[1].second == -1);
    CHECK(support(K(F2, "1")).empty());
    auto s2 = support(K(F2, "(t+1)^2/t"));
    REQUIRE(s2.size() == 3);
    CHECK(s2[0].first == V(F2, "t+1"));
    CHECK(s2[0].second == 2);
    CHECK(s2[1].first == V(F2, "t"));
    CHECK(s2[1].second == -1);
    CHECK(s2[2].first == Place::infinite());
    CHECK(s2[2].second == -1);
}

TEST_CASE("enumerate_places examples") {
    auto F2 = make_field(2);
    auto p = enumerate_places(F2, 1, true);
    REQUIRE(p.size() == 3);
    CHECK(p[0].is_infinite());
    CHECK(format_place(p[1]) == "t");
    CHECK(format_place(p[2]) == "t+1");
    auto p2 = enumerate_places(F2, 2, false);
    REQUIRE(p2.size() == 3);
    CHECK(format_place(p2[2]) == "t^2+t+1");
    auto F3 = make_field(3);
    auto p3 = enumerate_places(F3, 1, true);
    REQUIRE(p3.size() == 4);
    CHECK(format_place(p3[3]) == "t+2");
}

TEST_CASE("place text format") {
    auto F3 = make_field(3);
    CHECK(format_place(Place::infinite()) == "inf");
    CHECK(parse_place(F3, "inf") == Place::infinite());
    CHECK(format_place(V(F3, "t^2+1")) == "t^2+1");
    CHECK_THROWS_AS(V(F3, "t^2-1"), DomainError);
    CHECK_THROWS_AS(V(F3, "2*t"), DomainError);
}

TEST_CASE("product formula on random elements") {
    std::mt19937_64 rng(2);
    for (std::uint32_t q : {2u, 3u, 5u}) {
        auto F = make_field(q);
        for (int i = 0; i < 200; ++i) CHECK(product_formula_check(random_ratk(rng, F, 8, true)) == 0);
    }
}

TEST_CASE("ultrametric and multiplicative laws") {
    std::mt19937_64 rng(3);
    auto F = make_field(3);
    auto probe = enumerate_places(F, 2, true);
    for (int i = 0; i < 200; ++i) {
        RatK x = random_ratk(rng, F, 5, true), y = random_ratk(rng, F, 5, true);
        for (const auto& v : probe) {
            const LogAbs a = log_abs(x, v), b = log_abs(y, v);
            CHECK(log_abs(x * y, v) == a + b);
            const RatK s = x + y;
            if (s.is_zero()) continue;
            CHECK(log_abs(s, v) <= std::max(a, b));
            if (a != b) CHECK(log_abs(s, v) == std::max(a, b));
        }
    }
}

TEST_CASE("support is exactly the set of places with nonzero log") {
    std::mt19937_64 rng(4);
    auto F = make_field(2);
    auto probe = enumerate_places(F, 6, true);
    for (int i = 0; i < 100; ++i) {
        RatK x = random_ratk(rng, F, 6, true);
        auto s = support(x);
        for (const auto& v : probe) {
            bool listed = false;
            for (auto& [w, val] : s)
                if (w == v) {
                    listed = true;
                    CHECK(val == valuation(x, v));
                }
            CHECK(listed == (log_abs(x, v) != 0));
        }
    }
}
