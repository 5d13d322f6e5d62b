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

#include "oracles.hpp"

using namespace drinfeld;
using namespace testutil;

namespace {

mpq_class Q(const char* s) { return mpq_class(s); }

}  // namespace

TEST_CASE("weil_height examples") {
    auto F2 = make_field(2);
    CHECK(weil_height(K(F2, "1")) == 0);
    CHECK(weil_height(K(F2, "t")) == 1);
    CHECK(weil_height(K(F2, "(t+1)^2/t")) == 2);
    CHECK(weil_height(RatK(F2)) == 0);
}

TEST_CASE("weil_height place sum equals closed form") {
    std::mt19937_64 rng(31);
    for (std::uint32_t q : {2u, 3u, 5u}) {
        auto F = make_field(q);
        for (int i = 0; i < 200; ++i) {
            RatK x = random_ratk(rng, F, 8);
            CHECK(weil_height(x) == weil_height_closed_form(x));
        }
    }
}

TEST_CASE("thresholds examples") {
    auto F3 = make_field(3);
    auto F2 = make_field(2);
    auto C3 = DrinfeldModule::carlitz(F3);
    CHECK(thresholds(C3, Place::infinite()).escape_log == Q("1/2"));
    CHECK_FALSE(thresholds(C3, Place::infinite()).contraction_log.has_value());
    auto th = thresholds(C3, V(F3, "t"));
    CHECK(th.escape_log == 0);
    REQUIRE(th.contraction_log.has_value());
    CHECK(*th.contraction_log == 0);
    CHECK(thresholds(DrinfeldModule::carlitz(F2), Place::infinite()).escape_log == 1);
}

TEST_CASE("local_canonical_height examples") {
    auto F3 = make_field(3);
    auto F2 = make_field(2);
    auto C3 = DrinfeldModule::carlitz(F3);
    auto r = local_canonical_height(C3, K(F3, "1"), Place::infinite());
    CHECK(r.exact());
    CHECK(r.value == Q("1/3"));
    CHECK(r.iterations_used == 1);
    auto g = local_canonical_height(C3, K(F3, "1/t"), V(F3, "t"));
    CHECK(g.exact());
    CHECK(g.value == 1);
    auto z = local_canonical_height(DrinfeldModule::carlitz(F2), K(F2, "1"), Place::infinite());
    CHECK(z.exact());
    CHECK(z.value == 0);
}

TEST_CASE("canonical_height examples") {
    auto F3 = make_field(3);
    auto F2 = make_field(2);
    auto C3 = DrinfeldModule::carlitz(F3);
    auto h1 = canonical_height(C3, K(F3, "1"));
    CHECK(h1.value == Q("1/3"));
    CHECK(h1.certainty == Certainty::Exact);
    auto ht = canonical_height(C3, K(F3, "t"));
    CHECK(ht.value == 1);
    CHECK(ht.certainty == Certainty::Exact);
    auto h0 = canonical_height(DrinfeldModule::carlitz(F2), K(F2, "1"));
    CHECK(h0.value == 0);
    CHECK(h0.certainty == Certainty::Exact);
}

TEST_CASE("naive_height_estimate examples") {
    auto F3 = make_field(3);
    auto C3 = DrinfeldModule::carlitz(F3);
    CHECK(naive_height_estimate(C3, K(F3, "1"), 2) == Q("1/3"));
    CHECK(naive_height_estimate(C3, RatK(F3), 4) == 0);
    CHECK(naive_height_estimate(C3, K(F3, "t"), 1) == 1);
    CHECK_THROWS_AS(naive_height_estimate(C3, K(F3, "t"), 12, 1000), ResourceError);
}

TEST_CASE("in_filled_julia examples") {
    auto F3 = make_field(3);
    auto F2 = make_field(2);
    CHECK(in_filled_julia(DrinfeldModule::carlitz(F3), K(F3, "1"), Place::infinite()) == JuliaMembership::Outside);
    CHECK(in_filled_julia(DrinfeldModule::carlitz(F2), K(F2, "1"), Place::infinite()) == JuliaMembership::Inside);
    CHECK(in_filled_julia(DrinfeldModule::carlitz(F3), RatK(F3), V(F3, "t")) == JuliaMembership::Inside);
}

TEST_CASE("log_distance_ratio examples") {
    auto F3 = make_field(3);
    auto C3 = DrinfeldModule::carlitz(F3);
    CHECK(log_distance_ratio(C3, K(F3, "1"), K(F3, "1"), A(F3, "t"), Place::infinite()) == Q("1/3"));
    CHECK(log_distance_ratio(C3, K(F3, "1"), K(F3, "1"), A(F3, "t^2"), Place::infinite()) == Q("1/3"));
    CHECK(log_distance_ratio(C3, K(F3, "1"), K(F3, "0"), A(F3, "1"), V(F3, "t+1")) == 0);
    CHECK_THROWS_AS(log_distance_ratio(C3, K(F3, "1"), K(F3, "1"), A(F3, "1"), Place::infinite()), ExceptionalPoint);
}

TEST_CASE("denominator_bound_check examples") {
    auto F3 = make_field(3);
    auto F2 = make_field(2);
    auto C3 = DrinfeldModule::carlitz(F3);
    CHECK(denominator_bound_check(C3, {K(F3, "1/t"), K(F3, "1/t^2"), K(F3, "t")}, V(F3, "t")));
    CHECK(denominator_bound_check(DrinfeldModule::carlitz(F2), {K(F2, "1"), K(F2, "t+1")}, Place::infinite()));
    CHECK(denominator_bound_check(C3, {K(F3, "1")}, Place::infinite()));
}

TEST_CASE("bad reduction module gives a status for every place") {
    auto F2 = make_field(2);
    auto M = DrinfeldModule::from_strings(F2, {"t", "t"});
    auto r = local_canonical_height(M, K(F2, "1/t"), V(F2, "t"));
    CHECK(r.value >= 0);
    if (r.exact()) CHECK(denominator_bound(M, V(F2, "t"), r) % r.value.get_den() == 0);
}

TEST_CASE("canonical height agrees with the naive oracle") {
    std::mt19937_64 rng(41);
    std::vector<DrinfeldModule> mods = {DrinfeldModule::carlitz(make_field(2)), DrinfeldModule::carlitz(make_field(3)),
                                        DrinfeldModule::from_strings(make_field(2), {"t", "1", "1"}),
                                        DrinfeldModule::from_strings(make_field(3), {"t", "t", "1"})};
    int exact = 0;
    for (const auto& M : mods) {
        const int n = M.rank() == 1 ? 4 : 2;
        for (int i = 0; i < 15; ++i) {
            RatK x = random_ratk(rng, M.field(), 2);
            auto h = canonical_height(M, x);
            const mpq_class est = naive_height_oracle(M, x, n);
            CHECK(est == naive_height_estimate(M, x, n));
            // |h(phi_{t^n} x)/q^(dn) - hhat(x)| <= C/q^(dn) with C the
            // Weil-height scale of x plus a constant for the coefficients.
            mpq_class bound(mpz_class(2 + weil_height(x).get_num()), ipow(M.q(), std::uint64_t(M.rank()) * n));
            bound.canonicalize();
            CHECK(est >= h.value - bound);
            CHECK(est <= h.upper + bound);
            if (h.certainty == Certainty::Exact) {
                ++exact;
                CHECK(h.upper == h.value);
            }
        }
    }
    CHECK(exact >= 40);
}

TEST_CASE("escape invariance: later start gives the same value") {
    auto F3 = make_field(3);
    auto C3 = DrinfeldModule::carlitz(F3);
    std::mt19937_64 rng(43);
    for (int i = 0; i < 30; ++i) {
        RatK x = random_ratk(rng, F3, 3);
        auto r = local_canonical_height(C3, x, Place::infinite());
        REQUIRE(r.exact());
        auto r1 = local_canonical_height(C3, C3.apply_t(x), Place::infinite());
        REQUIRE(r1.exact());
        CHECK(r1.value == 3 * r.value);
        HeightOptions big;
        big.iter_cap = 20;
        CHECK(local_canonical_height(C3, x, Place::infinite(), big).value == r.value);
    }
}

TEST_CASE("Denis criterion on curated samples") {
    auto F2 = make_field(2);
    auto F3 = make_field(3);
    std::vector<std::pair<DrinfeldModule, RatK>> cases = {
        {DrinfeldModule::carlitz(F2), K(F2, "1")},   {DrinfeldModule::carlitz(F3), K(F3, "1")},
        {DrinfeldModule::carlitz(F2), K(F2, "t+1")}, {DrinfeldModule::carlitz(F2), K(F2, "t")},
        {DrinfeldModule::carlitz(F3), K(F3, "2")},   {DrinfeldModule::carlitz(F3), K(F3, "1/t")},
        {DrinfeldModule::carlitz(F2), RatK(F2)}};
    for (auto& [M, x] : cases) {
        auto h = canonical_height(M, x);
        REQUIRE(h.certainty == Certainty::Exact);
        CHECK((h.value == 0) == torsion_annihilator(M, x, 6).has_value());
    }
}

TEST_CASE("functoriality of the canonical height") {
    std::mt19937_64 rng(47);
    std::vector<DrinfeldModule> mods = {DrinfeldModule::carlitz(make_field(3)),
                                        DrinfeldModule::from_strings(make_field(2), {"t", "1", "1"}),
                                        DrinfeldModule::from_strings(make_field(2), {"t", "1/t"})};
    int checked = 0;
    for (const auto& M : mods) {
        for (int i = 0; i < 10; ++i) {
            Poly Qp = random_poly(rng, M.field(), 2, true);
            RatK x = random_ratk(rng, M.field(), 2);
            auto hx = canonical_height(M, x);
            auto hy = canonical_height(M, M.apply(Qp, x));
            if (hx.certainty != Certainty::Exact || hy.certainty != Certainty::Exact) continue;
            ++checked;
            CHECK(hy.value == ipow(M.q(), std::uint64_t(M.rank()) * std::max(Qp.degree(), 0)) * hx.value);
        }
    }
    CHECK(checked >= 20);
}

TEST_CASE("ratio convergence at infinity for Q = t^n") {
    auto F3 = make_field(3);
    auto C3 = DrinfeldModule::carlitz(F3);
    for (int n = 1; n <= 5; ++n)
        CHECK(log_distance_ratio(C3, K(F3, "1"), K(F3, "1"), Poly::monomial(F3, 1, n), Place::infinite()) ==
              Q("1/3"));
}
