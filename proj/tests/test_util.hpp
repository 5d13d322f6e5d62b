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

#pragma once

#include <random>
#include <string>
#include <vector>

#include "drinfeld/integrality.hpp"
#include "drinfeld/text.hpp"

namespace testutil {

using namespace drinfeld;

inline Poly random_poly(std::mt19937_64& rng, const FieldPtr& F, int max_deg, bool nonzero = false) {
    std::uniform_int_distribution<int> deg_dist(nonzero ? 0 : -1, max_deg);
    std::uniform_int_distribution<FqElem> coef(0, F->order() - 1);
    for (;;) {
        const int d = deg_dist(rng);
        std::vector<FqElem> c(static_cast<std::size_t>(d + 1));
        for (auto& x : c) x = coef(rng);
        Poly f(F, c);
        if (!nonzero || !f.is_zero()) return f;
    }
}

inline RatK random_ratk(std::mt19937_64& rng, const FieldPtr& F, int max_deg, bool nonzero = false) {
    Poly num = random_poly(rng, F, max_deg, nonzero);
    Poly den = random_poly(rng, F, max_deg, true);
    return RatK(std::move(num), std::move(den));
}

inline RatK K(const FieldPtr& F, const std::string& s) { return parse_ratk(F, s); }
inline Poly A(const FieldPtr& F, const std::string& s) { return parse_poly(F, s); }
inline Place V(const FieldPtr& F, const std::string& s) { return parse_place(F, s); }

}  // namespace testutil
