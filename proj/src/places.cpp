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

#include "drinfeld/places.hpp"

#include "drinfeld/error.hpp"
#include "drinfeld/text.hpp"

namespace drinfeld {

Place Place::finite(Poly prime) {
    if (!prime.is_monic() || prime.degree() < 1) throw DomainError("place must be a monic polynomial of positive degree");
    if (!prime.is_irreducible()) throw DomainError("place polynomial " + format_poly(prime) + " is not irreducible");
    Place v;
    v.prime_ = std::move(prime);
    return v;
}

const Poly& Place::prime() const {
    if (!prime_) throw DomainError("the infinite place has no prime polynomial");
    return *prime_;
}

bool operator<(const Place& a, const Place& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && !b.is_infinite();
    return *a.prime_ < *b.prime_;
}

std::int64_t valuation(const RatK& x, const Place& v) {
    if (x.is_zero()) return kValuationOfZero;
    if (v.is_infinite()) return std::int64_t{x.den().degree()} - x.num().degree();
    const Poly& P = v.prime();
    const int up = multiplicity(x.num(), P);
    if (up > 0) return up;
    return -std::int64_t{multiplicity(x.den(), P)};
}

LogAbs log_abs(const RatK& x, const Place& v) {
    if (x.is_zero()) return kLogOfZero;
    return -valuation(x, v) * v.degree();
}

std::vector<std::pair<Place, std::int64_t>> support(const RatK& x) {
    if (x.is_zero()) throw DomainError("support of zero is undefined");
    std::vector<std::pair<Place, std::int64_t>> out;
    if (x.num().degree() > 0)
        for (auto& [P, m] : factor(x.num())) out.emplace_back(Place::finite(P), m);
    if (x.den().degree() > 0)
        for (auto& [P, m] : factor(x.den())) out.emplace_back(Place::finite(P), -m);
    if (x.num().degree() != x.den().degree())
        out.emplace_back(Place::infinite(), std::int64_t{x.den().degree()} - x.num().degree());
    return out;
}

std::vector<Place> poles(const RatK& x) {
    std::vector<Place> out;
    if (x.is_zero()) return out;
    if (x.den().degree() > 0)
        for (auto& [P, m] : factor(x.den())) out.push_back(Place::finite(P));
    if (x.num().degree() > x.den().degree()) out.push_back(Place::infinite());
    return out;
}

std::int64_t product_formula_check(const RatK& x) {
    if (x.is_zero()) throw DomainError("product formula needs a nonzero element");
    std::int64_t total = 0;
    for (const auto& [v, val] : support(x)) total += -val * v.degree();
    return total;
}

std::vector<Place> enumerate_places(const FieldPtr& field, int max_deg, bool include_infinite) {
    if (max_deg < 1) throw DomainError("max_deg must be >= 1");
    std::vector<Place> out;
    if (include_infinite) out.push_back(Place::infinite());
    for (int d = 1; d <= max_deg; ++d)
        for (auto& P : monic_irreducibles(field, d)) out.push_back(Place::finite(std::move(P)));
    return out;
}

std::string format_place(const Place& v) { return v.is_infinite() ? "inf" : format_poly(v.prime()); }

Place parse_place(const FieldPtr& field, const std::string& text) {
    if (text == "inf" || text == "infinity" || text == "∞") return Place::infinite();
    Poly P = parse_poly(field, text);
    if (P.degree() < 1) throw ParseError("place \"" + text + "\" must have positive degree");
    return Place::finite(P);
}

}  // namespace drinfeld
