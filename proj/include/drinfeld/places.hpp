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

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drinfeld/ratk.hpp"

namespace drinfeld {

/// A place of F_q(t): the infinite place (v(f/g) = deg g - deg f) or the
/// place of a monic irreducible polynomial.
class Place {
public:
    static Place infinite() { return Place(); }
    /// Throws DomainError unless `prime` is monic and irreducible.
    static Place finite(Poly prime);

    bool is_infinite() const { return !prime_.has_value(); }
    bool is_finite() const { return prime_.has_value(); }
    /// Requires a finite place.
    const Poly& prime() const;
    /// 1 for the infinite place, deg(prime) otherwise.
    int degree() const { return prime_ ? prime_->degree() : 1; }

    friend bool operator==(const Place& a, const Place& b) { return a.prime_ == b.prime_; }
    friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }
    /// Infinite first, then finite places in polynomial order.
    friend bool operator<(const Place& a, const Place& b);

private:
    Place() = default;
    std::optional<Poly> prime_;
};

/// log|x|_v in base-q units, scaled by the place degree so that it is an
/// integer.  kLogOfZero stands for log|0|_v = -infinity.
using LogAbs = std::int64_t;
inline constexpr LogAbs kLogOfZero = std::numeric_limits<std::int64_t>::min();
/// valuation(0, v).
inline constexpr std::int64_t kValuationOfZero = std::numeric_limits<std::int64_t>::max();

std::int64_t valuation(const RatK& x, const Place& v);
LogAbs log_abs(const RatK& x, const Place& v);

/// Every place where x has nonzero valuation, with that valuation: places of
/// the numerator, then of the denominator, then the infinite place.
std::vector<std::pair<Place, std::int64_t>> support(const RatK& x);

/// Places where |x|_v > 1 (finite poles, and infinity when deg num > deg den).
std::vector<Place> poles(const RatK& x);

/// Sum over all places of log|x|_v; zero for every nonzero x.
std::int64_t product_formula_check(const RatK& x);

/// The infinite place (optionally), then all finite places of degree <= max_deg.
std::vector<Place> enumerate_places(const FieldPtr& field, int max_deg, bool include_infinite);

std::string format_place(const Place& v);
/// "inf" or a monic irreducible polynomial string.
Place parse_place(const FieldPtr& field, const std::string& text);

}  // namespace drinfeld
