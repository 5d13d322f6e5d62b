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

#include <vector>

#include "drinfeld/ratk.hpp"

namespace drinfeld {

/// Element sum c_i tau^i of the twisted polynomial ring K{tau}, where
/// tau c = c^q tau.  Acts on K as x -> sum c_i x^(q^i).
class TwistedPoly {
public:
    explicit TwistedPoly(FieldPtr field);
    TwistedPoly(FieldPtr field, std::vector<RatK> coeffs);
    /// c tau^0.
    static TwistedPoly scalar(const RatK& c);
    /// tau^k.
    static TwistedPoly tau(const FieldPtr& field, unsigned k = 1);

    const FieldPtr& field() const { return field_; }
    const std::vector<RatK>& coeffs() const { return c_; }
    /// Coefficient of tau^i (zero beyond the degree).
    RatK coeff(std::size_t i) const;
    /// -1 for the zero element.
    int tau_degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const RatK& leading() const { return c_.back(); }

    friend TwistedPoly operator+(const TwistedPoly& f, const TwistedPoly& g);
    friend TwistedPoly operator-(const TwistedPoly& f, const TwistedPoly& g);
    /// Composition f o g: (sum a_i tau^i)(sum b_j tau^j) = sum a_i b_j^(q^i) tau^(i+j).
    friend TwistedPoly operator*(const TwistedPoly& f, const TwistedPoly& g);
    /// Left multiplication by a scalar of K.
    TwistedPoly scaled(const RatK& c) const;

    RatK operator()(const RatK& x) const { return eval(x); }
    RatK eval(const RatK& x) const;

    friend bool operator==(const TwistedPoly& f, const TwistedPoly& g) { return f.c_ == g.c_; }
    friend bool operator!=(const TwistedPoly& f, const TwistedPoly& g) { return !(f == g); }

private:
    void trim();

    FieldPtr field_;
    std::vector<RatK> c_;
};

TwistedPoly twisted_add(const TwistedPoly& f, const TwistedPoly& g);
TwistedPoly twisted_compose(const TwistedPoly& f, const TwistedPoly& g);
RatK twisted_eval(const TwistedPoly& f, const RatK& x);

}  // namespace drinfeld
