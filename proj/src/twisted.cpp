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

#include "drinfeld/twisted.hpp"

#include <algorithm>

namespace drinfeld {

TwistedPoly::TwistedPoly(FieldPtr field) : field_(std::move(field)) {}

TwistedPoly::TwistedPoly(FieldPtr field, std::vector<RatK> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    trim();
}

TwistedPoly TwistedPoly::scalar(const RatK& c) { return TwistedPoly(c.field(), {c}); }

TwistedPoly TwistedPoly::tau(const FieldPtr& field, unsigned k) {
    std::vector<RatK> c(k + 1, RatK(field));
    c[k] = RatK::from_int(field, 1);
    return TwistedPoly(field, std::move(c));
}

RatK TwistedPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : RatK(field_); }

void TwistedPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TwistedPoly operator+(const TwistedPoly& f, const TwistedPoly& g) {
    std::vector<RatK> out(std::max(f.c_.size(), g.c_.size()), RatK(f.field_));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.coeff(i) + g.coeff(i);
    return TwistedPoly(f.field_, std::move(out));
}

TwistedPoly operator-(const TwistedPoly& f, const TwistedPoly& g) {
    std::vector<RatK> out(std::max(f.c_.size(), g.c_.size()), RatK(f.field_));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.coeff(i) - g.coeff(i);
    return TwistedPoly(f.field_, std::move(out));
}

TwistedPoly operator*(const TwistedPoly& f, const TwistedPoly& g) {
    if (f.is_zero() || g.is_zero()) return TwistedPoly(f.field_);
    std::vector<RatK> out(f.c_.size() + g.c_.size() - 1, RatK(f.field_));
    for (std::size_t i = 0; i < f.c_.size(); ++i) {
        if (f.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < g.c_.size(); ++j) {
            if (g.c_[j].is_zero()) continue;
            out[i + j] += f.c_[i] * g.c_[j].frobenius(static_cast<unsigned>(i));
        }
    }
    return TwistedPoly(f.field_, std::move(out));
}

TwistedPoly TwistedPoly::scaled(const RatK& c) const {
    std::vector<RatK> out = c_;
    for (auto& a : out) a = c * a;
    return TwistedPoly(field_, std::move(out));
}

RatK TwistedPoly::eval(const RatK& x) const {
    RatK acc(field_);
    if (x.is_zero()) return acc;
    RatK power = x;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i > 0) power = power.frobenius();
        if (!c_[i].is_zero()) acc += c_[i] * power;
    }
    return acc;
}

TwistedPoly twisted_add(const TwistedPoly& f, const TwistedPoly& g) { return f + g; }
TwistedPoly twisted_compose(const TwistedPoly& f, const TwistedPoly& g) { return f * g; }
RatK twisted_eval(const TwistedPoly& f, const RatK& x) { return f.eval(x); }

}  // namespace drinfeld
