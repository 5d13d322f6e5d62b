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

#include "drinfeld/ratk.hpp"

#include <algorithm>

#include "drinfeld/error.hpp"

namespace drinfeld {

RatK::RatK(FieldPtr field) : num_(field), den_(Poly::constant(field, 1)) {}

RatK::RatK(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field(), 1)) {}

RatK::RatK(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

RatK::RatK(Poly num, Poly den, bool) : num_(std::move(num)), den_(std::move(den)) {
    if (!den_.is_monic()) {
        const FqElem inv = den_.F().inv(den_.leading());
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatK RatK::from_int(const FieldPtr& field, long long n) { return RatK(Poly::constant(field, field->from_int(n))); }

void RatK::normalize() {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.field(), 1);
        return;
    }
    if (den_.degree() > 0) {
        Poly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
    }
    if (!den_.is_monic()) {
        const FqElem inv = den_.F().inv(den_.leading());
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

bool RatK::is_normalized() const {
    if (!den_.is_monic()) return false;
    if (num_.is_zero()) return den_.is_one();
    return gcd(num_, den_).is_one();
}

int RatK::height_degree() const {
    if (is_zero()) return 0;
    return std::max(num_.degree(), den_.degree());
}

RatK RatK::operator-() const { return RatK(-num_, den_, true); }

RatK RatK::inverse() const {
    if (is_zero()) throw DomainError("division by zero in F_q(t)");
    return RatK(den_, num_, true);
}

RatK operator+(const RatK& x, const RatK& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.den_ == y.den_) {
        if (x.den_.is_one()) return RatK(x.num_ + y.num_);
        return RatK(x.num_ + y.num_, x.den_);
    }
    if (x.den_.is_one()) return RatK(x.num_ * y.den_ + y.num_, y.den_, true);
    if (y.den_.is_one()) return RatK(x.num_ + y.num_ * x.den_, x.den_, true);
    // Henrici: with g = gcd(b, d), the sum a/b + c/d has denominator dividing b d / g.
    const Poly g = gcd(x.den_, y.den_);
    if (g.is_one()) return RatK(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_, true);
    const Poly bg = x.den_.exact_div(g);
    const Poly dg = y.den_.exact_div(g);
    return RatK(x.num_ * dg + y.num_ * bg, bg * y.den_);
}

RatK operator-(const RatK& x, const RatK& y) { return x + (-y); }

RatK operator*(const RatK& x, const RatK& y) {
    if (x.is_zero() || y.is_zero()) return RatK(x.field());
    if (x.den_.is_one() && y.den_.is_one()) return RatK(x.num_ * y.num_);
    // Cross-cancel so the product is already reduced.
    const Poly g1 = gcd(x.num_, y.den_);
    const Poly g2 = gcd(y.num_, x.den_);
    const Poly a = g1.is_one() ? x.num_ : x.num_.exact_div(g1);
    const Poly d = g1.is_one() ? y.den_ : y.den_.exact_div(g1);
    const Poly c = g2.is_one() ? y.num_ : y.num_.exact_div(g2);
    const Poly b = g2.is_one() ? x.den_ : x.den_.exact_div(g2);
    return RatK(a * c, b * d, true);
}

RatK operator/(const RatK& x, const RatK& y) { return x * y.inverse(); }

RatK RatK::scaled(FqElem c) const {
    if (c == 0) return RatK(field());
    return RatK(num_.scaled(c), den_, true);
}

RatK RatK::frobenius(unsigned k) const { return RatK(num_.frobenius(k), den_.frobenius(k), true); }

RatK RatK::pow(std::uint64_t n) const { return RatK(num_.pow(n), den_.pow(n), true); }

}  // namespace drinfeld
