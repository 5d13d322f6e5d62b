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

#include "drinfeld/poly.hpp"

namespace drinfeld {

/// Element of K = F_q(t), always stored reduced: gcd(num, den) = 1 and den
/// monic.  Zero is 0/1.
class RatK {
public:
    explicit RatK(FieldPtr field);
    explicit RatK(Poly num);
    RatK(Poly num, Poly den);

    static RatK from_int(const FieldPtr& field, long long n);
    static RatK t(const FieldPtr& field) { return RatK(Poly::t(field)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const FieldPtr& field() const { return num_.field(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    /// max(deg num, deg den), the Weil height of the element.
    int height_degree() const;

    RatK operator-() const;
    RatK inverse() const;
    friend RatK operator+(const RatK& x, const RatK& y);
    friend RatK operator-(const RatK& x, const RatK& y);
    friend RatK operator*(const RatK& x, const RatK& y);
    friend RatK operator/(const RatK& x, const RatK& y);
    RatK& operator+=(const RatK& y) { return *this = *this + y; }
    RatK& operator-=(const RatK& y) { return *this = *this - y; }
    RatK& operator*=(const RatK& y) { return *this = *this * y; }
    RatK scaled(FqElem c) const;
    /// x^(q^k); stays reduced because Frobenius preserves coprimality.
    RatK frobenius(unsigned k = 1) const;
    RatK pow(std::uint64_t n) const;

    friend bool operator==(const RatK& x, const RatK& y) { return x.num_ == y.num_ && x.den_ == y.den_; }
    friend bool operator!=(const RatK& x, const RatK& y) { return !(x == y); }
    friend bool operator<(const RatK& x, const RatK& y) {
        return x.num_ < y.num_ || (x.num_ == y.num_ && x.den_ < y.den_);
    }

    /// True when the stored pair satisfies the reduced normal form.
    bool is_normalized() const;

private:
    RatK(Poly num, Poly den, bool already_reduced);
    void normalize();

    Poly num_;
    Poly den_;
};

}  // namespace drinfeld
