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

#include "drinfeld/field.hpp"

#include "drinfeld/error.hpp"
#include "drinfeld/poly.hpp"

namespace drinfeld {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q) {
    if (q < 2) throw DomainError("field order must be a prime power >= 2, got " + std::to_string(q));
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t e = 0;
    std::uint32_t r = q;
    while (r % p == 0) {
        r /= p;
        ++e;
    }
    if (r != 1) throw DomainError("field order must be a prime power, got " + std::to_string(q));
    return {p, e};
}

FieldPtr Field::prime(std::uint32_t p) {
    if (!is_prime(p)) throw DomainError("characteristic must be prime, got " + std::to_string(p));
    if (p > kMaxOrder) throw DomainError("field order too large");
    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->e_ = 1;
    f->q_ = p;
    f->modulus_ = {0, 1};
    f->build_tables();
    return f;
}

FieldPtr Field::extension(std::uint32_t p, std::vector<FqElem> modulus) {
    if (modulus.size() == 2) {
        if (modulus[1] % p != 1) throw DomainError("field modulus must be monic");
        return prime(p);
    }
    auto base = prime(p);
    for (auto& c : modulus) c %= p;
    while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
    if (modulus.size() < 2) throw DomainError("field modulus must have positive degree");
    if (modulus.back() != 1) throw DomainError("field modulus must be monic");
    const auto e = static_cast<std::uint32_t>(modulus.size() - 1);
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxOrder) throw DomainError("field order exceeds 2^16");
    }
    if (!Poly(base, modulus).is_irreducible())
        throw DomainError("field modulus is not irreducible over F_" + std::to_string(p));
    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->e_ = e;
    f->q_ = static_cast<std::uint32_t>(q);
    f->modulus_ = std::move(modulus);
    f->build_tables();
    return f;
}

void Field::build_tables() {
    // Multiplication without tables, by coordinates modulo the modulus.
    auto slow_mul = [this](FqElem a, FqElem b) -> FqElem {
        if (e_ == 1) return static_cast<FqElem>((std::uint64_t{a} * b) % p_);
        auto ca = coordinates(a);
        auto cb = coordinates(b);
        std::vector<std::uint64_t> prod(2 * e_ - 1, 0);
        for (std::uint32_t i = 0; i < e_; ++i)
            for (std::uint32_t j = 0; j < e_; ++j) prod[i + j] += std::uint64_t{ca[i]} * cb[j];
        for (auto& c : prod) c %= p_;
        for (std::size_t k = prod.size(); k-- > e_;) {
            const std::uint64_t lead = prod[k];
            if (lead == 0) continue;
            for (std::uint32_t j = 0; j < e_; ++j)
                prod[k - e_ + j] = (prod[k - e_ + j] + (p_ - lead) * modulus_[j]) % p_;
            prod[k] = 0;
        }
        std::vector<std::uint32_t> out(e_);
        for (std::uint32_t i = 0; i < e_; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
        return from_coordinates(out);
    };

    const std::uint32_t n = q_ - 1;
    log_.assign(q_, 0);
    exp_.assign(n == 0 ? 1 : n, 1);
    bool found = false;
    for (FqElem g = (q_ == 2 ? 1 : 2); g < q_ && !found; ++g) {
        FqElem x = 1;
        std::uint32_t k = 0;
        do {
            exp_[k] = x;
            x = slow_mul(x, g);
            ++k;
        } while (x != 1 && k < n);
        found = (x == 1 && k == n);
    }
    if (!found) throw DomainError("no multiplicative generator found; modulus is not irreducible");
    for (std::uint32_t k = 0; k < n; ++k) log_[exp_[k]] = k;

    frob_.assign(q_, 0);
    root_.assign(q_, 0);
    for (FqElem a = 0; a < q_; ++a) {
        frob_[a] = pow(a, p_);
        root_[frob_[a]] = a;
    }
}

FqElem Field::generator() const {
    if (e_ == 1) throw DomainError("'u' is only defined for extension fields");
    return p_;
}

FqElem Field::from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<FqElem>(r);
}

FqElem Field::add(FqElem a, FqElem b) const {
    if (e_ == 1) {
        FqElem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    FqElem out = 0;
    FqElem scale = 1;
    while (a != 0 || b != 0) {
        FqElem d = a % p_ + b % p_;
        if (d >= p_) d -= p_;
        out += d * scale;
        scale *= p_;
        a /= p_;
        b /= p_;
    }
    return out;
}

FqElem Field::neg(FqElem a) const {
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    FqElem out = 0;
    FqElem scale = 1;
    while (a != 0) {
        const FqElem d = a % p_;
        out += (d == 0 ? 0 : p_ - d) * scale;
        scale *= p_;
        a /= p_;
    }
    return out;
}

FqElem Field::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem Field::mul(FqElem a, FqElem b) const {
    if (a == 0 || b == 0) return 0;
    if (e_ == 1) return static_cast<FqElem>((std::uint64_t{a} * b) % p_);
    std::uint32_t k = log_[a] + log_[b];
    if (k >= q_ - 1) k -= q_ - 1;
    return exp_[k];
}

FqElem Field::inv(FqElem a) const {
    if (a == 0) throw DomainError("division by zero in F_" + std::to_string(q_));
    const std::uint32_t k = log_[a];
    return exp_[k == 0 ? 0 : q_ - 1 - k];
}

FqElem Field::div(FqElem a, FqElem b) const { return mul(a, inv(b)); }

FqElem Field::pow(FqElem a, std::uint64_t n) const {
    if (n == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t k = (std::uint64_t{log_[a]} * (n % (q_ - 1))) % (q_ - 1);
    return exp_[k];
}

FqElem Field::frobenius(FqElem a) const { return frob_[a]; }

FqElem Field::pth_root(FqElem a) const { return root_[a]; }

std::vector<std::uint32_t> Field::coordinates(FqElem a) const {
    std::vector<std::uint32_t> out(e_, 0);
    for (std::uint32_t i = 0; i < e_; ++i) {
        out[i] = a % p_;
        a /= p_;
    }
    return out;
}

FqElem Field::from_coordinates(const std::vector<std::uint32_t>& coords) const {
    FqElem out = 0;
    FqElem scale = 1;
    for (std::uint32_t i = 0; i < e_ && i < coords.size(); ++i) {
        out += (coords[i] % p_) * scale;
        scale *= p_;
    }
    return out;
}

bool Field::same_as(const Field& other) const {
    return this == &other || (p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_);
}

}  // namespace drinfeld
