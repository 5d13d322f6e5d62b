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

#include "drinfeld/poly.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "drinfeld/error.hpp"

namespace drinfeld {

namespace {

void check_same_field(const Poly& f, const Poly& g) {
    if (f.field() != g.field() && !f.F().same_as(g.F()))
        throw DomainError("polynomials over different fields");
}

/// Polynomial whose p-th power is f (f' = 0 required).
Poly pth_root(const Poly& f) {
    const Field& F = f.F();
    const std::uint32_t p = F.characteristic();
    std::vector<FqElem> out(f.coeffs().size() / p + 1, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) out[i / p] = F.pth_root(f.coeffs()[i]);
    return Poly(f.field(), std::move(out));
}

std::uint64_t saturating_pow(std::uint64_t b, int k) {
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / b) return std::numeric_limits<std::uint64_t>::max();
        r *= b;
    }
    return r;
}

}  // namespace

Poly::Poly(FieldPtr field) : field_(std::move(field)) {}

Poly::Poly(FieldPtr field, std::vector<FqElem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (auto& c : c_)
        if (c >= field_->order()) throw DomainError("coefficient out of range for F_" + std::to_string(field_->order()));
    trim();
}

Poly Poly::constant(FieldPtr field, FqElem c) { return Poly(std::move(field), std::vector<FqElem>{c}); }

Poly Poly::monomial(FieldPtr field, FqElem c, std::size_t k) {
    std::vector<FqElem> v(k + 1, 0);
    v[k] = c;
    return Poly(std::move(field), std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monic() const {
    if (is_zero() || is_monic()) return *this;
    return scaled(F().inv(leading()));
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = F().neg(c);
    return r;
}

Poly& Poly::operator+=(const Poly& g) {
    check_same_field(*this, g);
    if (g.c_.size() > c_.size()) c_.resize(g.c_.size(), 0);
    const Field& Fq = F();
    for (std::size_t i = 0; i < g.c_.size(); ++i) c_[i] = Fq.add(c_[i], g.c_[i]);
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& g) {
    check_same_field(*this, g);
    if (g.c_.size() > c_.size()) c_.resize(g.c_.size(), 0);
    const Field& Fq = F();
    for (std::size_t i = 0; i < g.c_.size(); ++i) c_[i] = Fq.sub(c_[i], g.c_[i]);
    trim();
    return *this;
}

Poly operator*(const Poly& f, const Poly& g) {
    check_same_field(f, g);
    if (f.is_zero() || g.is_zero()) return Poly(f.field());
    const Field& F = f.F();
    const auto& a = f.c_;
    const auto& b = g.c_;
    std::vector<FqElem> out(a.size() + b.size() - 1, 0);
    if (F.is_prime_field()) {
        const std::uint64_t p = F.characteristic();
        // Products are below p^2 <= 2^32, so 2^32 of them fit in 64 bits.
        std::vector<std::uint64_t> acc(out.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            const std::uint64_t ai = a[i];
            if (ai == 0) continue;
            std::uint64_t* dst = acc.data() + i;
            for (std::size_t j = 0; j < b.size(); ++j) dst[j] += ai * b[j];
        }
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = static_cast<FqElem>(acc[k] % p);
    } else {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                if (b[j] != 0) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
        }
    }
    Poly r(f.field());
    r.c_ = std::move(out);
    r.trim();
    return r;
}

Poly Poly::scaled(FqElem c) const {
    Poly r(field_);
    if (c == 0) return r;
    r.c_ = c_;
    for (auto& x : r.c_) x = F().mul(x, c);
    return r;
}

Poly Poly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    Poly r(field_);
    r.c_.assign(k, 0);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Poly Poly::pow(std::uint64_t n) const {
    Poly result = constant(field_, 1);
    Poly base = *this;
    while (n != 0) {
        if (n & 1u) result = result * base;
        n >>= 1;
        if (n != 0) base = base * base;
    }
    return result;
}

Poly Poly::frobenius(unsigned k) const {
    if (is_zero() || degree() == 0 || k == 0) return *this;
    const std::uint64_t stride = saturating_pow(F().order(), static_cast<int>(k));
    const std::uint64_t new_deg = static_cast<std::uint64_t>(degree()) * stride;
    if (stride == std::numeric_limits<std::uint64_t>::max() || new_deg > (std::uint64_t{1} << 32))
        throw ResourceError("Frobenius power exceeds addressable degree");
    Poly r(field_);
    r.c_.assign(new_deg + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * stride] = c_[i];
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(field_);
    std::vector<FqElem> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = F().mul(c_[i], F().from_int(static_cast<long long>(i % F().characteristic())));
    return Poly(field_, std::move(d));
}

Poly Poly::exact_div(const Poly& g) const {
    auto [quo, rem] = divrem(*this, g);
    if (!rem.is_zero()) throw DomainError("polynomial division is not exact");
    return quo;
}

bool Poly::divisible_by(const Poly& g) const { return (*this % g).is_zero(); }

bool Poly::is_irreducible() const {
    if (degree() < 1) throw DomainError("irreducibility test needs a polynomial of positive degree");
    if (degree() == 1) return true;
    const Poly f = monic();
    const Poly x = t(field_);
    const std::uint32_t q = F().order();
    const bool spread = q <= 64;
    Poly h = x;
    for (int i = 1; 2 * i <= f.degree(); ++i) {
        h = spread ? h.frobenius() % f : powmod(h, q, f);
        if (!gcd(f, h - x).is_one()) return false;
    }
    return true;
}

FqElem Poly::eval(FqElem x) const {
    FqElem r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = F().add(F().mul(r, x), c_[i]);
    return r;
}

bool operator<(const Poly& f, const Poly& g) {
    if (f.c_.size() != g.c_.size()) return f.c_.size() < g.c_.size();
    for (std::size_t i = f.c_.size(); i-- > 0;)
        if (f.c_[i] != g.c_[i]) return f.c_[i] < g.c_[i];
    return false;
}

std::size_t Poly::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto c : c_) h = (h ^ c) * 1099511628211ull;
    return h;
}

std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g) {
    check_same_field(f, g);
    if (g.is_zero()) throw DomainError("division by the zero polynomial");
    const Field& F = f.F();
    if (f.degree() < g.degree()) return {Poly(f.field()), f};
    std::vector<FqElem> r = f.coeffs();
    const auto& b = g.coeffs();
    const std::size_t db = b.size() - 1;
    std::vector<FqElem> quo(r.size() - db, 0);
    const FqElem lead_inv = F.inv(b.back());
    if (F.is_prime_field()) {
        const std::uint64_t p = F.characteristic();
        for (std::size_t k = r.size(); k-- > db;) {
            if (r[k] == 0) continue;
            const std::uint64_t c = (std::uint64_t{r[k]} * lead_inv) % p;
            quo[k - db] = static_cast<FqElem>(c);
            const std::uint64_t negc = (p - c) % p;
            FqElem* dst = r.data() + (k - db);
            for (std::size_t j = 0; j < db; ++j) dst[j] = static_cast<FqElem>((dst[j] + negc * b[j]) % p);
            r[k] = 0;
        }
    } else {
        for (std::size_t k = r.size(); k-- > db;) {
            if (r[k] == 0) continue;
            const FqElem c = F.mul(r[k], lead_inv);
            quo[k - db] = c;
            for (std::size_t j = 0; j < db; ++j) r[k - db + j] = F.sub(r[k - db + j], F.mul(c, b[j]));
            r[k] = 0;
        }
    }
    r.resize(db);
    return {Poly(f.field(), std::move(quo)), Poly(f.field(), std::move(r))};
}

Poly operator%(const Poly& f, const Poly& g) { return divrem(f, g).second; }

Poly gcd(const Poly& f, const Poly& g) {
    Poly a = f;
    Poly b = g;
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly lcm(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Poly(f.field());
    return (f * g.exact_div(gcd(f, g))).monic();
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly powmod(const Poly& a, std::uint64_t n, const Poly& m) {
    Poly result = Poly::constant(a.field(), 1) % m;
    Poly base = a % m;
    while (n != 0) {
        if (n & 1u) result = mulmod(result, base, m);
        n >>= 1;
        if (n != 0) base = mulmod(base, base, m);
    }
    return result;
}

int multiplicity(const Poly& f, const Poly& prime) {
    if (f.is_zero()) throw DomainError("multiplicity of a prime in the zero polynomial");
    int k = 0;
    Poly r = f;
    while (r.degree() >= prime.degree()) {
        auto [quo, rem] = divrem(r, prime);
        if (!rem.is_zero()) break;
        r = std::move(quo);
        ++k;
    }
    return k;
}

BasisFactorization factor_with_basis(const Poly& f, const std::vector<Poly>& basis) {
    if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
    BasisFactorization out{f.leading(), {}, f.monic()};
    out.exponents.reserve(basis.size());
    for (const auto& b : basis) {
        int k = 0;
        while (out.cofactor.degree() >= b.degree()) {
            auto [quo, rem] = divrem(out.cofactor, b);
            if (!rem.is_zero()) break;
            out.cofactor = std::move(quo);
            ++k;
        }
        out.exponents.push_back(k);
    }
    return out;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
    std::vector<std::pair<Poly, int>> out;
    if (f.degree() <= 0) return out;
    const Poly m = f.monic();
    const int p = static_cast<int>(m.F().characteristic());
    const Poly fp = m.derivative();
    if (fp.is_zero()) {
        for (auto& [g, i] : squarefree_decomposition(pth_root(m))) out.emplace_back(g, i * p);
        return out;
    }
    Poly c = gcd(m, fp);
    Poly w = m.exact_div(c);
    int i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly z = w.exact_div(y);
        if (z.degree() > 0) out.emplace_back(z, i);
        ++i;
        w = y;
        c = c.exact_div(y);
    }
    if (c.degree() > 0)
        for (auto& [g, j] : squarefree_decomposition(pth_root(c))) out.emplace_back(g, j * p);
    return out;
}

namespace {

/// Splits a squarefree monic g into its monic irreducible factors.
void split_squarefree(const Poly& g, std::vector<Poly>& out) {
    if (g.degree() <= 0) return;
    const Poly x = Poly::t(g.field());
    const std::uint32_t q = g.F().order();
    Poly rest = g;
    Poly h = x % rest;
    for (int d = 1; 2 * d <= rest.degree(); ++d) {
        h = q <= 64 ? h.frobenius() % rest : powmod(h, q, rest);
        Poly block = gcd(rest, h - x);
        if (block.degree() <= 0) continue;
        if (block.degree() == d) {
            out.push_back(block);
        } else {
            // Every factor of `block` has degree exactly d.
            Poly remaining = block;
            PolyEnumerator candidates(g.field(), d, true);
            Poly cand(g.field());
            while (remaining.degree() > d && candidates.next(cand)) {
                if (cand.degree() != d) continue;
                auto [quo, rem] = divrem(remaining, cand);
                if (rem.is_zero()) {
                    out.push_back(cand);
                    remaining = std::move(quo);
                }
            }
            out.push_back(remaining);
        }
        rest = rest.exact_div(block);
        if (rest.degree() <= 0) return;
        h = h % rest;
    }
    if (rest.degree() > 0) out.push_back(rest);
}

}  // namespace

std::vector<std::pair<Poly, int>> factor(const Poly& f) {
    if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
    std::vector<std::pair<Poly, int>> out;
    for (const auto& [g, mult] : squarefree_decomposition(f)) {
        std::vector<Poly> primes;
        split_squarefree(g, primes);
        for (auto& pr : primes) out.emplace_back(std::move(pr), mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

PolyEnumerator::PolyEnumerator(FieldPtr field, int max_deg, bool monic_only)
    : field_(std::move(field)), max_deg_(max_deg), monic_only_(monic_only), cur_deg_(0) {
    if (max_deg < 0) throw DomainError("max_deg must be >= 0");
    if (!monic_only_) digits_.assign(static_cast<std::size_t>(max_deg) + 1, 0);
}

bool PolyEnumerator::next(Poly& out) {
    if (done_) return false;
    const FqElem q = field_->order();
    if (!started_) {
        started_ = true;
    } else if (monic_only_) {
        std::size_t i = 0;
        while (i < digits_.size() && ++digits_[i] == q) digits_[i++] = 0;
        if (i == digits_.size()) {
            if (++cur_deg_ > max_deg_) {
                done_ = true;
                return false;
            }
            digits_.assign(static_cast<std::size_t>(cur_deg_), 0);
        }
    } else {
        std::size_t i = 0;
        while (i < digits_.size() && ++digits_[i] == q) digits_[i++] = 0;
        if (i == digits_.size()) {
            done_ = true;
            return false;
        }
    }
    if (monic_only_) {
        std::vector<FqElem> c = digits_;
        c.push_back(1);
        out = Poly(field_, std::move(c));
    } else {
        out = Poly(field_, digits_);
    }
    return true;
}

std::uint64_t PolyEnumerator::count() const {
    const std::uint64_t q = field_->order();
    if (!monic_only_) return saturating_pow(q, max_deg_ + 1);
    std::uint64_t total = 0;
    for (int k = 0; k <= max_deg_; ++k) {
        const std::uint64_t term = saturating_pow(q, k);
        if (term > std::numeric_limits<std::uint64_t>::max() - total) return std::numeric_limits<std::uint64_t>::max();
        total += term;
    }
    return total;
}

std::vector<Poly> enumerate_polys(const FieldPtr& field, int max_deg, bool monic_only) {
    PolyEnumerator e(field, max_deg, monic_only);
    std::vector<Poly> out;
    Poly p(field);
    while (e.next(p)) out.push_back(p);
    return out;
}

std::vector<Poly> monic_irreducibles(const FieldPtr& field, int deg) {
    std::vector<Poly> out;
    if (deg < 1) return out;
    PolyEnumerator e(field, deg, true);
    Poly p(field);
    while (e.next(p))
        if (p.degree() == deg && p.is_irreducible()) out.push_back(p);
    return out;
}

}  // namespace drinfeld
