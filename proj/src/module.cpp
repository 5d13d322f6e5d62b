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

#include "drinfeld/module.hpp"

#include <algorithm>
#include <set>

#include "drinfeld/error.hpp"
#include "drinfeld/text.hpp"

namespace drinfeld {

namespace {

std::vector<Place> compute_bad_places(const TwistedPoly& phi_t) {
    std::set<Place> bad;
    const auto& c = phi_t.coeffs();
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i].den().degree() > 0)
            for (auto& [P, m] : factor(c[i].den())) bad.insert(Place::finite(P));
    if (phi_t.leading().num().degree() > 0)
        for (auto& [P, m] : factor(phi_t.leading().num())) bad.insert(Place::finite(P));
    return {bad.begin(), bad.end()};
}

}  // namespace

DrinfeldModule::DrinfeldModule(TwistedPoly phi_t) : phi_t_(std::move(phi_t)) {
    if (phi_t_.tau_degree() < 1) throw DomainError("phi_t must have tau-degree at least 1");
    if (phi_t_.coeff(0) != RatK::t(field())) throw DomainError("the tau^0 coefficient of phi_t must be t");
    bad_places_ = compute_bad_places(phi_t_);
}

DrinfeldModule::DrinfeldModule(const DrinfeldModule& other)
    : phi_t_(other.phi_t_), bad_places_(other.bad_places_) {
    std::lock_guard lock(other.cache_mutex_);
    cache_ = other.cache_;
}

DrinfeldModule& DrinfeldModule::operator=(const DrinfeldModule& other) {
    if (this == &other) return *this;
    phi_t_ = other.phi_t_;
    bad_places_ = other.bad_places_;
    std::scoped_lock lock(cache_mutex_, other.cache_mutex_);
    cache_ = other.cache_;
    return *this;
}

DrinfeldModule DrinfeldModule::from_strings(const FieldPtr& field, const std::vector<std::string>& phi_t) {
    std::vector<RatK> c;
    c.reserve(phi_t.size());
    for (const auto& s : phi_t) c.push_back(parse_ratk(field, s));
    return DrinfeldModule(TwistedPoly(field, std::move(c)));
}

DrinfeldModule DrinfeldModule::carlitz(const FieldPtr& field) {
    return DrinfeldModule(TwistedPoly(field, {RatK::t(field), RatK::from_int(field, 1)}));
}

bool DrinfeldModule::is_integral() const {
    return std::all_of(phi_t_.coeffs().begin(), phi_t_.coeffs().end(),
                       [](const RatK& a) { return a.is_polynomial(); });
}

TwistedPoly DrinfeldModule::phi_of(const Poly& Q) const {
    {
        std::lock_guard lock(cache_mutex_);
        if (auto it = cache_.find(Q); it != cache_.end()) return it->second;
    }
    const FieldPtr& F = field();
    TwistedPoly r(F);
    for (std::size_t k = Q.coeffs().size(); k-- > 0;) {
        r = phi_t_ * r;
        if (Q.coeffs()[k] != 0) r = r + TwistedPoly::scalar(RatK(Poly::constant(F, Q.coeffs()[k])));
    }
    std::lock_guard lock(cache_mutex_);
    return cache_.emplace(Q, std::move(r)).first->second;
}

RatK DrinfeldModule::apply_t(const RatK& x) const { return phi_t_.eval(x); }

RatK DrinfeldModule::apply(const Poly& Q, const RatK& x) const {
    RatK y(field());
    if (x.is_zero()) return y;
    for (std::size_t k = Q.coeffs().size(); k-- > 0;) {
        y = apply_t(y);
        if (Q.coeffs()[k] != 0) y += x.scaled(Q.coeffs()[k]);
    }
    return y;
}

std::vector<RatK> DrinfeldModule::orbit(const RatK& x, int n, int max_degree) const {
    std::vector<RatK> out;
    out.reserve(static_cast<std::size_t>(std::max(n, 0)) + 1);
    out.push_back(x);
    for (int k = 1; k <= n; ++k) {
        out.push_back(apply_t(out.back()));
        if (max_degree > 0 && out.back().height_degree() > max_degree)
            throw ResourceError("orbit point phi_{t^" + std::to_string(k) + "} has degree " +
                                std::to_string(out.back().height_degree()) + " > bound " +
                                std::to_string(max_degree));
    }
    return out;
}

std::vector<std::string> DrinfeldModule::to_strings() const {
    std::vector<std::string> out;
    for (const auto& c : phi_t_.coeffs()) out.push_back(format_ratk(c));
    return out;
}

TwistedPoly phi_of(const DrinfeldModule& M, const Poly& Q) { return M.phi_of(Q); }

int rank(const DrinfeldModule& M) { return M.rank(); }

std::pair<DrinfeldModule, RatK> integralize(const DrinfeldModule& M) {
    const FieldPtr& F = M.field();
    const auto& c = M.phi_t().coeffs();
    std::set<Place> offending;
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i].den().degree() > 0)
            for (auto& [P, m] : factor(c[i].den())) offending.insert(Place::finite(P));
    if (offending.empty()) return {M, RatK::from_int(F, 1)};
    Poly B = Poly::constant(F, 1);
    for (const auto& v : offending) B = B * v.prime();
    const RatK Bk(B);
    RatK gamma = Bk;
    for (int k = 1;; ++k, gamma = gamma * Bk) {
        std::vector<RatK> out{c[0]};
        bool integral = true;
        RatK gamma_power = gamma;  // gamma^(q^i - 1), built incrementally
        RatK gamma_q = gamma;      // gamma^(q^i)
        for (std::size_t i = 1; i < c.size(); ++i) {
            gamma_q = gamma_q.frobenius();
            gamma_power = gamma_q / gamma;
            RatK a = c[i] * gamma_power;
            integral = integral && a.is_polynomial();
            out.push_back(std::move(a));
        }
        if (integral) return {DrinfeldModule(TwistedPoly(F, std::move(out))), gamma};
        if (k > 64) throw InvariantError("integralize did not terminate");
    }
}

Reduction reduction_type(const DrinfeldModule& M, const Place& v) {
    if (v.is_infinite()) throw DomainError("reduction type is defined at finite places only");
    const auto& c = M.phi_t().coeffs();
    for (std::size_t i = 1; i < c.size(); ++i)
        if (!c[i].is_zero() && valuation(c[i], v) < 0) return Reduction::Bad;
    return valuation(M.leading(), v) == 0 ? Reduction::Good : Reduction::Bad;
}

namespace {

/// Incremental row echelon form over F_q.  Each stored row remembers its
/// expression in terms of the inserted vectors; a later row is always reduced
/// against the earlier ones, so reducing in insertion order is complete.
class Echelon {
public:
    explicit Echelon(const Field& F) : F_(F) {}

    /// When v is in the span of the previously inserted vectors w_0..w_{n-1},
    /// returns c with v + sum c_k w_k = 0.  Otherwise stores v.
    std::optional<std::vector<FqElem>> insert(std::vector<FqElem> v) {
        const std::size_t idx = count_++;
        std::vector<FqElem> combo(idx + 1, 0);
        combo[idx] = 1;
        for (auto& row : rows_) {
            row.combo.resize(idx + 1, 0);
            if (row.pivot >= v.size() || v[row.pivot] == 0) continue;
            const FqElem f = v[row.pivot];
            for (std::size_t j = row.pivot; j < row.vec.size(); ++j)
                if (row.vec[j] != 0) v[j] = F_.sub(v[j], F_.mul(f, row.vec[j]));
            for (std::size_t j = 0; j < row.combo.size(); ++j)
                if (row.combo[j] != 0) combo[j] = F_.sub(combo[j], F_.mul(f, row.combo[j]));
        }
        std::size_t pivot = 0;
        while (pivot < v.size() && v[pivot] == 0) ++pivot;
        if (pivot == v.size()) {
            combo.pop_back();
            return combo;
        }
        const FqElem inv = F_.inv(v[pivot]);
        for (auto& x : v) x = F_.mul(x, inv);
        for (auto& x : combo) x = F_.mul(x, inv);
        rows_.push_back({pivot, std::move(v), std::move(combo)});
        return std::nullopt;
    }

private:
    struct Row {
        std::size_t pivot;
        std::vector<FqElem> vec;
        std::vector<FqElem> combo;
    };
    const Field& F_;
    std::vector<Row> rows_;
    std::size_t count_ = 0;
};

}  // namespace

std::optional<Poly> torsion_annihilator(const DrinfeldModule& M, const RatK& beta, int deg_cap, int max_degree) {
    if (deg_cap < 0) throw DomainError("deg_cap must be >= 0");
    const FieldPtr& F = M.field();
    if (beta.is_zero()) return Poly::constant(F, 1);
    std::vector<RatK> orbit{beta};
    for (int n = 1; n <= deg_cap; ++n) {
        orbit.push_back(M.apply_t(orbit.back()));
        if (max_degree > 0 && orbit.back().height_degree() > max_degree)
            throw ResourceError("torsion search: orbit point degree exceeds bound " + std::to_string(max_degree));
        // Linear relations among the w_k are unchanged by clearing denominators.
        Poly L = Poly::constant(F, 1);
        for (const auto& w : orbit) L = lcm(L, w.den());
        Echelon ech(*F);
        for (std::size_t k = 0; k < orbit.size(); ++k) {
            const Poly numer = orbit[k].num() * L.exact_div(orbit[k].den());
            auto rel = ech.insert(numer.coeffs());
            if (rel) {
                if (k != orbit.size() - 1) throw InvariantError("earlier orbit points were already dependent");
                std::vector<FqElem> c = *rel;
                c.push_back(1);
                return Poly(F, std::move(c));
            }
        }
    }
    return std::nullopt;
}

}  // namespace drinfeld
