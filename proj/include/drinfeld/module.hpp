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

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "drinfeld/places.hpp"
#include "drinfeld/twisted.hpp"

namespace drinfeld {

enum class Reduction { Good, Bad };

/// A Drinfeld module phi: F_q[t] -> K{tau} of generic characteristic,
/// determined by phi_t = t + a_1 tau + ... + a_d tau^d with a_d != 0.
class DrinfeldModule {
public:
    /// Throws DomainError unless the constant coefficient is exactly t and the
    /// rank is at least 1.
    explicit DrinfeldModule(TwistedPoly phi_t);
    /// Coefficients of phi_t lowest tau-power first, in the text format.
    static DrinfeldModule from_strings(const FieldPtr& field, const std::vector<std::string>& phi_t);
    /// The Carlitz module phi_t = t + tau.
    static DrinfeldModule carlitz(const FieldPtr& field);

    DrinfeldModule(const DrinfeldModule& other);
    DrinfeldModule& operator=(const DrinfeldModule& other);

    const FieldPtr& field() const { return phi_t_.field(); }
    std::uint32_t q() const { return field()->order(); }
    int rank() const { return phi_t_.tau_degree(); }
    const TwistedPoly& phi_t() const { return phi_t_; }
    const RatK& coeff(int i) const { return phi_t_.coeffs()[static_cast<std::size_t>(i)]; }
    const RatK& leading() const { return phi_t_.leading(); }

    /// Finite places where some coefficient is non-integral or the leading
    /// coefficient is not a unit; sorted.
    const std::vector<Place>& bad_places() const { return bad_places_; }
    /// True when every coefficient is integral at every finite place.
    bool is_integral() const;

    /// phi_Q, by Horner's scheme in the coefficients of Q; memoized.
    TwistedPoly phi_of(const Poly& Q) const;
    /// phi_t(x).
    RatK apply_t(const RatK& x) const;
    /// phi_Q(x), by Horner's scheme on values (no twisted polynomial is built).
    RatK apply(const Poly& Q, const RatK& x) const;
    /// phi_{t^k}(x) for k = 0..n.  Throws ResourceError when a point exceeds
    /// max_degree (0 = unbounded).
    std::vector<RatK> orbit(const RatK& x, int n, int max_degree = 0) const;

    std::vector<std::string> to_strings() const;

private:
    TwistedPoly phi_t_;
    std::vector<Place> bad_places_;
    mutable std::mutex cache_mutex_;
    mutable std::map<Poly, TwistedPoly> cache_;
};

TwistedPoly phi_of(const DrinfeldModule& M, const Poly& Q);
int rank(const DrinfeldModule& M);

/// psi = gamma^-1 phi gamma with gamma the smallest power of the product of
/// the offending primes making every coefficient of psi_t integral at all
/// finite places.  Already-integral input returns (M, 1).
std::pair<DrinfeldModule, RatK> integralize(const DrinfeldModule& M);

/// Requires a finite place.
Reduction reduction_type(const DrinfeldModule& M, const Place& v);

/// The order of beta (minimal-degree monic Q with phi_Q(beta) = 0) when it has
/// degree <= deg_cap.  Found as the first F_q-linear dependence among the
/// orbit points phi_{t^k}(beta).  beta = 0 has order 1.
std::optional<Poly> torsion_annihilator(const DrinfeldModule& M, const RatK& beta, int deg_cap, int max_degree = 0);

}  // namespace drinfeld
