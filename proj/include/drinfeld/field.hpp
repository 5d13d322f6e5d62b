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
#include <memory>
#include <string>
#include <vector>

namespace drinfeld {

/// Element of F_q, stored as an index in [0, q).  For q = p the index is the
/// residue; for q = p^e it is the base-p digit vector of the coordinates with
/// respect to 1, u, ..., u^{e-1}, where u is a root of the field modulus.
using FqElem = std::uint32_t;

/// The finite field F_q with q = p^e.  Extension fields are built from an
/// explicit monic irreducible modulus over F_p and use log/antilog tables for
/// multiplication, so q is limited to 2^16.
class Field {
public:
    static constexpr std::uint32_t kMaxOrder = 1u << 16;

    /// Prime field F_p.
    static std::shared_ptr<const Field> prime(std::uint32_t p);

    /// F_{p^e} = F_p[u]/(modulus).  `modulus` lists coefficients of the monic
    /// modulus lowest degree first; it must have degree e and be irreducible.
    static std::shared_ptr<const Field> extension(std::uint32_t p,
                                                  std::vector<FqElem> modulus);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return e_; }
    std::uint32_t order() const { return q_; }
    const std::vector<FqElem>& modulus() const { return modulus_; }
    bool is_prime_field() const { return e_ == 1; }

    FqElem zero() const { return 0; }
    FqElem one() const { return 1; }
    /// The generator u of an extension field (requires e > 1).
    FqElem generator() const;
    /// Image of the integer n under Z -> F_p -> F_q.
    FqElem from_int(long long n) const;

    FqElem add(FqElem a, FqElem b) const;
    FqElem sub(FqElem a, FqElem b) const;
    FqElem neg(FqElem a) const;
    FqElem mul(FqElem a, FqElem b) const;
    FqElem inv(FqElem a) const;
    FqElem div(FqElem a, FqElem b) const;
    FqElem pow(FqElem a, std::uint64_t n) const;
    /// a^p.
    FqElem frobenius(FqElem a) const;
    /// The unique b with b^p = a.
    FqElem pth_root(FqElem a) const;

    /// Coordinates of a over F_p, lowest power of u first (length e).
    std::vector<std::uint32_t> coordinates(FqElem a) const;
    FqElem from_coordinates(const std::vector<std::uint32_t>& coords) const;

    bool same_as(const Field& other) const;

private:
    Field() = default;
    void build_tables();

    std::uint32_t p_ = 2;
    std::uint32_t e_ = 1;
    std::uint32_t q_ = 2;
    std::vector<FqElem> modulus_;
    std::vector<std::uint32_t> log_;
    std::vector<FqElem> exp_;
    std::vector<FqElem> frob_;
    std::vector<FqElem> root_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Builds F_q from a prime power q; `modulus` (a "u"-polynomial string such as
/// "u^2+u+1") is required exactly when q is not prime.
FieldPtr make_field(std::uint32_t q, const std::string& modulus = {});

/// Returns (p, e) with q = p^e, or throws DomainError when q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q);

}  // namespace drinfeld
