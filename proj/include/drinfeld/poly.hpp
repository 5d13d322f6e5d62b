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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "drinfeld/field.hpp"

namespace drinfeld {

/// Dense polynomial in F_q[t], coefficients lowest degree first.  The
/// coefficient vector never carries trailing zeros, so the zero polynomial is
/// the empty vector and has degree -1.
class Poly {
public:
    explicit Poly(FieldPtr field);
    Poly(FieldPtr field, std::vector<FqElem> coeffs);

    static Poly constant(FieldPtr field, FqElem c);
    /// c * t^k.
    static Poly monomial(FieldPtr field, FqElem c, std::size_t k);
    static Poly t(FieldPtr field) { return monomial(std::move(field), 1, 1); }

    const FieldPtr& field() const { return field_; }
    const Field& F() const { return *field_; }
    const std::vector<FqElem>& coeffs() const { return c_; }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    FqElem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    FqElem leading() const { return c_.empty() ? 0 : c_.back(); }

    Poly monic() const;
    Poly operator-() const;
    Poly& operator+=(const Poly& g);
    Poly& operator-=(const Poly& g);
    Poly& operator*=(const Poly& g) { return *this = *this * g; }
    friend Poly operator+(Poly f, const Poly& g) { return f += g; }
    friend Poly operator-(Poly f, const Poly& g) { return f -= g; }
    friend Poly operator*(const Poly& f, const Poly& g);
    Poly scaled(FqElem c) const;
    /// f * t^k.
    Poly shifted(std::size_t k) const;

    Poly pow(std::uint64_t n) const;
    /// f^(q^k).  Coefficients lie in F_q, so this only spreads them out.
    Poly frobenius(unsigned k = 1) const;
    Poly derivative() const;

    /// Exact quotient; throws DomainError when g does not divide *this.
    Poly exact_div(const Poly& g) const;
    bool divisible_by(const Poly& g) const;

    /// Irreducibility over F_q via gcd(f, t^{q^i} - t) for 1 <= i <= deg f / 2.
    /// Throws DomainError on constants.
    bool is_irreducible() const;

    FqElem eval(FqElem x) const;

    friend bool operator==(const Poly& f, const Poly& g) { return f.c_ == g.c_; }
    friend bool operator!=(const Poly& f, const Poly& g) { return !(f == g); }
    /// Degree first, then coefficients from the top down: the enumeration order.
    friend bool operator<(const Poly& f, const Poly& g);

    std::size_t hash() const;

private:
    void trim();

    FieldPtr field_;
    std::vector<FqElem> c_;
};

/// (quotient, remainder) with f = g * quotient + remainder, deg remainder < deg g.
std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g);
Poly operator%(const Poly& f, const Poly& g);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& f, const Poly& g);
Poly lcm(const Poly& f, const Poly& g);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Poly& a, std::uint64_t n, const Poly& m);

/// Result of stripping a given list of primes out of f:
/// f = unit * prod basis[i]^exponents[i] * cofactor.
struct BasisFactorization {
    FqElem unit = 1;
    std::vector<int> exponents;
    Poly cofactor;
};

/// `basis` must be pairwise distinct monic irreducibles.  The cofactor is
/// monic and coprime to every basis element.
BasisFactorization factor_with_basis(const Poly& f, const std::vector<Poly>& basis);

/// Multiplicity of the monic irreducible `prime` in f (f nonzero).
int multiplicity(const Poly& f, const Poly& prime);

/// Squarefree decomposition of a monic f: pairs (g_i, i) with f = prod g_i^i.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

/// Complete factorization of a nonzero polynomial into monic irreducibles with
/// multiplicities, sorted by the polynomial order.  Squarefree decomposition
/// and distinct-degree splitting, followed by trial division only inside a
/// degree class that holds more than one factor.
std::vector<std::pair<Poly, int>> factor(const Poly& f);

/// Streams every polynomial of degree <= max_deg exactly once in enumeration
/// order (the zero polynomial first when monic_only is false).
class PolyEnumerator {
public:
    PolyEnumerator(FieldPtr field, int max_deg, bool monic_only);
    bool next(Poly& out);
    /// Number of polynomials the stream yields.
    std::uint64_t count() const;

private:
    FieldPtr field_;
    int max_deg_;
    bool monic_only_;
    int cur_deg_;
    std::vector<FqElem> digits_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<Poly> enumerate_polys(const FieldPtr& field, int max_deg, bool monic_only);

/// Monic irreducibles of degree exactly `deg`, in enumeration order.
std::vector<Poly> monic_irreducibles(const FieldPtr& field, int deg);

}  // namespace drinfeld
