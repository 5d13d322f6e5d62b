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

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drinfeld/error.hpp"
#include "drinfeld/module.hpp"

namespace drinfeld {

/// Exact nonnegative rational in log_q units.
using HeightValue = mpq_class;

/// "num/den" (or "num" for integers).
std::string format_rational(const mpq_class& r);

/// Weil height as the sum over places of max(log|x|_v, 0).
HeightValue weil_height(const RatK& x);
/// max(deg num, deg den); must agree with weil_height.
HeightValue weil_height_closed_form(const RatK& x);

struct Thresholds {
    /// log M_v: above it the top coefficient dominates phi_t strictly.
    mpq_class escape_log;
    /// log N_v (finite places only): at or below it orbits never grow.
    std::optional<mpq_class> contraction_log;
};

/// escape_log = max(0, max_{i<d} (L_i - L_d)/(q^d - q^i), -L_d/(q^d - 1)) and
/// contraction_log = min_{1<=i<=d} -L_i/(q^i - 1) with L_i = log|a_i|_v, zero
/// coefficients skipped.
Thresholds thresholds(const DrinfeldModule& M, const Place& v);

enum class HeightStatus { Exact, UpperBound };

/// How a local height was settled.
enum class HeightRoute {
    Zero,           // x = 0, or the orbit reached 0
    GoodReduction,  // finite place of good reduction: max(log|x|_v, 0)
    Escape,         // orbit under phi_t crossed escape_log at step escape_step
    AnnulusEscape,  // phi_P(x) crossed escape_log, escape_step = deg P
    Contraction,    // orbit entered the contraction region
    Periodic,       // an orbit value repeated
    Capped,         // iteration cap or degree bound reached
};

struct LocalHeightResult {
    HeightStatus status = HeightStatus::Exact;
    HeightValue value;
    int iterations_used = 0;
    HeightRoute route = HeightRoute::Zero;
    /// For escapes: value = (log|y|_v + log|a_d|_v/(q^d-1)) / q^(d*escape_step).
    int escape_step = 0;

    bool exact() const { return status == HeightStatus::Exact; }
};

struct HeightOptions {
    int iter_cap = 12;
    /// Degree bound for the extra phi_P probes at finite bad places.
    int annulus_cap = 3;
    /// Orbit points above this degree stop the iteration (0 = unbounded).
    int max_degree = 1 << 15;
};

LocalHeightResult local_canonical_height(const DrinfeldModule& M, const RatK& x, const Place& v,
                                         const HeightOptions& opts = {});

enum class Certainty { Exact, LowerBoundOnly };

struct CanonicalHeight {
    /// Sum of the exact local heights.
    HeightValue value;
    Certainty certainty = Certainty::Exact;
    /// Sum of all local values, upper bounds included: the true height lies
    /// in [value, upper].
    HeightValue upper;
    std::vector<std::pair<Place, LocalHeightResult>> locals;
};

/// Places where a local canonical height can be nonzero: infinity, the bad
/// places of M and the poles of x.
std::vector<Place> height_candidate_places(const DrinfeldModule& M, const RatK& x);

CanonicalHeight canonical_height(const DrinfeldModule& M, const RatK& x, const HeightOptions& opts = {});

/// h(phi_{t^n}(x)) / q^(d n).  Throws ResourceError past max_degree (0 = unbounded).
mpq_class naive_height_estimate(const DrinfeldModule& M, const RatK& x, int n, int max_degree = 1 << 15);

enum class JuliaMembership { Inside, Outside, Undetermined };

JuliaMembership in_filled_julia(const DrinfeldModule& M, const RatK& x, const Place& v,
                                const HeightOptions& opts = {});

/// Thrown when the point sits exactly on alpha, so the log-distance is -infinity.
class ExceptionalPoint : public DomainError {
public:
    using DomainError::DomainError;
};

/// log|phi_Q(beta) - alpha|_v / q^(d deg Q), with the zero polynomial counted
/// as degree 0.
mpq_class log_distance_ratio(const DrinfeldModule& M, const RatK& beta, const RatK& alpha, const Poly& Q,
                             const Place& v);

/// True iff every sample's exact local height at v has denominator dividing
/// q^(d k)(q^d - 1), k its escape step, and is an integer at good-reduction
/// finite places.  Throws DomainError on samples that are not Exact.
bool denominator_bound_check(const DrinfeldModule& M, const std::vector<RatK>& samples, const Place& v,
                             const HeightOptions& opts = {});

/// q^(d k)(q^d - 1) for the place/step of a result (1 at good-reduction places).
mpz_class denominator_bound(const DrinfeldModule& M, const Place& v, const LocalHeightResult& r);

mpz_class ipow(std::uint64_t base, std::uint64_t exp);

}  // namespace drinfeld
