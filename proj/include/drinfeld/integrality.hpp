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

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "drinfeld/heights.hpp"

namespace drinfeld {

/// Finite, duplicate-free, sorted set of places (infinity first).
class PlaceSet {
public:
    PlaceSet() = default;
    explicit PlaceSet(std::vector<Place> places);

    void insert(const Place& v);
    bool contains(const Place& v) const;
    std::size_t size() const { return places_.size(); }
    bool empty() const { return places_.empty(); }
    const std::vector<Place>& places() const { return places_; }
    auto begin() const { return places_.begin(); }
    auto end() const { return places_.end(); }
    bool subset_of(const PlaceSet& other) const;

    friend bool operator==(const PlaceSet& a, const PlaceSet& b) { return a.places_ == b.places_; }

private:
    std::vector<Place> places_;
};

/// beta is S-integral with respect to alpha (alpha, beta in K): at every
/// place v outside S, |alpha|_v <= 1 forces |beta - alpha|_v >= 1 and
/// |alpha|_v > 1 forces |beta|_v <= 1.  Decided by stripping the primes of S
/// and the poles of alpha from the numerator of beta - alpha; no full
/// factorization of beta is needed.
bool s_integral(const RatK& beta, const RatK& alpha, const PlaceSet& S);

/// The finitely generated phi-submodule <gamma_1, ..., gamma_r>.
struct SubmoduleSpec {
    std::shared_ptr<const DrinfeldModule> module;
    std::vector<RatK> generators;
    bool torsion_free_checked = false;
    /// Orders found for torsion generators (empty entries: none up to the cap).
    std::vector<std::optional<Poly>> torsion_orders;
    std::vector<std::string> warnings;

    int r() const { return static_cast<int>(generators.size()); }
};

/// Validates the generators (nonzero, r >= 1) and runs the torsion search on
/// each one up to torsion_cap, recording warnings for torsion generators.
SubmoduleSpec make_submodule(std::shared_ptr<const DrinfeldModule> module, std::vector<RatK> generators,
                             int torsion_cap = 4);

struct EnumerationLimits {
    /// Largest allowed degree (max of numerator/denominator) of a point.
    int max_point_degree = 1 << 14;
    std::uint64_t max_rows = 1u << 20;
    int threads = 1;
};

struct SubmodulePoint {
    std::vector<Poly> tuple;
    RatK point;
};

/// All q^(r(deg_cap+1)) tuples (P_1..P_r) with deg P_i <= deg_cap and their
/// points sum phi_{P_i}(gamma_i), ordered by max degree, then lexicographically.
std::vector<SubmodulePoint> enumerate_submodule(const SubmoduleSpec& gamma, int deg_cap,
                                                const EnumerationLimits& limits = {});

/// S, infinity, the bad places of phi and the supports of alpha and of every
/// generator.
PlaceSet default_probe_set(const SubmoduleSpec& gamma, const RatK& alpha, const PlaceSet& S);

/// Sum over the tuple of q^(d max(deg P_i, 0)).
mpz_class tuple_weight(const DrinfeldModule& M, const std::vector<Poly>& tuple);

struct ReportRow {
    std::vector<Poly> tuple;
    RatK point;
    bool s_integral = false;
    /// point == alpha: the log-distance is -infinity and the row is left out
    /// of ratio statistics.
    bool exceptional = false;
    /// Another tuple earlier in row order produced the same point.
    bool collision = false;
    /// log|point - alpha|_v / tuple_weight, aligned with the report's probe set.
    std::vector<std::optional<mpq_class>> ratios;
};

struct CapSummary {
    int cap = 0;
    std::uint64_t tuples = 0;
    std::uint64_t s_integral_tuples = 0;
    /// Distinct S-integral points among tuples with max degree <= cap.
    std::uint64_t s_integral_points = 0;
    /// Count equals the previous cap's count.
    bool stable = false;
};

struct RatioStats {
    /// Running minimum / maximum over the rows in row order (liminf / limsup
    /// proxies); empty when no row contributed.
    std::vector<std::optional<mpq_class>> running_min;
    std::vector<std::optional<mpq_class>> running_max;
    /// Minimum / maximum over the rows of the highest degree level only.
    std::optional<mpq_class> tail_min;
    std::optional<mpq_class> tail_max;
};

struct ExperimentReport {
    std::string kind;
    std::vector<Place> probe;
    std::vector<ReportRow> rows;
    std::vector<CapSummary> summary;
    /// Aligned with `probe`.
    std::vector<RatioStats> stats;
    std::uint64_t collisions = 0;
    std::uint64_t exceptional_rows = 0;
    std::vector<std::string> warnings;

    /// Weakly increasing counts that agree on the last two caps.
    bool stabilized() const;
    /// Probe place with the largest running maximum (first on ties).
    std::optional<Place> argmax_place() const;
    std::optional<std::size_t> probe_index(const Place& v) const;
};

ExperimentReport siegel_experiment(const SubmoduleSpec& gamma, const RatK& alpha, const PlaceSet& S,
                                   const std::vector<int>& deg_caps, const EnumerationLimits& limits = {});

ExperimentReport silverman_experiment(std::shared_ptr<const DrinfeldModule> module, const RatK& beta,
                                      const RatK& alpha, const PlaceSet& S, int deg_cap,
                                      const EnumerationLimits& limits = {}, const HeightOptions& height_opts = {});

/// Exact ratio sequences for explicitly given, pairwise distinct tuples.
/// Exceptional tuples (point == alpha) appear as empty entries.  The
/// s_integral column uses S when given, the probe set otherwise.
ExperimentReport ratio_series(const SubmoduleSpec& gamma, const RatK& alpha, const PlaceSet& probe,
                              const std::vector<std::vector<Poly>>& tuples, const EnumerationLimits& limits = {},
                              const std::optional<PlaceSet>& S = std::nullopt);

std::string format_tuple(const std::vector<Poly>& tuple);

/// CSV: tuple,point_num_deg,point_den_deg,s_integral,ratio@<place>,...
void write_csv(const ExperimentReport& report, std::ostream& out);
/// JSON summary; keys in a fixed order so equal reports serialize identically.
std::string summary_json(const ExperimentReport& report);

}  // namespace drinfeld
