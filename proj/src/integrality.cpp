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

#include "drinfeld/integrality.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

#include <json.hpp>

#include "drinfeld/error.hpp"
#include "drinfeld/text.hpp"

namespace drinfeld {

namespace {

template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += workers) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

int tuple_max_degree(const std::vector<Poly>& tuple) {
    int m = -1;
    for (const auto& P : tuple) m = std::max(m, P.degree());
    return m;
}

std::vector<Poly> finite_primes(const PlaceSet& S) {
    std::vector<Poly> out;
    for (const auto& v : S)
        if (v.is_finite()) out.push_back(v.prime());
    return out;
}

/// Fills ratios, exceptional and collision flags, and the summary statistics.
void finish_rows(ExperimentReport& rep, const DrinfeldModule& M, const RatK& alpha, const PlaceSet& S,
                 int threads) {
    parallel_for(rep.rows.size(), threads, [&](std::size_t i) {
        ReportRow& row = rep.rows[i];
        row.s_integral = s_integral(row.point, alpha, S);
        const RatK diff = row.point - alpha;
        row.exceptional = diff.is_zero();
        row.ratios.assign(rep.probe.size(), std::nullopt);
        if (row.exceptional) return;
        const mpz_class w = tuple_weight(M, row.tuple);
        for (std::size_t j = 0; j < rep.probe.size(); ++j) {
            mpq_class r(log_abs(diff, rep.probe[j]), w);
            r.canonicalize();
            row.ratios[j] = r;
        }
    });

    std::set<RatK> seen;
    int top = -1;
    for (const auto& row : rep.rows) top = std::max(top, tuple_max_degree(row.tuple));
    rep.stats.assign(rep.probe.size(), {});
    for (auto& st : rep.stats) {
        st.running_min.reserve(rep.rows.size());
        st.running_max.reserve(rep.rows.size());
    }
    for (auto& row : rep.rows) {
        row.collision = !seen.insert(row.point).second;
        if (row.collision) ++rep.collisions;
        if (row.exceptional) ++rep.exceptional_rows;
        const bool tail = tuple_max_degree(row.tuple) == top;
        for (std::size_t j = 0; j < rep.probe.size(); ++j) {
            RatioStats& st = rep.stats[j];
            std::optional<mpq_class> lo = st.running_min.empty() ? std::nullopt : st.running_min.back();
            std::optional<mpq_class> hi = st.running_max.empty() ? std::nullopt : st.running_max.back();
            if (const auto& r = row.ratios[j]) {
                if (!lo || *r < *lo) lo = *r;
                if (!hi || *r > *hi) hi = *r;
                if (tail) {
                    if (!st.tail_min || *r < *st.tail_min) st.tail_min = *r;
                    if (!st.tail_max || *r > *st.tail_max) st.tail_max = *r;
                }
            }
            st.running_min.push_back(lo);
            st.running_max.push_back(hi);
        }
    }
}

void summarize_caps(ExperimentReport& rep, std::vector<int> caps) {
    std::optional<std::uint64_t> previous;
    for (int cap : caps) {
        CapSummary s;
        s.cap = cap;
        std::set<RatK> points;
        for (const auto& row : rep.rows) {
            if (tuple_max_degree(row.tuple) > cap) continue;
            ++s.tuples;
            if (!row.s_integral) continue;
            ++s.s_integral_tuples;
            points.insert(row.point);
        }
        s.s_integral_points = points.size();
        s.stable = previous && *previous == s.s_integral_points;
        previous = s.s_integral_points;
        rep.summary.push_back(s);
    }
}

}  // namespace

PlaceSet::PlaceSet(std::vector<Place> places) : places_(std::move(places)) {
    std::sort(places_.begin(), places_.end());
    places_.erase(std::unique(places_.begin(), places_.end()), places_.end());
}

void PlaceSet::insert(const Place& v) {
    auto it = std::lower_bound(places_.begin(), places_.end(), v);
    if (it == places_.end() || *it != v) places_.insert(it, v);
}

bool PlaceSet::contains(const Place& v) const { return std::binary_search(places_.begin(), places_.end(), v); }

bool PlaceSet::subset_of(const PlaceSet& other) const {
    return std::all_of(places_.begin(), places_.end(), [&](const Place& v) { return other.contains(v); });
}

bool s_integral(const RatK& beta, const RatK& alpha, const PlaceSet& S) {
    const RatK x = beta - alpha;
    // |0|_v = 0 < 1 at every place outside S where alpha is integral, and
    // there are always such places.
    if (x.is_zero()) return false;

    std::vector<Poly> strip = finite_primes(S);
    std::vector<Poly> alpha_poles;
    if (alpha.den().degree() > 0)
        for (auto& [P, m] : factor(alpha.den())) alpha_poles.push_back(P);
    const bool alpha_pole_at_inf = alpha.num().degree() > alpha.den().degree();
    for (const auto& P : alpha_poles)
        if (std::find(strip.begin(), strip.end(), P) == strip.end()) strip.push_back(P);

    // First clause at finite places: no prime outside S and poles(alpha)
    // divides the numerator of beta - alpha.
    if (x.num().degree() > 0 && factor_with_basis(x.num(), strip).cofactor.degree() > 0) return false;
    // First clause at infinity.
    const Place inf = Place::infinite();
    if (!S.contains(inf) && !alpha_pole_at_inf && x.den().degree() > x.num().degree()) return false;

    // Second clause at the poles of alpha outside S.
    for (const auto& P : alpha_poles)
        if (!S.contains(Place::finite(P)) && beta.den().degree() > 0 && beta.den().divisible_by(P)) return false;
    if (alpha_pole_at_inf && !S.contains(inf) && beta.num().degree() > beta.den().degree()) return false;
    return true;
}

SubmoduleSpec make_submodule(std::shared_ptr<const DrinfeldModule> module, std::vector<RatK> generators,
                             int torsion_cap) {
    if (!module) throw DomainError("submodule needs a Drinfeld module");
    if (generators.empty()) throw DomainError("submodule needs at least one generator");
    SubmoduleSpec g;
    g.module = std::move(module);
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i].is_zero()) throw DomainError("generator " + std::to_string(i + 1) + " is zero");
    g.generators = std::move(generators);
    for (const auto& gen : g.generators) {
        auto order = torsion_annihilator(*g.module, gen, torsion_cap, 1 << 16);
        if (order)
            g.warnings.push_back("generator " + format_ratk(gen) + " is torsion of order " + format_poly(*order));
        g.torsion_orders.push_back(std::move(order));
    }
    g.torsion_free_checked = true;
    return g;
}

mpz_class tuple_weight(const DrinfeldModule& M, const std::vector<Poly>& tuple) {
    mpz_class w = 0;
    for (const auto& P : tuple) w += ipow(M.q(), std::uint64_t(M.rank()) * std::max(P.degree(), 0));
    return w;
}

std::vector<SubmodulePoint> enumerate_submodule(const SubmoduleSpec& gamma, int deg_cap,
                                                const EnumerationLimits& limits) {
    if (deg_cap < 0) throw DomainError("deg_cap must be >= 0");
    const DrinfeldModule& M = *gamma.module;
    const FieldPtr& F = M.field();
    const std::size_t r = gamma.generators.size();
    const std::vector<Poly> polys = enumerate_polys(F, deg_cap, false);
    const std::size_t N = polys.size();

    std::uint64_t count = 1;
    for (std::size_t i = 0; i < r; ++i) {
        if (count > limits.max_rows / N)
            throw ResourceError("enumeration of " + std::to_string(r) + " generators up to degree " +
                                std::to_string(deg_cap) + " exceeds max_rows " + std::to_string(limits.max_rows));
        count *= N;
    }

    // Points are F_q-combinations of the orbit points phi_{t^k}(gamma_i);
    // put all of them over one denominator.
    std::vector<std::vector<RatK>> orbits;
    for (const auto& g : gamma.generators) {
        try {
            orbits.push_back(M.orbit(g, deg_cap, limits.max_point_degree));
        } catch (const ResourceError& e) {
            throw ResourceError("tuples with a component of degree up to " + std::to_string(deg_cap) +
                                " on generator " + format_ratk(g) + ": " + e.what());
        }
    }
    Poly L = Poly::constant(F, 1);
    for (const auto& o : orbits)
        for (const auto& w : o) L = lcm(L, w.den());
    if (L.degree() > limits.max_point_degree)
        throw ResourceError("common denominator degree " + std::to_string(L.degree()) + " exceeds max_point_degree");
    std::vector<std::vector<Poly>> numer(r);
    for (std::size_t i = 0; i < r; ++i)
        for (const auto& w : orbits[i]) numer[i].push_back(w.num() * L.exact_div(w.den()));

    std::vector<std::vector<std::size_t>> index(count, std::vector<std::size_t>(r));
    for (std::uint64_t n = 0; n < count; ++n) {
        std::uint64_t m = n;
        for (std::size_t i = r; i-- > 0;) {
            index[n][i] = m % N;
            m /= N;
        }
    }
    auto max_deg = [&](const std::vector<std::size_t>& ix) {
        int d = -1;
        for (auto j : ix) d = std::max(d, polys[j].degree());
        return d;
    };
    std::stable_sort(index.begin(), index.end(), [&](const auto& a, const auto& b) {
        const int da = max_deg(a);
        const int db = max_deg(b);
        if (da != db) return da < db;
        return a < b;
    });

    std::vector<SubmodulePoint> out(count, SubmodulePoint{{}, RatK(F)});
    parallel_for(count, limits.threads, [&](std::size_t n) {
        Poly num(F);
        std::vector<Poly> tuple;
        for (std::size_t i = 0; i < r; ++i) {
            const Poly& P = polys[index[n][i]];
            tuple.push_back(P);
            for (std::size_t k = 0; k < P.coeffs().size(); ++k)
                if (P.coeffs()[k] != 0) num += numer[i][k].scaled(P.coeffs()[k]);
        }
        out[n] = SubmodulePoint{std::move(tuple), RatK(std::move(num), L)};
    });
    return out;
}

PlaceSet default_probe_set(const SubmoduleSpec& gamma, const RatK& alpha, const PlaceSet& S) {
    PlaceSet out = S;
    out.insert(Place::infinite());
    for (const auto& v : gamma.module->bad_places()) out.insert(v);
    if (!alpha.is_zero())
        for (const auto& [v, val] : support(alpha)) out.insert(v);
    for (const auto& g : gamma.generators)
        for (const auto& [v, val] : support(g)) out.insert(v);
    return out;
}

bool ExperimentReport::stabilized() const {
    if (summary.size() < 2) return false;
    for (std::size_t i = 1; i < summary.size(); ++i)
        if (summary[i].s_integral_points < summary[i - 1].s_integral_points) return false;
    return summary.back().s_integral_points == summary[summary.size() - 2].s_integral_points;
}

std::optional<Place> ExperimentReport::argmax_place() const {
    std::optional<Place> best;
    std::optional<mpq_class> best_val;
    for (std::size_t j = 0; j < probe.size() && j < stats.size(); ++j) {
        if (stats[j].running_max.empty() || !stats[j].running_max.back()) continue;
        const mpq_class& v = *stats[j].running_max.back();
        if (!best_val || v > *best_val) {
            best_val = v;
            best = probe[j];
        }
    }
    return best;
}

std::optional<std::size_t> ExperimentReport::probe_index(const Place& v) const {
    for (std::size_t j = 0; j < probe.size(); ++j)
        if (probe[j] == v) return j;
    return std::nullopt;
}

ExperimentReport siegel_experiment(const SubmoduleSpec& gamma, const RatK& alpha, const PlaceSet& S,
                                   const std::vector<int>& deg_caps, const EnumerationLimits& limits) {
    if (deg_caps.empty()) throw DomainError("siegel experiment needs at least one degree cap");
    ExperimentReport rep;
    rep.kind = "siegel";
    rep.warnings = gamma.warnings;
    rep.probe = default_probe_set(gamma, alpha, S).places();
    const int top = *std::max_element(deg_caps.begin(), deg_caps.end());
    for (auto& sp : enumerate_submodule(gamma, top, limits))
        rep.rows.push_back(ReportRow{std::move(sp.tuple), std::move(sp.point), false, false, false, {}});
    finish_rows(rep, *gamma.module, alpha, S, limits.threads);
    summarize_caps(rep, deg_caps);
    return rep;
}

ExperimentReport silverman_experiment(std::shared_ptr<const DrinfeldModule> module, const RatK& beta,
                                      const RatK& alpha, const PlaceSet& S, int deg_cap,
                                      const EnumerationLimits& limits, const HeightOptions& height_opts) {
    if (deg_cap < 0) throw DomainError("deg_cap must be >= 0");
    if (beta.is_zero()) throw DomainError("silverman experiment needs a nonzero beta");
    const CanonicalHeight h = canonical_height(*module, beta, height_opts);
    SubmoduleSpec gamma;
    gamma.module = module;
    gamma.generators = {beta};
    ExperimentReport rep;
    rep.kind = "silverman";
    if (h.certainty == Certainty::Exact && h.value == 0)
        rep.warnings.push_back("beta = " + format_ratk(beta) + " is torsion (canonical height 0)");
    else if (h.value == 0)
        rep.warnings.push_back("beta = " + format_ratk(beta) + ": positive canonical height not certified");
    rep.probe = default_probe_set(gamma, alpha, S).places();
    for (auto& sp : enumerate_submodule(gamma, deg_cap, limits))
        rep.rows.push_back(ReportRow{std::move(sp.tuple), std::move(sp.point), false, false, false, {}});
    finish_rows(rep, *module, alpha, S, limits.threads);
    std::vector<int> caps(static_cast<std::size_t>(deg_cap) + 1);
    std::iota(caps.begin(), caps.end(), 0);
    summarize_caps(rep, caps);
    return rep;
}

ExperimentReport ratio_series(const SubmoduleSpec& gamma, const RatK& alpha, const PlaceSet& probe,
                              const std::vector<std::vector<Poly>>& tuples, const EnumerationLimits& limits,
                              const std::optional<PlaceSet>& S) {
    const DrinfeldModule& M = *gamma.module;
    std::set<std::vector<Poly>> distinct;
    for (const auto& tp : tuples) {
        if (tp.size() != gamma.generators.size())
            throw DomainError("tuple " + format_tuple(tp) + " does not match the number of generators");
        if (!distinct.insert(tp).second) throw DomainError("tuple " + format_tuple(tp) + " is repeated");
    }
    ExperimentReport rep;
    rep.kind = "ratios";
    rep.warnings = gamma.warnings;
    rep.probe = probe.places();
    rep.rows.resize(tuples.size(), ReportRow{{}, RatK(M.field()), false, false, false, {}});
    parallel_for(tuples.size(), limits.threads, [&](std::size_t n) {
        RatK point(M.field());
        for (std::size_t i = 0; i < tuples[n].size(); ++i) {
            point += M.apply(tuples[n][i], gamma.generators[i]);
            if (point.height_degree() > limits.max_point_degree)
                throw ResourceError("point of tuple " + format_tuple(tuples[n]) + " exceeds max_point_degree");
        }
        rep.rows[n].tuple = tuples[n];
        rep.rows[n].point = std::move(point);
    });
    finish_rows(rep, M, alpha, S ? *S : probe, limits.threads);
    return rep;
}

std::string format_tuple(const std::vector<Poly>& tuple) {
    std::string out;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) out += ';';
        out += format_poly(tuple[i]);
    }
    return out;
}

void write_csv(const ExperimentReport& report, std::ostream& out) {
    out << "tuple,point_num_deg,point_den_deg,s_integral";
    for (const auto& v : report.probe) out << ",ratio@" << format_place(v);
    out << '\n';
    for (const auto& row : report.rows) {
        out << format_tuple(row.tuple) << ',' << row.point.num().degree() << ',' << row.point.den().degree() << ','
            << (row.s_integral ? "true" : "false");
        for (const auto& r : row.ratios) out << ',' << (r ? format_rational(*r) : std::string("exceptional"));
        out << '\n';
    }
}

std::string summary_json(const ExperimentReport& report) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["experiment"] = report.kind;
    ordered_json counts = ordered_json::object();
    ordered_json tuples = ordered_json::object();
    ordered_json int_tuples = ordered_json::object();
    for (const auto& s : report.summary) {
        counts[std::to_string(s.cap)] = s.s_integral_points;
        tuples[std::to_string(s.cap)] = s.tuples;
        int_tuples[std::to_string(s.cap)] = s.s_integral_tuples;
    }
    j["counts"] = counts;
    j["tuples"] = tuples;
    j["s_integral_tuples"] = int_tuples;
    j["stabilized"] = report.stabilized();
    j["rows"] = report.rows.size();
    j["collisions"] = report.collisions;
    j["exceptional_rows"] = report.exceptional_rows;
    ordered_json probe = ordered_json::array();
    for (const auto& v : report.probe) probe.push_back(format_place(v));
    j["probe"] = probe;
    auto opt = [](const std::optional<mpq_class>& r) -> ordered_json {
        return r ? ordered_json(format_rational(*r)) : ordered_json(nullptr);
    };
    ordered_json rmin = ordered_json::object();
    ordered_json rmax = ordered_json::object();
    ordered_json tmin = ordered_json::object();
    ordered_json tmax = ordered_json::object();
    for (std::size_t k = 0; k < report.probe.size() && k < report.stats.size(); ++k) {
        const auto& st = report.stats[k];
        const std::string key = format_place(report.probe[k]);
        rmin[key] = opt(st.running_min.empty() ? std::nullopt : st.running_min.back());
        rmax[key] = opt(st.running_max.empty() ? std::nullopt : st.running_max.back());
        tmin[key] = opt(st.tail_min);
        tmax[key] = opt(st.tail_max);
    }
    j["ratio_min"] = rmin;
    j["ratio_max"] = rmax;
    j["ratio_tail_min"] = tmin;
    j["ratio_tail_max"] = tmax;
    const auto arg = report.argmax_place();
    j["argmax_place"] = arg ? ordered_json(format_place(*arg)) : ordered_json(nullptr);
    j["warnings"] = report.warnings;
    return j.dump(2) + "\n";
}

}  // namespace drinfeld
