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

#include "drinfeld/heights.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "drinfeld/error.hpp"

namespace drinfeld {

mpz_class ipow(std::uint64_t base, std::uint64_t exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

std::string format_rational(const mpq_class& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

HeightValue weil_height(const RatK& x) {
    if (x.is_zero()) return 0;
    HeightValue h = 0;
    for (const auto& [v, val] : support(x)) {
        const std::int64_t l = -val * v.degree();
        if (l > 0) h += l;
    }
    return h;
}

HeightValue weil_height_closed_form(const RatK& x) { return x.height_degree(); }

namespace {

struct PlaceData {
    std::vector<std::optional<std::int64_t>> logs;  // L_i, empty for a_i = 0
    std::int64_t lead_log = 0;                      // L_d
    mpz_class qd;                                   // q^d
    mpq_class lead_shift;                           // L_d / (q^d - 1)
};

PlaceData place_data(const DrinfeldModule& M, const Place& v) {
    PlaceData pd;
    const auto& c = M.phi_t().coeffs();
    for (const auto& a : c) pd.logs.push_back(a.is_zero() ? std::nullopt : std::optional(log_abs(a, v)));
    pd.lead_log = *pd.logs.back();
    pd.qd = ipow(M.q(), static_cast<std::uint64_t>(M.rank()));
    pd.lead_shift = mpq_class(pd.lead_log, pd.qd - 1);
    pd.lead_shift.canonicalize();
    return pd;
}

Thresholds thresholds_from(const DrinfeldModule& M, const Place& v, const PlaceData& pd) {
    const int d = M.rank();
    Thresholds th;
    th.escape_log = 0;
    for (int i = 0; i < d; ++i) {
        if (!pd.logs[static_cast<std::size_t>(i)]) continue;
        mpq_class r(*pd.logs[static_cast<std::size_t>(i)] - pd.lead_log, pd.qd - ipow(M.q(), static_cast<unsigned>(i)));
        r.canonicalize();
        th.escape_log = std::max(th.escape_log, r);
    }
    th.escape_log = std::max(th.escape_log, mpq_class(-pd.lead_shift));
    if (v.is_finite()) {
        std::optional<mpq_class> n;
        for (int i = 1; i <= d; ++i) {
            if (!pd.logs[static_cast<std::size_t>(i)]) continue;
            mpq_class r(-*pd.logs[static_cast<std::size_t>(i)], ipow(M.q(), static_cast<unsigned>(i)) - 1);
            r.canonicalize();
            if (!n || r < *n) n = r;
        }
        th.contraction_log = n;
    }
    return th;
}

/// Shared orbit engine for local heights and Julia-set membership.
LocalHeightResult iterate_orbit(const DrinfeldModule& M, const RatK& x, const Place& v, const HeightOptions& opts) {
    if (opts.iter_cap < 0) throw DomainError("iter_cap must be >= 0");
    LocalHeightResult res;
    res.value = 0;
    if (x.is_zero()) return res;
    if (v.is_finite() && reduction_type(M, v) == Reduction::Good) {
        res.route = HeightRoute::GoodReduction;
        res.value = std::max<std::int64_t>(log_abs(x, v), 0);
        return res;
    }
    const PlaceData pd = place_data(M, v);
    const Thresholds th = thresholds_from(M, v, pd);

    auto settle = [&](const RatK& y, int step, int scale_exp, HeightRoute escape_route) -> bool {
        if (y.is_zero()) {
            res.route = HeightRoute::Zero;
            res.value = 0;
            return true;
        }
        const LogAbs l = log_abs(y, v);
        if (mpq_class(l) > th.escape_log) {
            res.route = escape_route;
            res.escape_step = scale_exp;
            mpq_class val = (mpq_class(l) + pd.lead_shift) / mpq_class(ipow(M.q(), std::uint64_t(M.rank()) * scale_exp));
            val.canonicalize();
            res.value = val;
            res.iterations_used = step;
            return true;
        }
        if (th.contraction_log && mpq_class(l) <= *th.contraction_log) {
            res.route = HeightRoute::Contraction;
            res.value = 0;
            res.iterations_used = step;
            return true;
        }
        return false;
    };

    std::set<RatK> seen;
    RatK y = x;
    int n = 0;
    for (;; ++n) {
        if (settle(y, n, n, HeightRoute::Escape)) return res;
        if (!seen.insert(y).second) {
            res.route = HeightRoute::Periodic;
            res.value = 0;
            res.iterations_used = n;
            return res;
        }
        if (n == opts.iter_cap) break;
        if (opts.max_degree > 0 && y.height_degree() * static_cast<long long>(pd.qd.get_ui()) > opts.max_degree) break;
        y = M.apply_t(y);
    }

    if (v.is_finite() && opts.annulus_cap > 0) {
        PolyEnumerator probes(M.field(), opts.annulus_cap, true);
        Poly P(M.field());
        while (probes.next(P)) {
            if (P.degree() < 1) continue;
            if (opts.max_degree > 0 &&
                static_cast<double>(x.height_degree()) * std::pow(static_cast<double>(pd.qd.get_ui()), P.degree()) >
                    opts.max_degree)
                break;
            const RatK z = M.apply(P, x);
            if (settle(z, n, P.degree(), HeightRoute::AnnulusEscape)) {
                if (res.route == HeightRoute::Zero) res.route = HeightRoute::Contraction;
                return res;
            }
        }
    }

    res.status = HeightStatus::UpperBound;
    res.route = HeightRoute::Capped;
    res.iterations_used = n;
    const mpq_class slack = abs(pd.lead_shift);
    mpq_class bound = (th.escape_log + slack) / mpq_class(ipow(M.q(), std::uint64_t(M.rank()) * n));
    bound.canonicalize();
    res.value = bound;
    return res;
}

}  // namespace

Thresholds thresholds(const DrinfeldModule& M, const Place& v) { return thresholds_from(M, v, place_data(M, v)); }

LocalHeightResult local_canonical_height(const DrinfeldModule& M, const RatK& x, const Place& v,
                                         const HeightOptions& opts) {
    return iterate_orbit(M, x, v, opts);
}

std::vector<Place> height_candidate_places(const DrinfeldModule& M, const RatK& x) {
    std::set<Place> s{Place::infinite()};
    s.insert(M.bad_places().begin(), M.bad_places().end());
    for (auto& v : poles(x)) s.insert(v);
    return {s.begin(), s.end()};
}

CanonicalHeight canonical_height(const DrinfeldModule& M, const RatK& x, const HeightOptions& opts) {
    CanonicalHeight out;
    out.value = 0;
    out.upper = 0;
    for (const auto& v : height_candidate_places(M, x)) {
        LocalHeightResult r = local_canonical_height(M, x, v, opts);
        if (r.exact()) out.value += r.value;
        else out.certainty = Certainty::LowerBoundOnly;
        out.upper += r.value;
        out.locals.emplace_back(v, std::move(r));
    }
    return out;
}

mpq_class naive_height_estimate(const DrinfeldModule& M, const RatK& x, int n, int max_degree) {
    if (n < 0) throw DomainError("n must be >= 0");
    const auto orbit = M.orbit(x, n, max_degree);
    mpq_class r(weil_height_closed_form(orbit.back()).get_num(), ipow(M.q(), std::uint64_t(M.rank()) * n));
    r.canonicalize();
    return r;
}

JuliaMembership in_filled_julia(const DrinfeldModule& M, const RatK& x, const Place& v, const HeightOptions& opts) {
    const LocalHeightResult r = iterate_orbit(M, x, v, opts);
    if (!r.exact()) return JuliaMembership::Undetermined;
    return r.value > 0 ? JuliaMembership::Outside : JuliaMembership::Inside;
}

mpq_class log_distance_ratio(const DrinfeldModule& M, const RatK& beta, const RatK& alpha, const Poly& Q,
                             const Place& v) {
    const RatK diff = M.apply(Q, beta) - alpha;
    if (diff.is_zero()) throw ExceptionalPoint("phi_Q(beta) equals alpha");
    const int deg = std::max(Q.degree(), 0);
    mpq_class r(log_abs(diff, v), ipow(M.q(), std::uint64_t(M.rank()) * deg));
    r.canonicalize();
    return r;
}

mpz_class denominator_bound(const DrinfeldModule& M, const Place& /*v*/, const LocalHeightResult& r) {
    if (r.route == HeightRoute::GoodReduction) return 1;
    const mpz_class qd = ipow(M.q(), static_cast<std::uint64_t>(M.rank()));
    return ipow(M.q(), std::uint64_t(M.rank()) * r.escape_step) * (qd - 1);
}

bool denominator_bound_check(const DrinfeldModule& M, const std::vector<RatK>& samples, const Place& v,
                             const HeightOptions& opts) {
    const bool good = v.is_finite() && reduction_type(M, v) == Reduction::Good;
    for (const auto& x : samples) {
        const LocalHeightResult r = local_canonical_height(M, x, v, opts);
        if (!r.exact()) throw DomainError("denominator check needs exact local heights");
        if (r.value < 0) return false;
        if (good) {
            if (r.value.get_den() != 1) return false;
            continue;
        }
        if (denominator_bound(M, v, r) % r.value.get_den() != 0) return false;
    }
    return true;
}

}  // namespace drinfeld
