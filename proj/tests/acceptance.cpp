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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"

using namespace drinfeld;
using namespace testutil;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Records the first failed expectation with a short explanation.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        ++total_;
        if (!ok && failure_.empty()) failure_ = what;
        if (!ok) ++failed_;
    }
    Outcome outcome(const std::string& summary) const {
        if (failed_ == 0) return {true, summary};
        return {false, std::to_string(failed_) + "/" + std::to_string(total_) + " checks failed; first: " + failure_};
    }

private:
    int total_ = 0;
    int failed_ = 0;
    std::string failure_;
};

std::string source_dir() { return DRINFELD_SOURCE_DIR; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::shared_ptr<const DrinfeldModule> module(std::uint32_t q, std::vector<std::string> phi_t) {
    return std::make_shared<const DrinfeldModule>(DrinfeldModule::from_strings(make_field(q), phi_t));
}

Outcome algebra_suite() {
    std::mt19937_64 rng(1001);
    Check c;
    struct Case {
        std::shared_ptr<const DrinfeldModule> M;
        int max_deg;
    };
    const std::vector<Case> cases = {{module(2, {"t", "1"}), 4}, {module(3, {"t", "1"}), 3},
                                     {module(2, {"t", "1", "1"}), 3}};
    int per_law = 0;
    for (const auto& [M, max_deg] : cases) {
        const FieldPtr F = M->field();
        for (int i = 0; i < 70; ++i, ++per_law) {
            const Poly Q = random_poly(rng, F, max_deg), R = random_poly(rng, F, max_deg);
            const TwistedPoly pq = phi_of(*M, Q), pr = phi_of(*M, R);
            const TwistedPoly pqr = phi_of(*M, Q * R);
            c.expect(pqr == twisted_compose(pq, pr), "phi_{QR} = phi_Q o phi_R");
            c.expect(phi_of(*M, Q + R) == twisted_add(pq, pr), "phi_{Q+R} = phi_Q + phi_R");
            if (!Q.is_zero()) c.expect(pq.tau_degree() == M->rank() * Q.degree(), "tau-degree law");
            else c.expect(pq.is_zero(), "phi_0 = 0");
            const RatK x = random_ratk(rng, F, 2);
            c.expect(twisted_compose(pq, pr).eval(x) == pq.eval(pr.eval(x)), "eval of composition");
        }
    }
    return c.outcome(std::to_string(per_law) + " cases per law over Carlitz F_2, Carlitz F_3, t+tau+tau^2 over F_2");
}

Outcome product_formula() {
    std::mt19937_64 rng(1002);
    Check c;
    int n = 0;
    for (std::uint32_t q : {2u, 3u, 5u}) {
        const FieldPtr F = make_field(q);
        for (int i = 0; i < 67; ++i, ++n) c.expect(product_formula_check(random_ratk(rng, F, 8, true)) == 0, "sum");
    }
    return c.outcome(std::to_string(n) + " random nonzero x, q in {2,3,5}, degrees <= 8");
}

Outcome weil_closed_form() {
    std::mt19937_64 rng(1003);
    Check c;
    int n = 0;
    for (std::uint32_t q : {2u, 3u, 5u}) {
        const FieldPtr F = make_field(q);
        for (int i = 0; i < 67; ++i, ++n) {
            const RatK x = random_ratk(rng, F, 8);
            c.expect(weil_height(x) == weil_height_closed_form(x), "place sum = max(deg num, deg den)");
        }
    }
    return c.outcome(std::to_string(n) + " random x agree exactly");
}

Outcome exact_heights() {
    Check c;
    const auto C3 = module(3, {"t", "1"});
    const auto C2 = module(2, {"t", "1"});
    const FieldPtr F3 = C3->field(), F2 = C2->field();
    struct Expect {
        std::shared_ptr<const DrinfeldModule> M;
        RatK x;
        mpq_class value;
    };
    const std::vector<Expect> expected = {{C3, K(F3, "1"), mpq_class(1, 3)}, {C3, K(F3, "t"), mpq_class(1)},
                                          {C2, K(F2, "1"), mpq_class(0)}};
    std::string values;
    for (const auto& e : expected) {
        const CanonicalHeight h = canonical_height(*e.M, e.x);
        c.expect(h.certainty == Certainty::Exact, "status Exact");
        c.expect(h.value == e.value, "height value");
        const int n = 3;
        mpq_class diff = naive_height_oracle(*e.M, e.x, n) - h.value;
        if (diff < 0) diff = -diff;
        mpq_class tol(1, ipow(e.M->q(), std::uint64_t(e.M->rank()) * n));
        c.expect(diff <= tol, "naive oracle at n = 3 within 1/q^(dn)");
        values += format_rational(h.value) + " ";
    }
    const auto order = torsion_annihilator(*C2, K(F2, "1"), 4);
    c.expect(order && *order == A(F2, "t^2+t"), "order of 1 under Carlitz F_2 is t^2+t");
    return c.outcome("h(1), h(t) over F_3 and h(1) over F_2 = " + values + "; order t^2+t");
}

// Random samples for the functoriality and denominator criteria.  Each entry
// keeps the local results of both heights.
struct FunctorialitySample {
    std::shared_ptr<const DrinfeldModule> M;
    CanonicalHeight hx, hy;
};

std::vector<FunctorialitySample>& functoriality_samples() {
    static std::vector<FunctorialitySample> samples;
    return samples;
}

Outcome functoriality() {
    std::mt19937_64 rng(1005);
    Check c;
    // Integral modules: good reduction everywhere, and bad reduction at (t).
    const std::vector<std::shared_ptr<const DrinfeldModule>> mods = {
        module(2, {"t", "1"}), module(3, {"t", "1"}), module(2, {"t", "1", "1"}), module(2, {"t", "t"}),
        module(3, {"t", "1", "t"}), module(3, {"t", "t"}), module(2, {"t", "1", "t^2"})};
    auto& samples = functoriality_samples();
    samples.clear();
    int attempts = 0, skipped = 0;
    while (samples.size() < 50 && attempts < 500) {
        const auto& M = mods[static_cast<std::size_t>(attempts++) % mods.size()];
        const Poly Q = random_poly(rng, M->field(), 2, true);
        RatK x = random_ratk(rng, M->field(), 3);
        // Half of the points get a pole at (t), where the bad modules live.
        if (attempts % 2 == 0) x = RatK(random_poly(rng, M->field(), 3), Poly::t(M->field()).pow(1 + rng() % 3));
        const CanonicalHeight hx = canonical_height(*M, x);
        const CanonicalHeight hy = canonical_height(*M, M->apply(Q, x));
        if (hx.certainty != Certainty::Exact || hy.certainty != Certainty::Exact) {
            ++skipped;
            continue;
        }
        const mpz_class scale = ipow(M->q(), std::uint64_t(M->rank()) * std::uint64_t(std::max(Q.degree(), 0)));
        c.expect(hy.value == scale * hx.value, "h(phi_Q x) = q^(d deg Q) h(x)");
        samples.push_back({M, hx, hy});
    }
    c.expect(samples.size() == 50, "50 all-Exact samples found");
    return c.outcome(std::to_string(samples.size()) + " exact samples (" + std::to_string(skipped) +
                     " skipped for UpperBound status)");
}

Outcome denominator_bounds() {
    Check c;
    int finite = 0, good = 0, fractional = 0;
    for (const auto& s : functoriality_samples()) {
        for (const CanonicalHeight* h : {&s.hx, &s.hy}) {
            for (const auto& [v, r] : h->locals) {
                if (!v.is_finite() || !r.exact()) continue;
                ++finite;
                c.expect(r.value >= 0, "nonnegative");
                if (reduction_type(*s.M, v) == Reduction::Good) {
                    ++good;
                    c.expect(r.value.get_den() == 1, "integer at good reduction");
                } else {
                    const mpz_class qd = ipow(s.M->q(), std::uint64_t(s.M->rank()));
                    const mpz_class bound = ipow(s.M->q(), std::uint64_t(s.M->rank()) * r.escape_step) * (qd - 1);
                    c.expect(bound % r.value.get_den() == 0, "denominator divides q^(dk)(q^d-1)");
                    fractional += r.value.get_den() != 1;
                }
            }
        }
    }
    c.expect(finite > good, "sample contains bad finite places");
    return c.outcome(std::to_string(finite) + " finite local heights (" + std::to_string(good) +
                     " at good reduction, " + std::to_string(fractional) + " non-integral at bad places)");
}

Outcome ratio_convergence() {
    Check c;
    const auto C3 = module(3, {"t", "1"});
    const FieldPtr F = C3->field();
    const Place inf = Place::infinite();
    for (int n = 1; n <= 5; ++n)
        c.expect(log_distance_ratio(*C3, K(F, "1"), K(F, "1"), Poly::monomial(F, 1, n), inf) == mpq_class(1, 3),
                 "ratio 1/3 for beta = 1");
    // beta = 1/t: phi_t(1/t) = 1 + 1/t^3 stays in the unit disc, escape at step 2.
    const RatK beta = K(F, "1/t");
    const LocalHeightResult r = local_canonical_height(*C3, beta, inf);
    c.expect(r.exact() && r.escape_step == 2 && r.value == mpq_class(1, 9), "h_inf(1/t) = 1/9 at step 2");
    std::string seq;
    for (int n = 0; n <= 6; ++n) {
        const mpq_class q = log_distance_ratio(*C3, beta, K(F, "1"), Poly::monomial(F, 1, n), inf);
        seq += format_rational(q) + " ";
        if (n >= r.escape_step)
            c.expect(q == r.value, "ratio equals h_inf past the escape step");
        else
            c.expect(q != r.value, "ratio differs before the escape step");
    }
    return c.outcome("beta=1: 1/3 for n=1..5; beta=1/t: " + seq);
}

Outcome s_integrality_oracle() {
    std::mt19937_64 rng(1008);
    Check c;
    int yes = 0, n = 0;
    for (std::uint32_t q : {2u, 3u, 5u}) {
        const FieldPtr F = make_field(q);
        const auto pool = enumerate_places(F, 2, true);
        for (int i = 0; i < 100; ++i, ++n) {
            std::vector<Place> chosen;
            for (const auto& v : pool)
                if (rng() % 3 == 0) chosen.push_back(v);
            const PlaceSet S(chosen);
            const RatK alpha = i % 4 == 0 ? RatK(F) : random_ratk(rng, F, 3);
            // Half the points are built from primes of S and poles of alpha,
            // so both outcomes occur often.
            RatK x = RatK::from_int(F, 1 + static_cast<long long>(rng() % (q - 1)));
            if (i % 2 == 0) {
                std::vector<Poly> primes;
                for (const auto& v : S)
                    if (v.is_finite()) primes.push_back(v.prime());
                for (const auto& [P, m] : factor(alpha.den().degree() > 0 ? alpha.den() : Poly::constant(F, 1)))
                    primes.push_back(P);
                for (const auto& P : primes) {
                    const int e = static_cast<int>(rng() % 5) - 2;
                    for (int k = 0; k < std::abs(e); ++k) x = e > 0 ? x * RatK(P) : x / RatK(P);
                }
                if (rng() % 3 == 0) x = x * RatK(random_poly(rng, F, 3, true));
            } else {
                x = random_ratk(rng, F, 20);
            }
            RatK beta = i % 10 == 9 ? alpha : alpha + x;
            while (beta.height_degree() > 20) beta = alpha + RatK::from_int(F, 1);
            const bool fast = s_integral(beta, alpha, S);
            c.expect(fast == s_integral_oracle(beta, alpha, S), "s_integral = oracle");
            yes += fast;
        }
    }
    return c.outcome(std::to_string(n) + " triples agree (" + std::to_string(yes) + " S-integral)");
}

struct SiegelRun {
    std::string name;
    ExperimentReport report;
    std::string csv, json;
};

std::vector<SiegelRun>& siegel_runs() {
    static std::vector<SiegelRun> runs;
    return runs;
}

Outcome siegel_desk_scale() {
    Check c;
    const auto C3 = module(3, {"t", "1"});
    const FieldPtr F = C3->field();
    PlaceSet S({Place::infinite()});
    auto& runs = siegel_runs();
    runs.clear();
    try {
        auto run = [&](const std::string& name, std::vector<std::string> gens, std::vector<int> caps) {
            std::vector<RatK> g;
            for (auto& s : gens) g.push_back(K(F, s));
            SiegelRun r{name, siegel_experiment(make_submodule(C3, g), K(F, "1"), S, caps), {}, {}};
            std::ostringstream csv;
            write_csv(r.report, csv);
            r.csv = csv.str();
            r.json = summary_json(r.report);
            runs.push_back(std::move(r));
        };
        run("siegel_carlitz3", {"1"}, {0, 1, 2, 3, 4, 5});
        run("siegel_rank2", {"1", "t+1"}, {0, 1, 2});
    } catch (const ResourceError& e) {
        c.expect(false, std::string("resource guard tripped: ") + e.what());
        return c.outcome("");
    }
    const auto& sum = runs[0].report.summary;
    for (std::size_t i = 1; i < sum.size(); ++i)
        c.expect(sum[i].s_integral_points >= sum[i - 1].s_integral_points, "weakly increasing counts");
    c.expect(sum.size() == 6 && sum[5].s_integral_points == sum[4].s_integral_points, "final two caps agree");
    c.expect(runs[1].report.summary.size() == 3, "rank-2 run completed");
    std::string counts;
    for (const auto& s : sum) counts += std::to_string(s.s_integral_points) + " ";
    for (const auto& r : runs) {
        c.expect(r.csv == read_file(source_dir() + "/tests/golden/" + r.name + ".csv"), r.name + " CSV = golden");
        c.expect(r.json == read_file(source_dir() + "/tests/golden/" + r.name + "_summary.json"),
                 r.name + " summary = golden");
    }
    return c.outcome("counts over caps 0..5: " + counts + "; rank-2 collisions " +
                     std::to_string(runs[1].report.collisions) + "; outputs match golden files");
}

Outcome ratio_charts() {
    Check c;
    std::string detail;
    const FieldPtr F3 = make_field(3);
    for (const char* name : {"siegel_carlitz3", "siegel_rank2"}) {
        const std::string base = source_dir() + "/tests/golden/" + name;
        const auto summary = nlohmann::json::parse(read_file(base + "_summary.json"));
        // Recompute the running minimum at infinity and the maxima straight
        // from the golden CSV.
        std::istringstream csv(read_file(base + ".csv"));
        std::string line;
        std::getline(csv, line);
        std::vector<std::string> header;
        {
            std::istringstream h(line);
            for (std::string cell; std::getline(h, cell, ',');) header.push_back(cell);
        }
        const auto inf_col = std::find(header.begin(), header.end(), "ratio@inf") - header.begin();
        std::optional<mpq_class> running_min;
        bool positive_max = false;
        int top_degree = 0;
        while (std::getline(csv, line)) {
            std::vector<std::string> cells;
            std::istringstream r(line);
            for (std::string cell; std::getline(r, cell, ',');) cells.push_back(cell);
            std::istringstream parts(cells[0]);
            for (std::string poly; std::getline(parts, poly, ';');)
                top_degree = std::max(top_degree, parse_poly(F3, poly).degree());
            for (std::size_t k = 4; k < cells.size(); ++k) {
                if (cells[k] == "exceptional") continue;
                const mpq_class v(cells[k]);
                if (v > 0) positive_max = true;
                if (static_cast<long>(k) == inf_col && (!running_min || v < *running_min)) running_min = v;
            }
        }
        c.expect(running_min.has_value(), std::string(name) + ": ratios at infinity present");
        if (!running_min) continue;
        const mpq_class floor(-1, ipow(3, static_cast<std::uint64_t>(top_degree)));
        c.expect(*running_min >= -1, std::string(name) + ": running min at inf >= -1");
        c.expect(*running_min >= floor, std::string(name) + ": final running min >= -1/q^(d cap)");
        c.expect(mpq_class(summary["ratio_min"]["inf"].get<std::string>()) == *running_min,
                 std::string(name) + ": summary running min matches CSV");
        c.expect(positive_max, std::string(name) + ": some probe place has running max > 0");
        c.expect(summary["argmax_place"].is_string(), std::string(name) + ": argmax place reported");
        detail += std::string(name) + ": min@inf " + format_rational(*running_min) + ", max@" +
                  summary["argmax_place"].get<std::string>() + " " +
                  summary["ratio_max"][summary["argmax_place"].get<std::string>()].get<std::string>() + "; ";
    }
    return c.outcome(detail);
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
        double limit_seconds;
    };
    const std::vector<Criterion> criteria = {
        {1, "algebra suite", algebra_suite, 30},
        {2, "product formula", product_formula, 10},
        {3, "Weil height closed form", weil_closed_form, 0},
        {4, "exact canonical heights", exact_heights, 5},
        {5, "functoriality", functoriality, 60},
        {6, "denominator bounds", denominator_bounds, 0},
        {7, "ratio convergence", ratio_convergence, 0},
        {8, "S-integrality oracle equivalence", s_integrality_oracle, 60},
        {9, "Siegel desk-scale runs", siegel_desk_scale, 300},
        {10, "ratio charts", ratio_charts, 0},
    };
    int failures = 0;
    for (const auto& cr : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = cr.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (cr.limit_seconds > 0 && secs > cr.limit_seconds) {
            o.pass = false;
            o.detail += " (over the " + std::to_string(static_cast<int>(cr.limit_seconds)) + " s budget)";
        }
        failures += !o.pass;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << "criterion " << cr.id << " [" << (o.pass ? "PASS" : "FAIL") << "] " << cr.name << " (" << timing
                  << "): " << o.detail << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
