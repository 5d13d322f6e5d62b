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

#include "drinfeld/commands.hpp"

#include <sstream>

#include "drinfeld/text.hpp"

namespace drinfeld {

namespace {

const char* status_name(HeightStatus s) { return s == HeightStatus::Exact ? "Exact" : "UpperBound"; }

const char* route_name(HeightRoute r) {
    switch (r) {
        case HeightRoute::Zero: return "zero";
        case HeightRoute::GoodReduction: return "good_reduction";
        case HeightRoute::Escape: return "escape";
        case HeightRoute::AnnulusEscape: return "annulus_escape";
        case HeightRoute::Contraction: return "contraction";
        case HeightRoute::Periodic: return "periodic";
        case HeightRoute::Capped: return "capped";
    }
    return "?";
}

std::vector<RatK> read_points(const Config& c, const FieldPtr& F) {
    if (c.points.empty()) throw ConfigError("/points", "this command needs at least one point");
    std::vector<RatK> out;
    for (std::size_t i = 0; i < c.points.size(); ++i)
        out.push_back(config_point(c, F, "/points/" + std::to_string(i), c.points[i]));
    return out;
}

RatK required_point(const Config& c, const FieldPtr& F, const std::optional<std::string>& s, const char* name) {
    if (!s) throw ConfigError(std::string("/") + name, "missing");
    return config_point(c, F, std::string("/") + name, *s);
}

SubmoduleSpec read_submodule(const Config& c, const std::shared_ptr<const DrinfeldModule>& M) {
    if (c.generators.empty()) throw ConfigError("/generators", "at least one generator is required");
    std::vector<RatK> gens;
    for (std::size_t i = 0; i < c.generators.size(); ++i) {
        gens.push_back(config_point(c, M->field(), "/generators/" + std::to_string(i), c.generators[i]));
        if (gens.back().is_zero()) throw ConfigError("/generators/" + std::to_string(i), "generator is zero");
    }
    return make_submodule(M, std::move(gens), c.caps.torsion_cap);
}

std::string csv_text(const ExperimentReport& rep) {
    std::ostringstream out;
    write_csv(rep, out);
    return out.str();
}

void describe_report(std::ostringstream& out, const ExperimentReport& rep) {
    for (const auto& w : rep.warnings) out << "warning: " << w << '\n';
    for (const auto& s : rep.summary)
        out << "cap " << s.cap << ": " << s.tuples << " tuples, " << s.s_integral_points
            << " distinct S-integral points (" << s.s_integral_tuples << " tuples)" << (s.stable ? ", stable" : "")
            << '\n';
    if (!rep.summary.empty())
        out << "verdict: " << (rep.stabilized() ? "counts stabilized" : "counts not yet stable") << '\n';
    out << "rows: " << rep.rows.size() << ", collisions: " << rep.collisions
        << ", exceptional: " << rep.exceptional_rows << '\n';
    for (std::size_t k = 0; k < rep.probe.size() && k < rep.stats.size(); ++k) {
        const auto& st = rep.stats[k];
        auto show = [](const std::optional<mpq_class>& r) { return r ? format_rational(*r) : std::string("-"); };
        out << "ratio@" << format_place(rep.probe[k]) << ": running min "
            << show(st.running_min.empty() ? std::nullopt : st.running_min.back()) << ", running max "
            << show(st.running_max.empty() ? std::nullopt : st.running_max.back()) << '\n';
    }
    if (auto a = rep.argmax_place()) out << "largest running max at " << format_place(*a) << '\n';
}

}  // namespace

CommandOutput cmd_heights(const Config& c) {
    const auto M = c.module();
    const FieldPtr F = M->field();
    const auto points = read_points(c, F);
    const PlaceSet extra = config_places(c, F, "/places", c.places);
    const HeightOptions opts = c.height_options();

    std::ostringstream csv, out;
    csv << "point,place,status,value,denominator,iterations,route\n";
    for (const auto& x : points) {
        const std::string px = format_ratk(x);
        csv << px << ",weil,Exact," << format_rational(weil_height(x)) << ",1,0,closed_form\n";
        PlaceSet places(height_candidate_places(*M, x));
        for (const auto& v : extra) places.insert(v);
        mpq_class total = 0, upper = 0;
        bool exact = true;
        for (const auto& v : places) {
            const LocalHeightResult r = local_canonical_height(*M, x, v, opts);
            csv << px << ',' << format_place(v) << ',' << status_name(r.status) << ',' << format_rational(r.value)
                << ',' << r.value.get_den().get_str() << ',' << r.iterations_used << ',' << route_name(r.route) << '\n';
            upper += r.value;
            if (r.exact())
                total += r.value;
            else
                exact = false;
        }
        csv << px << ",total," << (exact ? "Exact" : "UpperBound") << ',' << format_rational(upper) << ','
            << upper.get_den().get_str() << ",0,sum\n";
        out << "h^(" << px << ") = " << format_rational(upper)
            << (exact ? " (exact)" : " (upper bound; exact part " + format_rational(total) + ")") << '\n';
    }
    return {out.str(), {{"heights.csv", csv.str()}}};
}

CommandOutput cmd_torsion(const Config& c) {
    const auto M = c.module();
    const FieldPtr F = M->field();
    const auto points = read_points(c, F);
    std::ostringstream csv, out;
    csv << "point,order,height_lower,height_upper,status,agree\n";
    for (const auto& x : points) {
        const auto order = torsion_annihilator(*M, x, c.caps.torsion_cap, c.caps.max_height_degree);
        const CanonicalHeight h = canonical_height(*M, x, c.height_options());
        const bool exact = h.certainty == Certainty::Exact;
        std::string agree;
        if (order) {
            // A torsion point has canonical height 0, and the lower bound
            // value is always certified.
            if (h.value != 0)
                throw InvariantError("point " + format_ratk(x) + " has order " + format_poly(*order) +
                                     " but canonical height " + format_rational(h.value));
            agree = exact ? "yes" : "undetermined";
        } else if (h.value > 0) {
            agree = "yes";
        } else if (exact) {
            agree = "torsion_beyond_cap";
        } else {
            agree = "undetermined";
        }
        const std::string hs = exact ? format_rational(h.value)
                                     : "[" + format_rational(h.value) + "," + format_rational(h.upper) + "]";
        csv << format_ratk(x) << ',' << (order ? format_poly(*order) : std::string("none")) << ','
            << format_rational(h.value) << ',' << format_rational(h.upper) << ','
            << (exact ? "Exact" : "UpperBound") << ',' << agree << '\n';
        out << format_ratk(x) << ": ";
        if (order)
            out << "order " << format_poly(*order);
        else
            out << "nontorsion up to degree " << c.caps.torsion_cap;
        out << ", h^ " << (exact ? "= " : "in ") << hs << ", agree: " << agree << '\n';
    }
    return {out.str(), {{"torsion.csv", csv.str()}}};
}

CommandOutput cmd_orbit(const Config& c) {
    const auto M = c.module();
    const FieldPtr F = M->field();
    const auto points = read_points(c, F);
    PlaceSet places = config_places(c, F, "/places", c.places);
    places.insert(Place::infinite());
    std::ostringstream csv, out;
    csv << "point,step,value,weil_height";
    for (const auto& v : places) csv << ",log@" << format_place(v);
    csv << '\n';
    for (const auto& x : points) {
        const auto orbit = M->orbit(x, c.caps.deg_cap, c.caps.max_point_degree);
        for (std::size_t n = 0; n < orbit.size(); ++n) {
            csv << format_ratk(x) << ',' << n << ',' << format_ratk(orbit[n]) << ','
                << format_rational(weil_height(orbit[n]));
            for (const auto& v : places) {
                const LogAbs l = log_abs(orbit[n], v);
                csv << ',' << (l == kLogOfZero ? std::string("-inf") : std::to_string(l));
            }
            csv << '\n';
        }
        out << format_ratk(x) << ": " << orbit.size() << " orbit points, final Weil height "
            << format_rational(weil_height(orbit.back())) << '\n';
    }
    return {out.str(), {{"orbit.csv", csv.str()}}};
}

CommandOutput cmd_siegel(const Config& c) {
    const auto M = c.module();
    const SubmoduleSpec gamma = read_submodule(c, M);
    const RatK alpha = required_point(c, M->field(), c.alpha, "alpha");
    const PlaceSet S = config_places(c, M->field(), "/S", c.S);
    std::vector<int> caps = c.deg_caps;
    if (caps.empty())
        for (int d = 0; d <= c.caps.deg_cap; ++d) caps.push_back(d);
    const ExperimentReport rep = siegel_experiment(gamma, alpha, S, caps, c.limits());
    std::ostringstream out;
    describe_report(out, rep);
    return {out.str(), {{"siegel.csv", csv_text(rep)}, {"siegel_summary.json", summary_json(rep)}}};
}

CommandOutput cmd_silverman(const Config& c) {
    const auto M = c.module();
    const RatK beta = required_point(c, M->field(), c.beta, "beta");
    if (beta.is_zero()) throw ConfigError("/beta", "beta must be nonzero");
    const RatK alpha = required_point(c, M->field(), c.alpha, "alpha");
    const PlaceSet S = config_places(c, M->field(), "/S", c.S);
    const ExperimentReport rep =
        silverman_experiment(M, beta, alpha, S, c.caps.deg_cap, c.limits(), c.height_options());
    std::ostringstream out;
    describe_report(out, rep);
    return {out.str(), {{"silverman.csv", csv_text(rep)}, {"silverman_summary.json", summary_json(rep)}}};
}

CommandOutput cmd_ratios(const Config& c) {
    const auto M = c.module();
    const FieldPtr F = M->field();
    const SubmoduleSpec gamma = read_submodule(c, M);
    const RatK alpha = required_point(c, F, c.alpha, "alpha");
    const PlaceSet S = config_places(c, F, "/S", c.S);
    const PlaceSet probe = c.probe ? config_places(c, F, "/probe", *c.probe) : default_probe_set(gamma, alpha, S);
    std::vector<std::vector<Poly>> tuples;
    if (c.tuples.empty()) {
        for (auto& sp : enumerate_submodule(gamma, c.caps.deg_cap, c.limits())) tuples.push_back(sp.tuple);
    } else {
        for (std::size_t i = 0; i < c.tuples.size(); ++i) {
            std::vector<Poly> tp;
            for (std::size_t k = 0; k < c.tuples[i].size(); ++k) {
                const std::string field = "/tuples/" + std::to_string(i) + "/" + std::to_string(k);
                try {
                    tp.push_back(parse_poly(F, c.tuples[i][k]));
                } catch (const std::exception& e) {
                    throw ConfigError(field, e.what());
                }
            }
            if (tp.size() != gamma.generators.size())
                throw ConfigError("/tuples/" + std::to_string(i), "tuple length differs from the generator count");
            tuples.push_back(std::move(tp));
        }
    }
    ExperimentReport rep;
    try {
        rep = ratio_series(gamma, alpha, probe, tuples, c.limits(), c.S.empty() ? std::nullopt : std::optional(S));
    } catch (const DomainError& e) {
        throw ConfigError("/tuples", e.what());
    }
    std::ostringstream out;
    describe_report(out, rep);
    return {out.str(), {{"ratios.csv", csv_text(rep)}, {"ratios_summary.json", summary_json(rep)}}};
}

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {"heights", "torsion", "orbit", "siegel", "silverman", "ratios"};
    return names;
}

CommandOutput run_command(const std::string& name, const Config& c) {
    if (name == "heights") return cmd_heights(c);
    if (name == "torsion") return cmd_torsion(c);
    if (name == "orbit") return cmd_orbit(c);
    if (name == "siegel") return cmd_siegel(c);
    if (name == "silverman") return cmd_silverman(c);
    if (name == "ratios") return cmd_ratios(c);
    throw ConfigError("", "unknown command " + name);
}

}  // namespace drinfeld
