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

#include "drinfeld/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "drinfeld/text.hpp"

namespace drinfeld {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string ptr(const std::string& parent, const std::string& key) { return parent + "/" + key; }

template <class T>
T get_as(const json& j, const std::string& field);

template <>
std::string get_as<std::string>(const json& j, const std::string& field) {
    if (j.is_string()) return j.get<std::string>();
    // Bare numbers are accepted as constants, e.g. "phi_t": ["t", 0, 1].
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw ConfigError(field, "expected a string");
}

template <>
long long get_as<long long>(const json& j, const std::string& field) {
    if (!j.is_number_integer()) throw ConfigError(field, "expected an integer");
    return j.get<long long>();
}

int get_int(const json& j, const std::string& field, long long lo, long long hi) {
    const long long v = get_as<long long>(j, field);
    if (v < lo || v > hi)
        throw ConfigError(field, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                                     std::to_string(hi) + "]");
    return static_cast<int>(v);
}

std::vector<std::string> get_strings(const json& j, const std::string& field) {
    if (!j.is_array()) throw ConfigError(field, "expected an array");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_as<std::string>(j[i], ptr(field, std::to_string(i))));
    return out;
}

void check_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || it.key() == a;
        if (!ok) throw ConfigError(ptr(where, it.key()), "unknown key");
    }
}

void read_module(const json& m, const std::string& where, Config& c) {
    if (m.contains("q")) {
        c.q = static_cast<std::uint32_t>(get_int(m["q"], ptr(where, "q"), 2, Field::kMaxOrder));
    } else if (m.contains("p")) {
        const int p = get_int(m["p"], ptr(where, "p"), 2, Field::kMaxOrder);
        const int e = m.contains("e") ? get_int(m["e"], ptr(where, "e"), 1, 16) : 1;
        std::uint64_t q = 1;
        for (int i = 0; i < e; ++i) {
            q *= static_cast<std::uint64_t>(p);
            if (q > Field::kMaxOrder) throw ConfigError(ptr(where, "e"), "field order exceeds 2^16");
        }
        c.q = static_cast<std::uint32_t>(q);
    }
    if (m.contains("modulus")) c.modulus = get_as<std::string>(m["modulus"], ptr(where, "modulus"));
    if (m.contains("phi_t")) c.phi_t = get_strings(m["phi_t"], ptr(where, "phi_t"));
}

}  // namespace

Config parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError("", std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("", "top level must be an object");
    check_keys(j, "",
               {"q", "p", "e", "modulus", "phi_t", "module", "points", "places", "generators", "alpha", "beta", "S",
                "probe", "tuples", "deg_caps", "caps", "threads"});
    Config c;
    read_module(j, "", c);
    if (j.contains("module")) {
        const json& m = j["module"];
        if (!m.is_object()) throw ConfigError("/module", "expected an object");
        check_keys(m, "/module", {"q", "p", "e", "modulus", "phi_t"});
        read_module(m, "/module", c);
    }
    if (c.q == 0) throw ConfigError("/q", "missing field order");
    if (c.phi_t.empty()) throw ConfigError("/phi_t", "missing coefficients of phi_t");
    if (j.contains("points")) c.points = get_strings(j["points"], "/points");
    if (j.contains("places")) c.places = get_strings(j["places"], "/places");
    if (j.contains("generators")) c.generators = get_strings(j["generators"], "/generators");
    if (j.contains("alpha")) c.alpha = get_as<std::string>(j["alpha"], "/alpha");
    if (j.contains("beta")) c.beta = get_as<std::string>(j["beta"], "/beta");
    if (j.contains("S")) c.S = get_strings(j["S"], "/S");
    if (j.contains("probe")) c.probe = get_strings(j["probe"], "/probe");
    if (j.contains("tuples")) {
        const json& t = j["tuples"];
        if (!t.is_array()) throw ConfigError("/tuples", "expected an array");
        for (std::size_t i = 0; i < t.size(); ++i) {
            const std::string f = "/tuples/" + std::to_string(i);
            // A bare string is a one-generator tuple.
            if (t[i].is_string())
                c.tuples.push_back({t[i].get<std::string>()});
            else
                c.tuples.push_back(get_strings(t[i], f));
        }
    }
    if (j.contains("deg_caps")) {
        const json& d = j["deg_caps"];
        if (!d.is_array()) throw ConfigError("/deg_caps", "expected an array");
        for (std::size_t i = 0; i < d.size(); ++i)
            c.deg_caps.push_back(get_int(d[i], "/deg_caps/" + std::to_string(i), 0, 64));
    }
    if (j.contains("caps")) {
        const json& k = j["caps"];
        if (!k.is_object()) throw ConfigError("/caps", "expected an object");
        check_keys(k, "/caps",
                   {"deg_cap", "iter_cap", "annulus_cap", "torsion_cap", "max_point_degree", "max_rows",
                    "max_height_degree"});
        auto rd = [&](const char* key, int& dst, long long lo, long long hi) {
            if (k.contains(key)) dst = get_int(k[key], ptr("/caps", key), lo, hi);
        };
        rd("deg_cap", c.caps.deg_cap, 0, 64);
        rd("iter_cap", c.caps.iter_cap, 0, 64);
        rd("annulus_cap", c.caps.annulus_cap, 0, 16);
        rd("torsion_cap", c.caps.torsion_cap, 0, 64);
        rd("max_point_degree", c.caps.max_point_degree, 1, 1 << 30);
        rd("max_height_degree", c.caps.max_height_degree, 1, 1 << 30);
        if (k.contains("max_rows")) {
            const long long v = get_as<long long>(k["max_rows"], "/caps/max_rows");
            if (v < 1) throw ConfigError("/caps/max_rows", "must be positive");
            c.caps.max_rows = static_cast<std::uint64_t>(v);
        }
    }
    if (j.contains("threads")) c.threads = get_int(j["threads"], "/threads", 1, 256);
    return c;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("", "cannot read config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const Config& c) {
    ordered_json j;
    j["q"] = c.q;
    if (!c.modulus.empty()) j["modulus"] = c.modulus;
    j["phi_t"] = c.phi_t;
    if (!c.points.empty()) j["points"] = c.points;
    if (!c.places.empty()) j["places"] = c.places;
    if (!c.generators.empty()) j["generators"] = c.generators;
    if (c.alpha) j["alpha"] = *c.alpha;
    if (c.beta) j["beta"] = *c.beta;
    if (!c.S.empty()) j["S"] = c.S;
    if (c.probe) j["probe"] = *c.probe;
    if (!c.tuples.empty()) j["tuples"] = c.tuples;
    if (!c.deg_caps.empty()) j["deg_caps"] = c.deg_caps;
    j["caps"] = ordered_json{{"deg_cap", c.caps.deg_cap},
                             {"iter_cap", c.caps.iter_cap},
                             {"annulus_cap", c.caps.annulus_cap},
                             {"torsion_cap", c.caps.torsion_cap},
                             {"max_point_degree", c.caps.max_point_degree},
                             {"max_rows", c.caps.max_rows},
                             {"max_height_degree", c.caps.max_height_degree}};
    j["threads"] = c.threads;
    return j.dump(2) + "\n";
}

FieldPtr Config::field() const {
    try {
        return make_field(q, modulus);
    } catch (const std::exception& e) {
        throw ConfigError(modulus.empty() ? "/q" : "/modulus", e.what());
    }
}

std::shared_ptr<const DrinfeldModule> Config::module() const {
    const FieldPtr F = field();
    std::vector<RatK> coeffs;
    for (std::size_t i = 0; i < phi_t.size(); ++i) {
        try {
            coeffs.push_back(parse_ratk(F, phi_t[i]));
        } catch (const std::exception& e) {
            throw ConfigError("/phi_t/" + std::to_string(i), e.what());
        }
    }
    try {
        return std::make_shared<const DrinfeldModule>(TwistedPoly(F, coeffs));
    } catch (const DomainError& e) {
        throw ConfigError("/phi_t", e.what());
    }
}

HeightOptions Config::height_options() const {
    HeightOptions o;
    o.iter_cap = caps.iter_cap;
    o.annulus_cap = caps.annulus_cap;
    o.max_degree = caps.max_height_degree;
    return o;
}

EnumerationLimits Config::limits() const {
    EnumerationLimits l;
    l.max_point_degree = caps.max_point_degree;
    l.max_rows = caps.max_rows;
    l.threads = threads;
    return l;
}

RatK config_point(const Config&, const FieldPtr& F, const std::string& field, const std::string& text) {
    try {
        return parse_ratk(F, text);
    } catch (const std::exception& e) {
        throw ConfigError(field, e.what());
    }
}

PlaceSet config_places(const Config&, const FieldPtr& F, const std::string& field,
                       const std::vector<std::string>& names) {
    std::vector<Place> out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        try {
            out.push_back(parse_place(F, names[i]));
        } catch (const std::exception& e) {
            throw ConfigError(field + "/" + std::to_string(i), e.what());
        }
    }
    return PlaceSet(out);
}

}  // namespace drinfeld
