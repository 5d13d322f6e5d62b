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
#include <optional>
#include <string>
#include <vector>

#include "drinfeld/error.hpp"
#include "drinfeld/integrality.hpp"

namespace drinfeld {

/// Bad config input.  what() names the offending field as a JSON pointer.
class ConfigError : public ParseError {
public:
    ConfigError(const std::string& field, const std::string& message)
        : ParseError(field.empty() ? message : field + ": " + message), field_(field) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

struct Caps {
    int deg_cap = 4;
    int iter_cap = 12;
    int annulus_cap = 3;
    int torsion_cap = 4;
    int max_point_degree = 1 << 14;
    std::uint64_t max_rows = 1u << 20;
    int max_height_degree = 1 << 15;
    friend bool operator==(const Caps&, const Caps&) = default;
};

/// Experiment description as read from JSON.  Strings are kept verbatim and
/// turned into domain objects by the accessors below.
struct Config {
    std::uint32_t q = 0;
    std::string modulus;
    std::vector<std::string> phi_t;
    std::vector<std::string> points;
    std::vector<std::string> places;
    std::vector<std::string> generators;
    std::optional<std::string> alpha;
    std::optional<std::string> beta;
    std::vector<std::string> S;
    std::optional<std::vector<std::string>> probe;
    std::vector<std::vector<std::string>> tuples;
    std::vector<int> deg_caps;
    Caps caps;
    int threads = 1;
    friend bool operator==(const Config&, const Config&) = default;

    FieldPtr field() const;
    std::shared_ptr<const DrinfeldModule> module() const;
    HeightOptions height_options() const;
    EnumerationLimits limits() const;
};

/// Accepts "q" or "p" with "e"; the module may sit at top level or under
/// "module" ({"q": 3, "phi_t": ["t", "0", "1"]}).  Throws ConfigError.
Config parse_config(const std::string& json_text);
Config load_config(const std::string& path);
/// Canonical JSON form; parse_config(serialize_config(c)) == c.
std::string serialize_config(const Config& c);

/// Domain-object accessors; each reports the field it read on failure.
RatK config_point(const Config& c, const FieldPtr& F, const std::string& field, const std::string& text);
PlaceSet config_places(const Config& c, const FieldPtr& F, const std::string& field,
                       const std::vector<std::string>& names);

}  // namespace drinfeld
