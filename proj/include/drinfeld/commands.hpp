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

#include <string>
#include <utility>
#include <vector>

#include "drinfeld/config.hpp"

namespace drinfeld {

/// What a command produces: a human-readable summary for stdout and the
/// artifact files (name, contents) to be written under the output directory.
struct CommandOutput {
    std::string summary;
    std::vector<std::pair<std::string, std::string>> files;
};

/// Per point: Weil height, local canonical heights at infinity, the bad
/// places, the poles of the point and any configured places, and the total.
CommandOutput cmd_heights(const Config& c);
/// Per point: order from the linear-dependence search, canonical height, and
/// whether the two agree.  Throws InvariantError when they contradict each
/// other with an Exact height.
CommandOutput cmd_torsion(const Config& c);
/// phi_{t^n}(x) for n = 0..deg_cap with log|.|_v at the configured places.
CommandOutput cmd_orbit(const Config& c);
CommandOutput cmd_siegel(const Config& c);
CommandOutput cmd_silverman(const Config& c);
CommandOutput cmd_ratios(const Config& c);

/// Dispatch by name ("heights", "torsion", "orbit", "siegel", "silverman",
/// "ratios"); throws ConfigError for an unknown name.
CommandOutput run_command(const std::string& name, const Config& c);
const std::vector<std::string>& command_names();

}  // namespace drinfeld
