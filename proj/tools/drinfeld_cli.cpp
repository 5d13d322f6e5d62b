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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "drinfeld/commands.hpp"

namespace {

enum ExitCode { kOk = 0, kConfigError = 2, kResourceBound = 3, kInvariant = 4 };

void write_outputs(const std::filesystem::path& dir, const drinfeld::CommandOutput& result) {
    std::filesystem::create_directories(dir);
    for (const auto& [name, contents] : result.files) {
        const auto path = dir / name;
        std::ofstream out(path, std::ios::binary);
        out << contents;
        if (!out) throw std::runtime_error("cannot write " + path.string());
        std::cout << "wrote " << path.string() << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic and height experiments for Drinfeld modules over F_q(t)"};
    app.require_subcommand(1, 1);

    std::string config_path;
    std::string out_dir = ".";
    std::optional<int> deg_cap, iter_cap, threads;
    const std::map<std::string, std::string> about{
        {"heights", "local and canonical heights of the configured points"},
        {"torsion", "torsion orders cross-checked against canonical heights"},
        {"orbit", "orbit of each point under phi_t with per-place logs"},
        {"siegel", "S-integral points of a finitely generated submodule per degree cap"},
        {"silverman", "Q with phi_Q(beta) S-integral for alpha, per degree cap"},
        {"ratios", "log-distance ratios at the probe places"},
    };
    for (const auto& name : drinfeld::command_names()) {
        const auto it = about.find(name);
        auto* sub = app.add_subcommand(name, it == about.end() ? std::string() : it->second);
        sub->add_option("--config", config_path, "experiment config (JSON)")->required();
        sub->add_option("--out", out_dir, "directory for CSV/JSON artifacts");
        sub->add_option("--deg-cap", deg_cap, "override caps.deg_cap")->check(CLI::Range(0, 64));
        sub->add_option("--iter-cap", iter_cap, "override caps.iter_cap")->check(CLI::Range(0, 64));
        sub->add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 256));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kConfigError;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        drinfeld::Config config = drinfeld::load_config(config_path);
        if (deg_cap) {
            // An explicit cap replaces a configured list of siegel caps.
            config.caps.deg_cap = *deg_cap;
            config.deg_caps.clear();
        }
        if (iter_cap) config.caps.iter_cap = *iter_cap;
        if (threads) config.threads = *threads;
        const drinfeld::CommandOutput result = drinfeld::run_command(command, config);
        std::cout << result.summary;
        write_outputs(out_dir, result);
        return kOk;
    } catch (const drinfeld::ResourceError& e) {
        std::cerr << "resource bound: " << e.what() << '\n';
        return kResourceBound;
    } catch (const drinfeld::InvariantError& e) {
        std::cerr << "internal invariant violated: " << e.what() << '\n';
        return kInvariant;
    } catch (const drinfeld::ParseError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const drinfeld::DomainError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInvariant;
    }
}
