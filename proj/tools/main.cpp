// Copyright 2026 The temporal-cert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli.hpp"

namespace cli = tcert::cli;

int main(int argc, char** argv) {
    CLI::App app{"Certification toolkit for temporal quantum correlations", "temporal-cert"};
    app.require_subcommand(1);
    app.fallthrough();

    cli::RunConfig cfg;
    std::string grid = "33x17";
    std::string format = "json";
    std::vector<double> eps;

    app.add_option("--n", cfg.n, "Cycle length N")->capture_default_str();
    app.add_option("--grid", grid, "Channel sweep grid WxH over (u, v)")->capture_default_str();
    app.add_option("--eps", eps, "Objective deficit for robustness (repeatable)");
    app.add_option("--trials", cfg.trials, "Robustness trials per deficit")->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed for every random draw")->capture_default_str();
    app.add_option("--out", cfg.output_path, "Write the artifact here instead of stdout");
    app.add_option("--format", format, "json, csv or pretty")->capture_default_str();
    app.add_option("--example", cfg.example, "pdm: rex or bell1..bell4")->capture_default_str();
    app.add_flag("--inward", cfg.inward_only, "robustness: orient directions into the PSD cone");

    const std::pair<cli::Command, const char*> subs[] = {
        {cli::Command::bound, "Classical, quantum and SDP bounds of the N-cycle inequality"},
        {cli::Command::certificate, "Analytic optimizer and dual certificate checks"},
        {cli::Command::uniqueness, "Dual nondegeneracy and solver agreement"},
        {cli::Command::robustness, "Distance to the optimizer against objective deficit"},
        {cli::Command::pdm, "Pseudo-density matrix examples"},
        {cli::Command::lemma1, "PDM correlations against sequential correlations"},
        {cli::Command::isometry, "Local isometry in time residual"},
        {cli::Command::sweep, "S3 maximum over the two-Kraus channel family"},
        {cli::Command::report, "Full certification report"},
    };
    for (const auto& [cmd, help] : subs) {
        auto* sc = app.add_subcommand(cli::to_string(cmd), help);
        sc->fallthrough();
        sc->callback([&cfg, cmd = cmd] { cfg.command = cmd; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::kExitUsage;
    }

    try {
        const auto g = cli::parse_grid(grid);
        cfg.grid_u = g.first;
        cfg.grid_v = g.second;
        const auto f = cli::parse_format(format);
        if (!f) throw cli::UsageError("--format must be json, csv or pretty");
        cfg.format = *f;
        if (!eps.empty()) cfg.epsilons = eps;
        if (const auto tol = cli::tolerance_from_env()) cfg.solver_tol = *tol;
    } catch (const cli::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return cli::kExitUsage;
    }
    return cli::run(cfg, std::cout, std::cerr);
}
