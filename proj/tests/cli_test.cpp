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

#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <nlohmann/json.hpp>

namespace tcert::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cfg(const RunConfig& cfg) {
    std::ostringstream out, err;
    const int code = run(cfg, out, err);
    return {code, out.str(), err.str()};
}

TEST(Cli, BoundSucceeds) {
    RunConfig cfg;
    cfg.n = 4;
    const auto r = run_cfg(cfg);
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const json j = json::parse(r.out);
    EXPECT_TRUE(j.at("pass").get<bool>());
    EXPECT_EQ(j.at("schema").get<int>(), 1);
    EXPECT_EQ(j.at("command").get<std::string>(), "bound");
    EXPECT_TRUE(r.err.empty());
}

TEST(Cli, UsageErrors) {
    RunConfig cfg;
    cfg.n = 2;
    EXPECT_EQ(run_cfg(cfg).code, kExitUsage);
    cfg = {};
    cfg.format = Format::csv;
    EXPECT_EQ(run_cfg(cfg).code, kExitUsage);
    cfg = {};
    cfg.command = Command::sweep;
    cfg.grid_u = 4;
    EXPECT_EQ(run_cfg(cfg).code, kExitUsage);
    cfg = {};
    cfg.command = Command::pdm;
    cfg.example = "nope";
    EXPECT_EQ(run_cfg(cfg).code, kExitUsage);
    cfg = {};
    cfg.command = Command::robustness;
    cfg.epsilons = {-1.0};
    EXPECT_EQ(run_cfg(cfg).code, kExitUsage);
}

TEST(Cli, FailedChecksExitOne) {
    RunConfig cfg;
    cfg.command = Command::sweep;
    cfg.grid_u = 9;
    cfg.grid_v = 9;
    const auto r = run_cfg(cfg);
    EXPECT_EQ(r.code, kExitCheckFailed);
    const json body = json::parse(r.out);
    EXPECT_FALSE(body.at("pass").get<bool>());
    const json e = json::parse(r.err);
    EXPECT_FALSE(e.at("failures").empty());
}

TEST(Cli, Deterministic) {
    RunConfig cfg;
    cfg.command = Command::certificate;
    cfg.n = 6;
    EXPECT_EQ(run_cfg(cfg).out, run_cfg(cfg).out);
    cfg.command = Command::lemma1;
    EXPECT_EQ(run_cfg(cfg).out, run_cfg(cfg).out);
}

TEST(Cli, AtomicOutputFile) {
    const fs::path dir = fs::temp_directory_path() / ("tcert_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    RunConfig cfg;
    cfg.command = Command::pdm;
    cfg.output_path = (dir / "rex.json").string();
    const auto r = run_cfg(cfg);
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(cfg.output_path);
    const json j = json::parse(in);
    EXPECT_EQ(j.at("command").get<std::string>(), "pdm");
    std::size_t files = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++files;
    EXPECT_EQ(files, 1u);  // no temporary left behind
    cfg.output_path = (dir / "missing" / "x.json").string();
    EXPECT_EQ(run_cfg(cfg).code, kExitCheckFailed);
    fs::remove_all(dir);
}

TEST(Cli, SweepCsv) {
    RunConfig cfg;
    cfg.command = Command::sweep;
    cfg.grid_u = 8;
    cfg.grid_v = 8;
    cfg.format = Format::csv;
    const auto r = run_cfg(cfg);
    EXPECT_EQ(r.out.rfind("u,v,s3_max", 0), 0u);
}

TEST(Cli, ParseHelpers) {
    EXPECT_EQ(parse_grid("33x17"), std::make_pair(33, 17));
    EXPECT_THROW(parse_grid("33"), UsageError);
    EXPECT_THROW(parse_grid("3ax4"), UsageError);
    EXPECT_EQ(parse_command("sweep"), Command::sweep);
    EXPECT_FALSE(parse_command("nope").has_value());
    EXPECT_EQ(to_string(Command::report), "report");
    EXPECT_EQ(parse_format("csv"), Format::csv);
}

TEST(Cli, ToleranceFromEnvironment) {
    ::setenv("TEMPORAL_CERT_TOL", "1e-7", 1);
    EXPECT_EQ(tolerance_from_env(), 1e-7);
    ::setenv("TEMPORAL_CERT_TOL", "abc", 1);
    EXPECT_THROW(tolerance_from_env(), UsageError);
    ::setenv("TEMPORAL_CERT_TOL", "-1", 1);
    EXPECT_THROW(tolerance_from_env(), UsageError);
    ::unsetenv("TEMPORAL_CERT_TOL");
    EXPECT_FALSE(tolerance_from_env().has_value());
}

}  // namespace
}  // namespace tcert::cli
