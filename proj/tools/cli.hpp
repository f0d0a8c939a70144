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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tcert::cli {

enum class Command { bound, certificate, uniqueness, robustness, pdm, lemma1, isometry, sweep, report };
enum class Format { json, csv, pretty };

std::optional<Command> parse_command(const std::string& s);
std::string to_string(Command c);
std::optional<Format> parse_format(const std::string& s);

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Bad flags or values; maps to exit code 2.
class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    Command command = Command::bound;
    int n = 3;
    int grid_u = 33;
    int grid_v = 17;
    std::vector<double> epsilons{1e-2, 1e-3, 1e-4};
    int trials = 20;
    std::uint64_t seed = 7;
    std::string output_path;  ///< empty: standard output
    Format format = Format::json;
    std::string example = "rex";  ///< pdm: rex | bell1 .. bell4
    bool inward_only = false;     ///< robustness: orient directions into the cone
    double solver_tol = 1e-9;
};

/// "33x17" -> (33, 17).
std::pair<int, int> parse_grid(const std::string& s);

/// Decimal literal from TEMPORAL_CERT_TOL, if set.
std::optional<double> tolerance_from_env();

/// Throws UsageError for configs that cannot run.
void validate(const RunConfig& cfg);

/// Runs one command. The artifact goes to cfg.output_path (written atomically)
/// or `out`; failing checks and errors go to `err` as a JSON body.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace tcert::cli
