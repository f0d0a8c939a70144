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

#include <unistd.h>

#include <array>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "tcert/certify.hpp"
#include "tcert/linalg.hpp"
#include "tcert/ncycle.hpp"
#include "tcert/pdm.hpp"
#include "tcert/sdp.hpp"
#include "tcert/serialize.hpp"

namespace tcert::cli {
namespace {

using io::json;

constexpr std::array<std::pair<Command, const char*>, 9> kCommands{{
    {Command::bound, "bound"},
    {Command::certificate, "certificate"},
    {Command::uniqueness, "uniqueness"},
    {Command::robustness, "robustness"},
    {Command::pdm, "pdm"},
    {Command::lemma1, "lemma1"},
    {Command::isometry, "isometry"},
    {Command::sweep, "sweep"},
    {Command::report, "report"},
}};

struct Outcome {
    json body;
    std::string csv;  ///< only for commands with a tabular artifact
    std::vector<std::string> failures;
};

json header(const RunConfig& cfg) {
    return {{"schema", io::kSchemaVersion}, {"command", to_string(cfg.command)}};
}

void check(std::vector<std::string>& failures, bool ok, const char* name) {
    if (!ok) failures.emplace_back(name);
}

Outcome cmd_bound(const RunConfig& cfg) {
    const auto ineq = ncycle::build(cfg.n);
    sdp::SolverOptions so;
    so.tol = cfg.solver_tol;
    const auto sol = sdp::solve(ineq.problem(), so);
    Outcome o;
    o.body = header(cfg);
    o.body["n"] = cfg.n;
    o.body["classical"] = ineq.classical_bound;
    o.body["quantum"] = ineq.quantum_bound;
    o.body["sdp"] = sol.primal_value;
    o.body["sdp_dual"] = sol.dual_value;
    o.body["gap"] = sol.gap;
    o.body["iterations"] = sol.iterations;
    o.body["status"] = sdp::to_string(sol.status);
    check(o.failures, sol.status == sdp::SdpStatus::optimal, "solver_status");
    check(o.failures, std::abs(sol.primal_value - ineq.quantum_bound) <= 1e-6, "quantum_bound");
    return o;
}

Outcome cmd_certificate(const RunConfig& cfg) {
    const auto bundle = ncycle::certificate_bundle(cfg.n);
    const auto ineq = ncycle::build(cfg.n);
    const std::vector<double> y(static_cast<std::size_t>(cfg.n), std::cos(std::numbers::pi / cfg.n));
    const auto verdict = sdp::check_certificate(ineq.problem(), bundle.x_opt, y);
    Outcome o;
    o.body = header(cfg);
    o.body["bundle"] = io::to_json(bundle);
    o.body["verdict"] = io::to_json(verdict);
    o.failures = bundle.failures;
    check(o.failures, verdict.optimal_pair, "optimal_pair");
    return o;
}

Outcome cmd_uniqueness(const RunConfig& cfg) {
    const auto ineq = ncycle::build(cfg.n);
    const std::size_t null_dim = ncycle::nondegeneracy_nullspace(cfg.n);
    sdp::SolverOptions so;
    so.tol = cfg.solver_tol;
    const auto sol = sdp::solve(ineq.problem(), so);
    const double dist = frobenius_distance(sol.primal, ncycle::analytic_optimizer(cfg.n));
    Outcome o;
    o.body = header(cfg);
    o.body["n"] = cfg.n;
    o.body["nullspace_dim"] = null_dim;
    o.body["solver_distance"] = dist;
    o.body["solver_status"] = sdp::to_string(sol.status);
    check(o.failures, null_dim == 0, "nondegeneracy");
    check(o.failures, dist <= 1e-4, "solver_matches_closed_form");
    return o;
}

Outcome cmd_robustness(const RunConfig& cfg) {
    ncycle::RobustnessOptions ro;
    ro.epsilons = cfg.epsilons;
    ro.trials_per_eps = cfg.trials;
    ro.seed = cfg.seed;
    ro.inward_only = cfg.inward_only;
    const auto curve = ncycle::robustness_experiment(cfg.n, ro);
    Outcome o;
    o.body = header(cfg);
    o.body["curve"] = io::to_json(curve);
    o.body["inward_only"] = cfg.inward_only;
    std::ostringstream csv;
    csv << "target,epsilon,distance\n";
    csv.precision(17);
    for (const auto& s : curve.samples) csv << s.target << ',' << s.epsilon << ',' << s.distance << '\n';
    o.csv = csv.str();

    bool feasible = true;
    for (const auto& s : curve.samples)
        feasible = feasible && s.min_eigenvalue >= -1e-9 && s.diag_residual <= 1e-9;
    check(o.failures, feasible, "feasibility");
    check(o.failures, curve.loglog_exponent >= 0.8 && curve.loglog_exponent <= 1.2, "loglog_exponent");
    check(o.failures, curve.skipped == 0, "skipped_samples");
    return o;
}

Outcome cmd_pdm(const RunConfig& cfg) {
    Outcome o;
    o.body = header(cfg);
    o.body["example"] = cfg.example;
    if (cfg.example == "rex") {
        const auto r = qsim::pdm_two_events(qsim::DensityMatrix::ket0(), qsim::KrausChannel::identity());
        o.body["pdm"] = io::to_json(r);
        const auto ev = eig_herm(r.matrix()).eigenvalues;
        check(o.failures, std::abs(ev.front() + 0.5) <= 1e-12, "negative_eigenvalue");
    } else {
        const int k = cfg.example.back() - '0';
        o.body["pdm"] = io::to_json(qsim::pseudo_bell(k));
    }
    return o;
}

Outcome cmd_lemma1(const RunConfig& cfg) {
    Outcome o;
    o.body = header(cfg);
    const double r = certify::lemma1_residual(cfg.seed, 200);
    o.body["scenarios"] = 200;
    o.body["seed"] = cfg.seed;
    o.body["max_residual"] = r;
    check(o.failures, r <= 1e-10, "lemma1_residual");
    return o;
}

Outcome cmd_isometry(const RunConfig& cfg) {
    Outcome o;
    o.body = header(cfg);
    const double r = certify::isometry_residual(cfg.seed, 100);
    o.body["scenarios"] = 100;
    o.body["seed"] = cfg.seed;
    o.body["max_residual"] = r;
    check(o.failures, r <= 1e-10, "isometry_residual");
    return o;
}

Outcome cmd_sweep(const RunConfig& cfg) {
    const auto s = certify::channel_sweep(cfg.grid_u, cfg.grid_v, cfg.seed);
    Outcome o;
    o.body = header(cfg);
    o.body["sweep"] = io::to_json(s);
    o.csv = io::sweep_to_csv(s);
    o.failures = s.failures;
    return o;
}

Outcome cmd_report(const RunConfig& cfg) {
    certify::ReportOptions ro;
    ro.n = cfg.n;
    ro.grid_u = cfg.grid_u;
    ro.grid_v = cfg.grid_v;
    ro.seed = cfg.seed;
    const auto rep = certify::full_report(ro);
    Outcome o;
    o.body = header(cfg);
    o.body["report"] = io::to_json(rep);
    o.failures = rep.failures;
    return o;
}

Outcome dispatch(const RunConfig& cfg) {
    switch (cfg.command) {
        case Command::bound:
            return cmd_bound(cfg);
        case Command::certificate:
            return cmd_certificate(cfg);
        case Command::uniqueness:
            return cmd_uniqueness(cfg);
        case Command::robustness:
            return cmd_robustness(cfg);
        case Command::pdm:
            return cmd_pdm(cfg);
        case Command::lemma1:
            return cmd_lemma1(cfg);
        case Command::isometry:
            return cmd_isometry(cfg);
        case Command::sweep:
            return cmd_sweep(cfg);
        case Command::report:
            return cmd_report(cfg);
    }
    throw std::logic_error("unhandled command");
}

std::string pretty(const json& body) {
    std::ostringstream os;
    for (auto it = body.begin(); it != body.end(); ++it) {
        os << it.key() << ": ";
        if (it.value().is_string()) {
            os << it.value().get<std::string>();
        } else {
            std::string v = io::dump(it.value(), -1);
            os << v;
        }
        os << '\n';
    }
    return os.str();
}

void write_atomically(const std::string& path, const std::string& text) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        f << text;
        f.flush();
        if (!f) throw std::runtime_error("write to " + tmp.string() + " failed");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::runtime_error("cannot move output into place at " + path + ": " + ec.message());
    }
}

json error_body(const RunConfig& cfg, const std::string& message,
                const std::vector<std::string>& failures = {}) {
    json e = header(cfg);
    e["error"] = message;
    json f = json::array();
    for (const auto& s : failures) f.push_back(s);
    e["failures"] = std::move(f);
    return e;
}

}  // namespace

std::optional<Command> parse_command(const std::string& s) {
    for (const auto& [c, name] : kCommands)
        if (s == name) return c;
    return std::nullopt;
}

std::string to_string(Command c) {
    for (const auto& [k, name] : kCommands)
        if (k == c) return name;
    return "unknown";
}

std::optional<Format> parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "pretty") return Format::pretty;
    return std::nullopt;
}

std::pair<int, int> parse_grid(const std::string& s) {
    const auto x = s.find_first_of("xX");
    if (x == std::string::npos || x == 0 || x + 1 == s.size()) {
        throw UsageError("--grid expects WxH, got '" + s + "'");
    }
    auto to_int = [&](const std::string& part) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(part, &used);
        } catch (const std::exception&) {
            throw UsageError("--grid expects WxH, got '" + s + "'");
        }
        if (used != part.size()) throw UsageError("--grid expects WxH, got '" + s + "'");
        return v;
    };
    return {to_int(s.substr(0, x)), to_int(s.substr(x + 1))};
}

std::optional<double> tolerance_from_env() {
    const char* raw = std::getenv("TEMPORAL_CERT_TOL");
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(raw, &end);
    if (errno != 0 || end == raw || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
        throw UsageError(std::string("TEMPORAL_CERT_TOL must be a positive decimal, got '") + raw + "'");
    }
    return v;
}

void validate(const RunConfig& cfg) {
    const bool needs_n = cfg.command == Command::bound || cfg.command == Command::certificate ||
                         cfg.command == Command::uniqueness || cfg.command == Command::robustness ||
                         cfg.command == Command::report;
    if (needs_n && cfg.n < 3) throw UsageError("--n must be >= 3");
    if (needs_n && cfg.n > 64) throw UsageError("--n must be <= 64");
    if ((cfg.command == Command::sweep || cfg.command == Command::report) &&
        (cfg.grid_u < 8 || cfg.grid_v < 8)) {
        throw UsageError("--grid sizes must be >= 8");
    }
    if (cfg.command == Command::robustness) {
        if (cfg.epsilons.empty()) throw UsageError("--eps needs at least one value");
        for (double e : cfg.epsilons)
            if (!(e > 0.0) || !std::isfinite(e)) throw UsageError("--eps values must be positive");
        if (cfg.trials < 1) throw UsageError("--trials must be >= 1");
    }
    if (cfg.command == Command::pdm && cfg.example != "rex" && cfg.example != "bell1" &&
        cfg.example != "bell2" && cfg.example != "bell3" && cfg.example != "bell4") {
        throw UsageError("--example must be rex or bell1..bell4");
    }
    if (cfg.format == Format::csv && cfg.command != Command::sweep && cfg.command != Command::robustness) {
        throw UsageError("--format csv is only available for sweep and robustness");
    }
    if (!(cfg.solver_tol > 0.0)) throw UsageError("solver tolerance must be positive");
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        validate(cfg);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    Outcome o;
    try {
        o = dispatch(cfg);
    } catch (const std::exception& e) {
        err << io::dump(error_body(cfg, e.what()));
        return kExitCheckFailed;
    }

    json failures = json::array();
    for (const auto& f : o.failures) failures.push_back(f);
    o.body["failures"] = failures;
    o.body["pass"] = o.failures.empty();

    std::string text;
    switch (cfg.format) {
        case Format::json:
            text = io::dump(o.body);
            break;
        case Format::csv:
            text = o.csv;
            break;
        case Format::pretty:
            text = pretty(o.body);
            break;
    }
    try {
        if (cfg.output_path.empty()) {
            out << text;
            out.flush();
        } else {
            write_atomically(cfg.output_path, text);
        }
    } catch (const std::exception& e) {
        err << io::dump(error_body(cfg, e.what()));
        return kExitCheckFailed;
    }

    if (!o.failures.empty()) {
        err << io::dump(error_body(cfg, "checks failed", o.failures));
        return kExitCheckFailed;
    }
    return kExitOk;
}

}  // namespace tcert::cli
