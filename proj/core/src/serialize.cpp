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

#include "tcert/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "tcert/linalg.hpp"

namespace tcert::io {
namespace {

std::string format_double(double x) {
    if (!std::isfinite(x)) return "null";
    if (x == 0.0) return "0.0";  // no "-0.0"
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    std::string s(buf);
    // Keep it a JSON float so round trips stay floating point.
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    return s;
}

void write(std::ostringstream& os, const json& j, int indent, int depth) {
    const bool pretty = indent >= 0;
    auto newline = [&](int d) {
        if (pretty) os << '\n' << std::string(static_cast<std::size_t>(indent * d), ' ');
    };
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                os << "{}";
                return;
            }
            os << '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) os << ',';
                first = false;
                newline(depth + 1);
                os << json(it.key()).dump() << (pretty ? ": " : ":");
                write(os, it.value(), indent, depth + 1);
            }
            newline(depth);
            os << '}';
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                os << "[]";
                return;
            }
            // Arrays of scalars stay on one line.
            const bool flat = std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
            os << '[';
            bool first = true;
            for (const auto& e : j) {
                if (!first) os << (flat && pretty ? ", " : ",");
                first = false;
                if (!flat) newline(depth + 1);
                write(os, e, indent, depth + 1);
            }
            if (!flat) newline(depth);
            os << ']';
            return;
        }
        case json::value_t::number_float:
            os << format_double(j.get<double>());
            return;
        default:
            os << j.dump();
    }
}

json vec3(const qsim::Vec3& a) { return json::array({a[0], a[1], a[2]}); }

json strings(const std::vector<std::string>& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(s);
    return a;
}

}  // namespace

json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const SymMatrix& m) { return to_json(m.matrix()); }

json to_json(const CMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const sdp::SdpSolution& s) {
    return {{"primal", to_json(s.primal)},
            {"dual", s.dual},
            {"dual_slack", to_json(s.dual_slack)},
            {"primal_value", s.primal_value},
            {"dual_value", s.dual_value},
            {"gap", s.gap},
            {"iterations", s.iterations},
            {"status", sdp::to_string(s.status)}};
}

json to_json(const sdp::CertificateVerdict& v) {
    return {{"diag_residual", v.diag_residual},
            {"primal_min_eigenvalue", v.primal_min_eigenvalue},
            {"dual_slack_min_eigenvalue", v.dual_slack_min_eigenvalue},
            {"complementarity", v.complementarity},
            {"primal_value", v.primal_value},
            {"dual_value", v.dual_value},
            {"primal_feasible", v.primal_feasible},
            {"dual_feasible", v.dual_feasible},
            {"optimal_pair", v.optimal_pair}};
}

json to_json(const ncycle::CertificateBundle& b) {
    return {{"n", b.n},
            {"x_opt", to_json(b.x_opt)},
            {"w", to_json(b.w)},
            {"t", to_json(b.t)},
            {"objective", b.objective},
            {"dual_value", b.dual_value},
            {"slackness", b.slackness},
            {"x_min_eig", b.x_min_eig},
            {"w_min_eig", b.w_min_eig},
            {"nullspace_dim", b.nullspace_dim},
            {"failures", strings(b.failures)},
            {"ok", b.ok()}};
}

json to_json(const ncycle::RobustnessCurve& c) {
    json samples = json::array();
    for (const auto& s : c.samples) {
        samples.push_back({{"target", s.target},
                           {"epsilon", s.epsilon},
                           {"distance", s.distance},
                           {"min_eigenvalue", s.min_eigenvalue},
                           {"diag_residual", s.diag_residual}});
    }
    return {{"n", c.n},
            {"samples", std::move(samples)},
            {"fitted_slope", c.fitted_slope},
            {"fit_residual", c.fit_residual},
            {"loglog_exponent", c.loglog_exponent},
            {"envelope_ratio", c.envelope_ratio},
            {"skipped", c.skipped},
            {"warnings", strings(c.warnings)}};
}

json to_json(const ncycle::QubitRealizationReport& r) {
    return {{"n", r.n},
            {"states", r.states},
            {"max_entry_deviation", r.max_entry_deviation},
            {"max_value_deviation", r.max_value_deviation},
            {"expected_value", r.expected_value}};
}

json to_json(const qsim::Pdm& r) {
    const auto e = eig_herm(r.matrix());
    return {{"events", r.events()},
            {"matrix", to_json(r.matrix().matrix())},
            {"eigenvalues", e.eigenvalues},
            {"trace_norm", trace_norm(r.matrix())},
            {"causality_monotone", qsim::causality_monotone(r)}};
}

json to_json(const qsim::KrausChannel& ch) {
    json ops = json::array();
    for (const auto& k : ch.kraus()) ops.push_back(to_json(k));
    return {{"kraus", std::move(ops)}, {"kraus_rank", ch.kraus_rank()}};
}

json to_json(const certify::SweepResult& s) {
    json points = json::array();
    for (const auto& p : s.points) {
        points.push_back({{"u", p.u},
                          {"v", p.v},
                          {"s3_max", p.best.value},
                          {"a1", vec3(p.best.a1)},
                          {"a2", vec3(p.best.a2)},
                          {"a3", vec3(p.best.a3)}});
    }
    json corners = json::array();
    for (const auto& c : s.maximizing_corners) corners.push_back(json::array({c[0], c[1]}));
    return {{"grid", json::array({s.grid_u, s.grid_v})},
            {"points", std::move(points)},
            {"global_max", s.global_max},
            {"flagged", s.flagged},
            {"maximizing_corners", std::move(corners)},
            {"interior_maximizers", s.interior_maximizers},
            {"failures", strings(s.failures)},
            {"ok", s.ok()}};
}

json to_json(const certify::CertificationReport& r) {
    json corners = json::array();
    for (const auto& c : r.corners) {
        corners.push_back({{"u", c.u},
                           {"v", c.v},
                           {"kraus_norms", c.kraus_norms},
                           {"kraus_rank", c.kraus_rank},
                           {"s3", c.s3},
                           {"rank_one", c.rank_one}});
    }
    json mixtures = json::array();
    for (const auto& m : r.mixtures) {
        mixtures.push_back({{"corner_a", json::array({m.corner_a[0], m.corner_a[1]})},
                            {"corner_b", json::array({m.corner_b[0], m.corner_b[1]})},
                            {"p", m.p},
                            {"s3", m.s3}});
    }
    json sweep = to_json(r.sweep);
    sweep.erase("points");  // summary only; the sweep command emits the grid
    return {{"ncycle_bundle", to_json(r.ncycle_bundle)},
            {"sweep", std::move(sweep)},
            {"corners", std::move(corners)},
            {"mixtures", std::move(mixtures)},
            {"lemma1_residual", r.lemma1_residual},
            {"isometry_residual", r.isometry_residual},
            {"failures", strings(r.failures)},
            {"verdict", r.verdict}};
}

json problem_to_json(const sdp::SdpProblem& p) {
    return {{"schema", kSchemaVersion}, {"dim", p.dim()}, {"lambda", to_json(p.objective())}};
}

SymMatrix sym_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix JSON: expected a non-empty array");
    const std::size_t n = j.size();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!j[i].is_array() || j[i].size() != n) {
            throw DimensionError("matrix JSON: row " + std::to_string(i) + " is not of length " +
                                 std::to_string(n));
        }
        for (std::size_t k = 0; k < n; ++k) m(i, k) = j[i][k].get<double>();
    }
    return SymMatrix(std::move(m));
}

CMatrix cmatrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix JSON: expected a non-empty array");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].size();
    CMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j[i].size() != cols) throw DimensionError("matrix JSON: ragged rows");
        for (std::size_t k = 0; k < cols; ++k) {
            const json& e = j[i][k];
            if (e.is_array() && e.size() == 2) {
                m(i, k) = complex{e[0].get<double>(), e[1].get<double>()};
            } else {
                m(i, k) = complex{e.get<double>(), 0.0};
            }
        }
    }
    return m;
}

sdp::SdpProblem problem_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("lambda")) {
        throw std::invalid_argument("problem JSON: expected {\"dim\": N, \"lambda\": [[...]]}");
    }
    SymMatrix lambda = sym_from_json(j.at("lambda"));
    if (lambda.dim() != j.at("dim").get<std::size_t>()) {
        throw DimensionError("problem JSON: dim does not match lambda");
    }
    return sdp::SdpProblem(std::move(lambda));
}

std::string sweep_to_csv(const certify::SweepResult& s) {
    std::ostringstream os;
    os << "u,v,s3_max,a1x,a1y,a1z,a2x,a2y,a2z,a3x,a3y,a3z\n";
    for (const auto& p : s.points) {
        os << format_double(p.u) << ',' << format_double(p.v) << ',' << format_double(p.best.value);
        for (const auto* a : {&p.best.a1, &p.best.a2, &p.best.a3})
            for (double x : *a) os << ',' << format_double(x);
        os << '\n';
    }
    return os.str();
}

std::string dump(const json& j, int indent) {
    std::ostringstream os;
    write(os, j, indent, 0);
    if (indent >= 0) os << '\n';
    return os.str();
}

}  // namespace tcert::io
