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

#include "tcert/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "tcert/pdm.hpp"
#include "tcert/random.hpp"

namespace tcert::certify {
namespace {

constexpr double kPi = std::numbers::pi;

Vec3 mat_vec(const Mat3& c, const Vec3& a) {
    Vec3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i] += c[i][j] * a[j];
    return r;
}

Vec3 mat_t_vec(const Mat3& c, const Vec3& a) {
    Vec3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i] += c[j][i] * a[j];
    return r;
}

Vec3 random_unit(Rng& rng) {
    const auto v = random_unit_vector(rng, 3);
    return {v[0], v[1], v[2]};
}

// Unit vector along g, or a fresh random one when g vanishes.
Vec3 normalized_or_resample(const Vec3& g, Rng& rng) {
    const double n = std::sqrt(qsim::dot(g, g));
    if (n < 1e-14) return random_unit(rng);
    return {g[0] / n, g[1] / n, g[2] / n};
}

Vec3 add(const Vec3& a, const Vec3& b, double sb) {
    return {a[0] + sb * b[0], a[1] + sb * b[1], a[2] + sb * b[2]};
}

qsim::KrausChannel corner_channel(const std::array<double, 2>& c) {
    return qsim::pauli_channel({c[0], c[1]});
}

const std::array<std::array<double, 2>, 4>& corners() {
    static const std::array<std::array<double, 2>, 4> k = {
        {{0.0, 0.0}, {0.0, kPi}, {kPi, 0.0}, {kPi, kPi}}};
    return k;
}

}  // namespace

Mat3 s3_correlation_matrix(const qsim::DensityMatrix& rho, const qsim::KrausChannel& ch) {
    Mat3 c{};
    for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l)
            c[k - 1][l - 1] = qsim::seq_corr_channel(rho, qsim::pauli(k), qsim::pauli(l), ch);
    return c;
}

Mat3 s3_correlation_matrix(const qsim::KrausChannel& ch) {
    return s3_correlation_matrix(qsim::DensityMatrix::ket0(), ch);
}

double s3_value(const Mat3& c, const Vec3& a1, const Vec3& a2, const Vec3& a3) {
    return qsim::dot(a1, mat_vec(c, a2)) + qsim::dot(a2, mat_vec(c, a3)) -
           qsim::dot(a3, mat_vec(c, a1));
}

S3Result s3_inner_max(const Mat3& c, const AscentOptions& opts) {
    if (opts.restarts < 1) throw std::invalid_argument("s3_inner_max: restarts must be >= 1");
    S3Result best;
    best.value = -std::numeric_limits<double>::infinity();
    for (int r = 0; r < opts.restarts; ++r) {
        Rng rng = make_rng(opts.seed, static_cast<std::uint64_t>(r));
        Vec3 a1 = random_unit(rng), a2 = random_unit(rng), a3 = random_unit(rng);
        double value = s3_value(c, a1, a2, a3);
        for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
            // Each a_i enters linearly; its best unit choice is the normalized gradient.
            a1 = normalized_or_resample(add(mat_vec(c, a2), mat_t_vec(c, a3), -1.0), rng);
            a2 = normalized_or_resample(add(mat_t_vec(c, a1), mat_vec(c, a3), 1.0), rng);
            a3 = normalized_or_resample(add(mat_t_vec(c, a2), mat_vec(c, a1), -1.0), rng);
            const double next = s3_value(c, a1, a2, a3);
            const bool done = std::abs(next - value) <= 1e-15 * std::max(1.0, std::abs(next));
            value = next;
            if (done) break;
        }
        if (value > best.value) best = {value, a1, a2, a3};
    }
    return best;
}

S3Result s3_inner_max(double u, double v, const AscentOptions& opts) {
    Mat3 c{};
    c[0][0] = std::cos(u);
    c[1][1] = std::cos(v);
    c[2][2] = std::cos(u - v);
    return s3_inner_max(c, opts);
}

SweepResult channel_sweep(int grid_u, int grid_v, std::uint64_t seed) {
    if (grid_u < 8 || grid_v < 8) {
        throw std::invalid_argument("channel_sweep: grid sizes must be >= 8, got " +
                                    std::to_string(grid_u) + "x" + std::to_string(grid_v));
    }
    SweepResult res;
    res.grid_u = grid_u;
    res.grid_v = grid_v;
    const double du = 2.0 * kPi / (grid_u - 1);
    const double dv = kPi / (grid_v - 1);
    const double cell = std::hypot(du, dv) * (1.0 + 1e-9);

    res.points.reserve(static_cast<std::size_t>(grid_u) * static_cast<std::size_t>(grid_v));
    res.global_max = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid_u; ++i) {
        for (int j = 0; j < grid_v; ++j) {
            SweepPoint p;
            // Endpoints exact so corners are hit on the grid.
            p.u = i == grid_u - 1 ? 2.0 * kPi : i * du;
            p.v = j == grid_v - 1 ? kPi : j * dv;
            AscentOptions ao;
            ao.seed = seed + res.points.size();
            p.best = s3_inner_max(s3_correlation_matrix(qsim::pauli_channel({p.u, p.v})), ao);
            res.global_max = std::max(res.global_max, p.best.value);
            res.points.push_back(p);
        }
    }

    const std::array<double, 3> corner_u{0.0, kPi, 2.0 * kPi};
    const std::array<double, 2> corner_v{0.0, kPi};
    std::vector<bool> corner_hit(corner_u.size() * corner_v.size(), false);
    for (std::size_t k = 0; k < res.points.size(); ++k) {
        const SweepPoint& p = res.points[k];
        if (p.best.value < kS3Bound - kValueTol) continue;
        res.flagged.push_back(k);
        bool near = false;
        for (std::size_t a = 0; a < corner_u.size(); ++a) {
            for (std::size_t b = 0; b < corner_v.size(); ++b) {
                if (std::hypot(p.u - corner_u[a], p.v - corner_v[b]) <= cell) {
                    near = true;
                    corner_hit[a * corner_v.size() + b] = true;
                }
            }
        }
        if (!near) res.interior_maximizers.push_back(k);
    }
    for (std::size_t a = 0; a < corner_u.size(); ++a)
        for (std::size_t b = 0; b < corner_v.size(); ++b)
            if (corner_hit[a * corner_v.size() + b])
                res.maximizing_corners.push_back({corner_u[a], corner_v[b]});

    if (res.global_max > kS3Bound + kValueTol) res.failures.push_back("bound_exceeded");
    if (std::abs(res.global_max - kS3Bound) > kValueTol) res.failures.push_back("global_max");
    if (!res.interior_maximizers.empty()) res.failures.push_back("interior_maximizers");
    return res;
}

std::vector<CornerCheck> corner_checks(std::uint64_t seed) {
    std::vector<CornerCheck> out;
    for (const auto& c : corners()) {
        const qsim::KrausChannel ch = corner_channel(c);
        CornerCheck k;
        k.u = c[0];
        k.v = c[1];
        k.kraus_norms = ch.kraus_norms();
        k.kraus_rank = ch.kraus_rank();
        AscentOptions ao;
        ao.seed = seed;
        k.s3 = s3_inner_max(s3_correlation_matrix(ch), ao).value;
        k.rank_one = *std::min_element(k.kraus_norms.begin(), k.kraus_norms.end()) < 1e-12;
        out.push_back(std::move(k));
    }
    return out;
}

MixtureCheck corner_mixture(std::array<double, 2> a, std::array<double, 2> b, double p,
                            std::uint64_t seed) {
    const auto mixed = qsim::KrausChannel::mixture(corner_channel(a), corner_channel(b), p);
    AscentOptions ao;
    ao.seed = seed;
    MixtureCheck m;
    m.corner_a = a;
    m.corner_b = b;
    m.p = p;
    m.s3 = s3_inner_max(s3_correlation_matrix(mixed), ao).value;
    return m;
}

std::vector<MixtureCheck> corner_mixtures(std::uint64_t seed) {
    std::vector<MixtureCheck> out;
    const auto& k = corners();
    for (std::size_t i = 0; i < k.size(); ++i)
        for (std::size_t j = i + 1; j < k.size(); ++j) out.push_back(corner_mixture(k[i], k[j], 0.5, seed));
    return out;
}

double lemma1_residual(std::uint64_t seed, int scenarios) {
    double worst = 0.0;
    for (int s = 0; s < scenarios; ++s) {
        Rng rng = make_rng(seed, static_cast<std::uint64_t>(s));
        const auto rho = qsim::random_density_matrix(rng);
        const auto ch = qsim::random_channel(rng);
        const auto a = qsim::random_observable(rng);
        const auto b = qsim::random_observable(rng);
        const double lhs = qsim::pdm_correlation(qsim::pdm_two_events(rho, ch), a, b);
        const double rhs = qsim::seq_corr_channel(rho, a, b, ch);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

double isometry_residual(std::uint64_t seed, int scenarios) {
    constexpr std::array<qsim::PauliAxis, 3> axes{qsim::PauliAxis::X, qsim::PauliAxis::Y,
                                                  qsim::PauliAxis::Z};
    double worst = 0.0;
    for (int s = 0; s < scenarios; ++s) {
        Rng rng = make_rng(seed, 1'000'000u + static_cast<std::uint64_t>(s));
        const auto rho = qsim::random_density_matrix(rng);
        const auto ch = qsim::random_channel(rng);
        const auto a = qsim::random_observable(rng);
        const auto b = qsim::random_observable(rng);
        const CMatrix u = qsim::haar_unitary(rng);
        const auto r = qsim::isometry_in_time_check(rho, ch, a, b, axes[s % 3], u);
        worst = std::max(worst, std::abs(r.before - r.after));
    }
    return worst;
}

CertificationReport full_report(const ReportOptions& opts) {
    CertificationReport rep;
    auto stage = [](const char* component, auto&& fn) {
        try {
            return fn();
        } catch (const ComponentError&) {
            throw;
        } catch (const std::exception& e) {
            throw ComponentError(component, e.what());
        }
    };

    rep.ncycle_bundle = stage("ncycle", [&] {
        return opts.w_override ? ncycle::certificate_bundle(opts.n, *opts.w_override)
                               : ncycle::certificate_bundle(opts.n);
    });
    for (const auto& f : rep.ncycle_bundle.failures) rep.failures.push_back("ncycle." + f);

    rep.sweep = stage("certify.sweep", [&] { return channel_sweep(opts.grid_u, opts.grid_v, opts.seed); });
    for (const auto& f : rep.sweep.failures) rep.failures.push_back("certify.sweep." + f);

    rep.corners = stage("certify.corners", [&] { return corner_checks(opts.seed); });
    for (const auto& c : rep.corners) {
        if (!c.rank_one) {
            rep.failures.push_back("certify.corner_rank");
            break;
        }
    }
    rep.mixtures = stage("certify.mixtures", [&] { return corner_mixtures(opts.seed); });
    for (const auto& m : rep.mixtures) {
        if (!(m.s3 < kS3Bound - 0.01)) {
            rep.failures.push_back("certify.mixture");
            break;
        }
    }

    rep.lemma1_residual = stage("qsim.lemma1", [&] { return lemma1_residual(opts.seed, 200); });
    if (!(rep.lemma1_residual <= 1e-10)) rep.failures.push_back("qsim.lemma1");
    rep.isometry_residual = stage("qsim.isometry", [&] { return isometry_residual(opts.seed, 100); });
    if (!(rep.isometry_residual <= 1e-10)) rep.failures.push_back("qsim.isometry");

    rep.verdict = rep.failures.empty();
    return rep;
}

}  // namespace tcert::certify
