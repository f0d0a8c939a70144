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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "tcert/random.hpp"

namespace tcert::certify {
namespace {

constexpr double kPi = std::numbers::pi;

bool contains(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

// The correlation matrix of the family is diagonal with these weights.
std::array<double, 3> weights(double u, double v) {
    return {std::cos(u), std::cos(v), std::cos(u - v)};
}

TEST(CorrelationMatrix, DiagonalWeights) {
    for (std::uint64_t s = 0; s < 30; ++s) {
        Rng rng = make_rng(31, s);
        std::uniform_real_distribution<double> du(0.0, 2 * kPi), dv(0.0, kPi);
        const double u = du(rng), v = dv(rng);
        const Mat3 c = s3_correlation_matrix(qsim::pauli_channel({u, v}));
        const auto w = weights(u, v);
        for (std::size_t k = 0; k < 3; ++k)
            for (std::size_t l = 0; l < 3; ++l) EXPECT_NEAR(c[k][l], k == l ? w[k] : 0.0, 1e-12);
    }
}

TEST(S3Value, FunctionalForm) {
    Mat3 c{};
    c[0][0] = c[1][1] = c[2][2] = 1.0;
    const Vec3 x{1, 0, 0}, y{0.5, std::sqrt(3.0) / 2, 0}, z{-0.5, std::sqrt(3.0) / 2, 0};
    EXPECT_NEAR(s3_value(c, x, y, z), 1.5, 1e-15);
    EXPECT_NEAR(s3_value(c, x, x, x), 1.0, 1e-15);
}

TEST(InnerMax, IdentityChannel) {
    const auto r = s3_inner_max(0.0, 0.0);
    EXPECT_NEAR(r.value, 1.5, 1e-9);
    // Certificate value recomputed from the reported directions.
    const Mat3 c = s3_correlation_matrix(qsim::pauli_channel({0, 0}));
    EXPECT_NEAR(s3_value(c, r.a1, r.a2, r.a3), r.value, 1e-12);
    // Pairwise weighted products carry signs (+, +, -) at +-1/2.
    EXPECT_NEAR(qsim::dot(r.a1, r.a2), 0.5, 1e-6);
    EXPECT_NEAR(qsim::dot(r.a2, r.a3), 0.5, 1e-6);
    EXPECT_NEAR(qsim::dot(r.a3, r.a1), -0.5, 1e-6);
}

// With C = diag(1, -1, -1) the choice a1 = a3 = y, a2 = -y gives 1 + 1 + 1.
// This exceeds 3/2, so the bound cannot hold across the whole family.
TEST(InnerMax, BitFlipCornerReachesThreeNotOneAndAHalf) {
    const auto r = s3_inner_max(0.0, kPi);
    EXPECT_NEAR(r.value, 3.0, 1e-9);
    const Mat3 c = s3_correlation_matrix(qsim::pauli_channel({0, kPi}));
    EXPECT_NEAR(s3_value(c, {0, 1, 0}, {0, -1, 0}, {0, 1, 0}), 3.0, 1e-15);
}

TEST(InnerMax, ResetChannelAgainstBruteForce) {
    const auto r = s3_inner_max(kPi / 2, kPi / 2);
    EXPECT_NEAR(r.value, oracle::coplanar_s3_max_full_grid(weights(kPi / 2, kPi / 2)), 1e-3);
    EXPECT_NEAR(r.value, 1.0, 1e-9);
}

TEST(InnerMax, RandomPointsAgainstCoplanarBruteForce) {
    for (std::uint64_t s = 0; s < 25; ++s) {
        Rng rng = make_rng(32, s);
        std::uniform_real_distribution<double> du(0.0, 2 * kPi), dv(0.0, kPi);
        const double u = du(rng), v = dv(rng);
        const auto r = s3_inner_max(u, v);
        EXPECT_NEAR(r.value, oracle::coplanar_s3_max(weights(u, v)), 1e-3) << u << " " << v;
        EXPECT_LE(r.value, 3.0 + 1e-9);
    }
}

TEST(InnerMax, NeverAboveThree) {
    // |a^T C b| <= 1 for a contraction C, so three terms give at most 3.
    for (std::uint64_t s = 0; s < 200; ++s) {
        Rng rng = make_rng(33, s);
        const auto ch = qsim::random_channel(rng);
        const Mat3 c = s3_correlation_matrix(ch);
        EXPECT_LE(s3_inner_max(c).value, 3.0 + 1e-9);
    }
}

TEST(Sweep, GlobalMaximumAndFlags) {
    const auto sw = channel_sweep(17, 9);
    EXPECT_EQ(sw.points.size(), 17u * 9u);
    EXPECT_NEAR(sw.global_max, 3.0, 1e-9);
    EXPECT_FALSE(sw.ok());
    EXPECT_TRUE(contains(sw.failures, "bound_exceeded"));
    EXPECT_FALSE(sw.interior_maximizers.empty());
    for (std::size_t i : sw.flagged) EXPECT_GE(sw.points[i].best.value, kS3Bound - 1e-6);
    for (const auto& p : sw.points) EXPECT_LE(p.best.value, 3.0 + 1e-9);
    EXPECT_THROW(channel_sweep(4, 9), std::invalid_argument);
}

TEST(Sweep, Deterministic) {
    const auto a = channel_sweep(9, 9, 3), b = channel_sweep(9, 9, 3);
    for (std::size_t i = 0; i < a.points.size(); ++i) EXPECT_EQ(a.points[i].best.value, b.points[i].best.value);
}

TEST(Corners, AllRankOne) {
    const auto cs = corner_checks();
    EXPECT_EQ(cs.size(), 4u);
    for (const auto& c : cs) {
        EXPECT_EQ(c.kraus_rank, 1u) << c.u << "," << c.v;
        EXPECT_TRUE(c.rank_one);
        const bool identity_like = std::cos(c.u) > 0 && std::cos(c.v) > 0;
        EXPECT_NEAR(c.s3, identity_like ? 1.5 : 3.0, 1e-9) << c.u << "," << c.v;
    }
}

TEST(Mixtures, PinnedValues) {
    const auto ms = corner_mixtures();
    EXPECT_EQ(ms.size(), 6u);
    for (const auto& m : ms) {
        const bool with_identity = (m.corner_a[0] == 0.0 && m.corner_a[1] == 0.0) ||
                                   (m.corner_b[0] == 0.0 && m.corner_b[1] == 0.0);
        EXPECT_NEAR(m.s3, with_identity ? 1.0 : 3.0, 1e-9);
    }
    EXPECT_NEAR(corner_mixture({0, 0}, {0, 0}, 0.3).s3, 1.5, 1e-9);
}

TEST(Residuals, Small) {
    EXPECT_LE(lemma1_residual(7), 1e-12);
    EXPECT_LE(isometry_residual(7), 1e-12);
}

TEST(FullReport, FaultInjection) {
    ReportOptions o;
    o.n = 5;
    o.grid_u = 9;
    o.grid_v = 9;
    Matrix w = ncycle::dual_certificate(5).w.matrix();
    w(0, 4) = -w(0, 4);
    w(4, 0) = -w(4, 0);
    o.w_override = SymMatrix(w);
    const auto r = full_report(o);
    EXPECT_FALSE(r.verdict);
    EXPECT_TRUE(contains(r.failures, "ncycle.dual_infeasible"));
}

TEST(FullReport, ThreeCycleComponents) {
    ReportOptions o;
    o.grid_u = 9;
    o.grid_v = 9;
    const auto r = full_report(o);
    EXPECT_TRUE(r.ncycle_bundle.ok());
    EXPECT_LE(r.lemma1_residual, 1e-12);
    EXPECT_LE(r.isometry_residual, 1e-12);
    EXPECT_FALSE(r.verdict);
    EXPECT_TRUE(contains(r.failures, "certify.sweep.bound_exceeded"));
    for (const auto& f : r.failures) {
        EXPECT_NE(f.rfind("ncycle.", 0), 0u) << f;
        EXPECT_NE(f.rfind("qsim.", 0), 0u) << f;
    }
}

}  // namespace
}  // namespace tcert::certify
