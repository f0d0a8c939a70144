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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "tcert/linalg.hpp"
#include "tcert/ncycle.hpp"

namespace tcert::ncycle {
namespace {

TEST(Projection, FixesFeasiblePoints) {
    const SymMatrix x = analytic_optimizer(6);
    EXPECT_LE(frobenius_distance(project_unit_diagonal_psd(x), x), 1e-12);
}

TEST(Projection, OutputIsFeasible) {
    for (std::uint64_t s = 0; s < 40; ++s) {
        Rng rng = make_rng(91, s);
        const std::size_t n = 3 + s % 6;
        const SymMatrix y(oracle::random_symmetric(rng, n) + Matrix::identity(n) * 3.0);
        const SymMatrix p = project_unit_diagonal_psd(y);
        EXPECT_GE(min_eigenvalue(p), -1e-12);
        for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(p(i, i), 1.0, 1e-12);
    }
}

TEST(Robustness, SamplesAreFeasibleAndHitTargets) {
    const auto c = robustness_experiment(6);
    ASSERT_EQ(c.samples.size(), 60u);
    EXPECT_EQ(c.skipped, 0);
    for (const auto& s : c.samples) {
        EXPECT_GE(s.min_eigenvalue, -1e-9);
        EXPECT_LE(s.diag_residual, 1e-12);
        EXPECT_NEAR(s.epsilon, s.target, 0.05 * s.target);
        EXPECT_GT(s.distance, 0.0);
    }
}

TEST(Robustness, DistanceShrinksWithDeficit) {
    const auto c = robustness_experiment(8);
    double mean[3] = {0, 0, 0};
    for (const auto& s : c.samples) {
        const int k = s.target > 5e-3 ? 0 : (s.target > 5e-4 ? 1 : 2);
        mean[k] += s.distance;
    }
    EXPECT_GT(mean[0], mean[1]);
    EXPECT_GT(mean[1], mean[2]);
}

TEST(Robustness, EightCycleIsLinear) {
    const auto c = robustness_experiment(8);
    EXPECT_GE(c.loglog_exponent, 0.8);
    EXPECT_LE(c.loglog_exponent, 1.2);
    EXPECT_GT(c.fitted_slope, 0.0);
}

TEST(Robustness, FiveCycleIsLinear) {
    const auto c = robustness_experiment(5);
    EXPECT_GE(c.loglog_exponent, 0.8);
    EXPECT_LE(c.loglog_exponent, 1.2);
}

TEST(Robustness, Deterministic) {
    const auto a = robustness_experiment(4);
    const auto b = robustness_experiment(4);
    ASSERT_EQ(a.samples.size(), b.samples.size());
    for (std::size_t k = 0; k < a.samples.size(); ++k) EXPECT_EQ(a.samples[k].distance, b.samples[k].distance);
    EXPECT_EQ(a.loglog_exponent, b.loglog_exponent);
}

TEST(Robustness, InwardOnlyReported) {
    RobustnessOptions o;
    o.inward_only = true;
    const auto c = robustness_experiment(3, o);
    EXPECT_TRUE(std::isfinite(c.loglog_exponent));
    RecordProperty("n3_inward_exponent", std::to_string(c.loglog_exponent));
}

TEST(Robustness, RejectsBadInput) {
    EXPECT_THROW(robustness_experiment(2), std::invalid_argument);
    RobustnessOptions o;
    o.epsilons = {};
    EXPECT_THROW(robustness_experiment(3, o), std::invalid_argument);
}

// Rotating one Gram vector inside the optimal plane keeps X feasible and
// costs only second order in the angle, so distance goes like sqrt(deficit).
// This is why the literal random generator can see sublinear scaling.
TEST(Robustness, InPlaneRotationGivesSquareRootLaw) {
    for (int n : {3, 5}) {
        const auto bound = build(n).quantum_bound;
        auto probe = [&](double delta) {
            Matrix x(n, n);
            auto angle = [&](int i) { return i * std::numbers::pi / n + (i == 0 ? delta : 0.0); };
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) x(i, j) = std::cos(angle(i) - angle(j));
            const SymMatrix xs(x);
            return std::pair{bound - build(n).evaluate(xs), frobenius_distance(xs, analytic_optimizer(n))};
        };
        const auto [e1, d1] = probe(1e-2);
        const auto [e2, d2] = probe(1e-4);
        EXPECT_GT(e1, 0.0);
        const double exponent = std::log(d1 / d2) / std::log(e1 / e2);
        EXPECT_NEAR(exponent, 0.5, 0.01) << n;
    }
}

}  // namespace
}  // namespace tcert::ncycle
