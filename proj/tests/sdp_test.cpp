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

#include "tcert/sdp.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "tcert/ncycle.hpp"
#include "tcert/random.hpp"

namespace tcert::sdp {
namespace {

SdpProblem cycle_problem(int n) { return ncycle::build(n).problem(); }

TEST(SdpProblem, RejectsNonzeroDiagonal) {
    EXPECT_THROW(SdpProblem(SymMatrix{{1, 0}, {0, 0}}), std::invalid_argument);
}

TEST(SdpProblem, DualSlack) {
    const auto p = cycle_problem(3);
    const SymMatrix s = p.dual_slack({0.5, 0.5, 0.5});
    EXPECT_LE(frobenius_distance(s, ncycle::dual_certificate(3).w), 1e-15);
    EXPECT_THROW(p.dual_slack({1.0}), DimensionError);
}

TEST(Solve, ThreeCycle) {
    const auto sol = solve(cycle_problem(3));
    EXPECT_EQ(sol.status, SdpStatus::optimal);
    EXPECT_NEAR(sol.primal_value, 1.5, 1e-6);
}

TEST(Solve, FourCycle) {
    const auto sol = solve(cycle_problem(4));
    EXPECT_EQ(sol.status, SdpStatus::optimal);
    EXPECT_NEAR(sol.primal_value, 4.0 * std::cos(std::numbers::pi / 4.0), 1e-6);
}

TEST(Solve, ZeroObjective) {
    const auto sol = solve(SdpProblem(SymMatrix::zeros(4)));
    EXPECT_EQ(sol.status, SdpStatus::optimal);
    EXPECT_NEAR(sol.primal_value, 0.0, 1e-12);
    EXPECT_LE(sol.gap, 1e-9);
    const auto v = check_certificate(SdpProblem(SymMatrix::zeros(4)), SymMatrix::identity(4), sol.dual);
    EXPECT_TRUE(v.primal_feasible);
}

TEST(Solve, SolutionInvariants) {
    for (int n = 3; n <= 12; ++n) {
        const auto p = cycle_problem(n);
        const auto sol = solve(p);
        ASSERT_EQ(sol.status, SdpStatus::optimal) << n;
        EXPECT_LE(sol.gap, 1e-9);
        EXPECT_GE(sol.gap, -1e-8);
        for (std::size_t i = 0; i < p.dim(); ++i) EXPECT_NEAR(sol.primal(i, i), 1.0, 1e-9);
        EXPECT_GE(min_eigenvalue(sol.primal), -kPsdTolerance);
        EXPECT_GE(min_eigenvalue(sol.dual_slack), -kPsdTolerance);
        EXPECT_NEAR(sol.gap, sol.dual_value - sol.primal_value, 1e-15);
    }
}

// Optimality sandwich against the closed form, and X agreement (unique optimum).
TEST(Solve, AgreesWithAnalyticOptimizer) {
    for (int n = 3; n <= 12; ++n) {
        const auto sol = solve(cycle_problem(n));
        const double bound = n * std::cos(std::numbers::pi / n);
        EXPECT_NEAR(sol.primal_value, bound, 1e-6) << n;
        EXPECT_NEAR(sol.dual_value, bound, 1e-6) << n;
        EXPECT_LE(frobenius_distance(sol.primal, ncycle::analytic_optimizer(n)), 1e-4) << n;
        EXPECT_NEAR(oracle::cycle_value(sol.primal.matrix()), sol.primal_value, 1e-12);
    }
}

TEST(Solve, RandomObjectivesWeakDuality) {
    for (std::uint64_t s = 0; s < 25; ++s) {
        Rng rng = make_rng(555, s);
        const std::size_t n = 2 + s % 8;
        const SdpProblem p{SymMatrix(oracle::random_zero_diag_symmetric(rng, n))};
        const auto sol = solve(p);
        ASSERT_EQ(sol.status, SdpStatus::optimal) << s;
        EXPECT_GE(sol.dual_value, sol.primal_value - 1e-8);
        const auto v = check_certificate(p, sol.primal, sol.dual, {1e-9, 1e-9, 1e-7});
        EXPECT_TRUE(v.primal_feasible);
        EXPECT_TRUE(v.dual_feasible);
        // Any feasible X is beaten by the dual value, e.g. the identity.
        EXPECT_GE(sol.dual_value, p.primal_value(SymMatrix::identity(n)) - 1e-8);
    }
}

TEST(Solve, IterationCapReportsMaxIter) {
    SolverOptions o;
    o.max_iter = 1;
    const auto sol = solve(cycle_problem(6), o);
    EXPECT_EQ(sol.status, SdpStatus::max_iter);
    EXPECT_EQ(sol.iterations, 1);
    EXPECT_GT(sol.gap, 1e-9);
}

TEST(Solve, RejectsNonPositiveTolerance) {
    SolverOptions o;
    o.tol = 0.0;
    EXPECT_THROW(solve(cycle_problem(3), o), std::invalid_argument);
}

TEST(Solve, IdentityIsStrictlyFeasibleStart) {
    for (int n = 3; n <= 12; ++n) {
        const auto v = check_certificate(cycle_problem(n), SymMatrix::identity(n), std::vector<double>(n, 10.0));
        EXPECT_TRUE(v.primal_feasible);
        EXPECT_DOUBLE_EQ(v.primal_min_eigenvalue, 1.0);
    }
}

TEST(CheckCertificate, OptimalPairAtThree) {
    const auto v = check_certificate(cycle_problem(3), ncycle::analytic_optimizer(3), {0.5, 0.5, 0.5});
    EXPECT_TRUE(v.optimal_pair);
    EXPECT_LE(std::abs(v.complementarity), 1e-9);
    // Independent evaluation of <X, S>.
    const Matrix s = ncycle::dual_certificate(3).w.matrix();
    double direct = 0.0;
    const Matrix x = ncycle::analytic_optimizer(3).matrix();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) direct += x(i, j) * s(i, j);
    EXPECT_NEAR(v.complementarity, direct, 1e-15);
}

TEST(CheckCertificate, IdentityIsNotOptimal) {
    const auto v = check_certificate(cycle_problem(3), SymMatrix::identity(3), {0.5, 0.5, 0.5});
    EXPECT_FALSE(v.optimal_pair);
    EXPECT_NEAR(v.complementarity, 1.5, 1e-12);
    EXPECT_TRUE(v.primal_feasible);
    EXPECT_TRUE(v.dual_feasible);
}

TEST(CheckCertificate, SmallDualIsInfeasible) {
    const auto v = check_certificate(cycle_problem(5), ncycle::analytic_optimizer(5), std::vector<double>(5, 0.1));
    EXPECT_FALSE(v.dual_feasible);
    EXPECT_FALSE(v.optimal_pair);
    EXPECT_LT(v.dual_slack_min_eigenvalue, -1e-9);
}

TEST(CheckCertificate, DimensionMismatch) {
    EXPECT_THROW(check_certificate(cycle_problem(3), SymMatrix::identity(4), {1, 1, 1}), DimensionError);
    EXPECT_THROW(check_certificate(cycle_problem(3), SymMatrix::identity(3), {1, 1}), DimensionError);
}

}  // namespace
}  // namespace tcert::sdp
