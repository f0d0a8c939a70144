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
#include <string>
#include <vector>

#include "tcert/matrix.hpp"
#include "tcert/sdp.hpp"

namespace tcert::ncycle {

/// S_N = sum_{i<N} <A_i A_{i+1}> - <A_N A_1>, stored as a symmetric
/// coefficient matrix with +-1/2 off the diagonal so that <Lambda, X> = S_N.
struct NCycleInequality {
    int n = 0;
    SymMatrix coefficients;
    double classical_bound = 0.0;  ///< N - 2
    double quantum_bound = 0.0;    ///< N cos(pi/N)

    double evaluate(const SymMatrix& x) const;
    sdp::SdpProblem problem() const { return sdp::SdpProblem(coefficients); }
};

NCycleInequality build(int n);

/// X_ij = cos((i - j) pi / n).
SymMatrix analytic_optimizer(int n);

/// T_n: -1 on the cycle off-diagonals, +1 at (1,n) and (n,1).
SymMatrix t_matrix(int n);

struct DualCertificate {
    SymMatrix w;  ///< cos(pi/n) I + T/2
    SymMatrix t;
};

DualCertificate dual_certificate(int n);

/// {-2 cos((2m+1) pi / n) : m = 0..n-1}, ascending.
std::vector<double> t_spectrum_analytic(int n);

inline constexpr double kNullspaceThreshold = 1e-9;

/// Dimension of {M symmetric, diag(M) = 0, M W = 0}.
std::size_t nondegeneracy_nullspace(const SymMatrix& w, double rel_threshold = kNullspaceThreshold);
std::size_t nondegeneracy_nullspace(int n);

struct CertificateBundle {
    int n = 0;
    SymMatrix x_opt;
    SymMatrix w;
    SymMatrix t;
    double objective = 0.0;
    double dual_value = 0.0;  ///< trace(W)
    double slackness = 0.0;   ///< <X_opt, W>
    double x_min_eig = 0.0;
    double w_min_eig = 0.0;
    std::size_t nullspace_dim = 0;
    /// Names of failed checks; empty when every invariant holds.
    std::vector<std::string> failures;

    bool ok() const noexcept { return failures.empty(); }
};

CertificateBundle certificate_bundle(int n);
/// Same checks against a caller-supplied W (fault injection, external certificates).
CertificateBundle certificate_bundle(int n, const SymMatrix& w);

/// Columns of the principal square root of a PSD unit-diagonal X.
std::vector<std::vector<double>> gram_vectors(const SymMatrix& x);

struct QubitRealizationReport {
    int n = 0;
    int states = 0;
    double max_entry_deviation = 0.0;  ///< max |Tr[rho {A_i, A_j}]/2 - X_opt[i][j]|
    double max_value_deviation = 0.0;  ///< max |S_n(rho) - n cos(pi/n)|
    double expected_value = 0.0;
};

/// Planar Bloch observables at angles (i-1) pi / n measured on `states`
/// density matrices: I/2, |0><0| and then seeded random mixed states.
QubitRealizationReport qubit_realization_check(int n, std::uint64_t seed, int states = 50);

struct RobustnessOptions {
    std::vector<double> epsilons{1e-2, 1e-3, 1e-4};
    int trials_per_eps = 20;
    std::uint64_t seed = 1;
    double deficit_rel_tol = 0.05;
    int bisection_cap = 200;
    /// Flip each direction so that <W, D> >= 0 (never leaves the cone to first order).
    bool inward_only = false;
};

struct RobustnessSample {
    double target = 0.0;
    double epsilon = 0.0;   ///< achieved objective deficit
    double distance = 0.0;  ///< ||X_real - X_opt||_F
    double min_eigenvalue = 0.0;
    double diag_residual = 0.0;
};

struct RobustnessCurve {
    int n = 0;
    std::vector<RobustnessSample> samples;
    double fitted_slope = 0.0;     ///< least squares d = slope * eps through the origin
    double fit_residual = 0.0;     ///< relative RMS residual of that fit
    double loglog_exponent = 0.0;  ///< slope of log d against log eps
    double envelope_ratio = 0.0;   ///< max d / (slope * eps)
    int skipped = 0;
    std::vector<std::string> warnings;
};

RobustnessCurve robustness_experiment(int n, const RobustnessOptions& opts = {});

/// Eigenvalue clipping to >= 0 followed by X <- D^-1/2 X D^-1/2.
SymMatrix project_unit_diagonal_psd(const SymMatrix& x);

}  // namespace tcert::ncycle
