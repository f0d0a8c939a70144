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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace tcert::sdp {

SdpProblem::SdpProblem(SymMatrix objective) : objective_(std::move(objective)) {
    for (std::size_t i = 0; i < objective_.dim(); ++i) {
        if (objective_(i, i) != 0.0) {
            std::ostringstream os;
            os << "SdpProblem: objective must have a zero diagonal (Lambda_" << i << i << " = "
               << objective_(i, i) << ")";
            throw std::invalid_argument(os.str());
        }
    }
}

double SdpProblem::primal_value(const SymMatrix& x) const {
    if (x.dim() != dim()) throw DimensionError("primal_value: dimension mismatch");
    return inner(objective_.matrix(), x.matrix());
}

SymMatrix SdpProblem::dual_slack(const std::vector<double>& y) const {
    if (y.size() != dim()) throw DimensionError("dual_slack: dimension mismatch");
    Matrix s = -objective_.matrix();
    for (std::size_t i = 0; i < y.size(); ++i) s(i, i) += y[i];
    return SymMatrix(std::move(s));
}

std::string to_string(SdpStatus s) {
    switch (s) {
        case SdpStatus::optimal:
            return "optimal";
        case SdpStatus::max_iter:
            return "max_iter";
        case SdpStatus::infeasible:
            return "infeasible";
    }
    return "unknown";
}

namespace {

constexpr int kMaxBacktracks = 30;

// L^{-1} D L^{-T} for lower-triangular L.
Matrix congruence_by_inverse(const Matrix& l, const Matrix& d) {
    const std::size_t n = l.rows();
    Matrix y(n, n);
    // Y = L^{-1} D, column by column.
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            double s = d(i, j);
            for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * y(k, j);
            y(i, j) = s / l(i, i);
        }
    }
    // Z = Y L^{-T}, i.e. Z^T = L^{-1} Y^T.
    const Matrix yt = y.transpose();
    Matrix zt(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            double s = yt(i, j);
            for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * zt(k, j);
            zt(i, j) = s / l(i, i);
        }
    }
    return zt.transpose();
}

// Largest alpha with P + alpha D still PSD (infinity when D is PSD).
double max_step(const Matrix& chol_p, const Matrix& d) {
    const double lo = min_eigenvalue(SymMatrix(congruence_by_inverse(chol_p, d)));
    return lo >= 0.0 ? std::numeric_limits<double>::infinity() : -1.0 / lo;
}

struct Direction {
    Matrix dx;
    std::vector<double> dy;
};

// HKM direction for the unit-diagonal family:
//   (X o S^{-1}) dy = mu diag(S^{-1}) - 1 - diag(R)
//   dX = mu S^{-1} - X - X Diag(dy) S^{-1} - R,   symmetrized.
Direction hkm_direction(const Matrix& x, const Matrix& s_inv, const Matrix& chol_schur, double mu,
                        const Matrix* correction) {
    const std::size_t n = x.rows();
    std::vector<double> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        rhs[i] = mu * s_inv(i, i) - 1.0 - (correction ? (*correction)(i, i) : 0.0);
    }
    Direction d;
    d.dy = cholesky_solve(chol_schur, rhs);

    Matrix x_ds(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x_ds(i, j) = x(i, j) * d.dy[j];
    Matrix dx = mu * s_inv - x - x_ds * s_inv;
    if (correction) dx -= *correction;
    d.dx = SymMatrix(std::move(dx)).matrix();
    return d;
}

}  // namespace

SdpSolution solve(const SdpProblem& problem, const SolverOptions& opts) {
    if (!(opts.tol > 0.0)) throw std::invalid_argument("solve: tol must be positive");
    const std::size_t n = problem.dim();
    const Matrix& lambda = problem.objective().matrix();

    Matrix x = Matrix::identity(n);
    std::vector<double> y(n, 1.0 + frobenius_norm(lambda));
    SymMatrix s = problem.dual_slack(y);

    SdpSolution sol;
    sol.status = SdpStatus::max_iter;
    int iter = 0;
    for (;; ++iter) {
        const double pv = inner(lambda, x);
        const double dv = std::accumulate(y.begin(), y.end(), 0.0);
        if (dv - pv <= opts.tol) {
            sol.status = SdpStatus::optimal;
            break;
        }
        if (iter >= opts.max_iter) break;

        const auto chol_s = cholesky(s);
        const auto chol_x = cholesky(SymMatrix(x));
        if (!chol_s || !chol_x) {
            std::ostringstream os;
            os << "solve: iterate left the interior at iteration " << iter << " (gap " << dv - pv
               << ")";
            throw SolverError(os.str());
        }
        const Matrix s_inv = spd_inverse(*chol_s).matrix();
        const auto chol_schur = cholesky(SymMatrix(hadamard(x, s_inv)));
        if (!chol_schur) {
            std::ostringstream os;
            os << "solve: Newton system X o S^-1 is numerically singular at iteration " << iter
               << " (gap " << dv - pv << ")";
            throw SolverError(os.str());
        }

        const double mu = inner(x, s.matrix()) / static_cast<double>(n);

        // Predictor (affine scaling).
        const Direction pred = hkm_direction(x, s_inv, *chol_schur, 0.0, nullptr);
        const Matrix ds_pred = Matrix::diagonal(std::span<const double>(pred.dy));
        const double ap = std::min(1.0, max_step(*chol_x, pred.dx));
        const double ad = std::min(1.0, max_step(*chol_s, ds_pred));
        const double gap_pred =
            inner(x + ap * pred.dx, s.matrix() + ad * ds_pred) / static_cast<double>(n);
        const double sigma = std::clamp(std::pow(gap_pred / mu, 3.0), 0.0, 1.0);

        // Corrector with the second-order term.
        const Matrix correction = pred.dx * ds_pred * s_inv;
        const Direction corr = hkm_direction(x, s_inv, *chol_schur, sigma * mu, &correction);
        const Matrix ds = Matrix::diagonal(std::span<const double>(corr.dy));
        double alpha_p = std::min(1.0, opts.step_fraction * max_step(*chol_x, corr.dx));
        double alpha_d = std::min(1.0, opts.step_fraction * max_step(*chol_s, ds));

        // Near the optimum rounding can put the nominal step just outside the
        // cone; backtrack until the Cholesky factorization succeeds.
        Matrix x_next;
        for (int k = 0;; ++k, alpha_p *= 0.5) {
            x_next = x + alpha_p * corr.dx;
            for (std::size_t i = 0; i < n; ++i) x_next(i, i) = 1.0;
            if (cholesky(SymMatrix(x_next)) || k == kMaxBacktracks) break;
        }
        std::vector<double> y_next(n);
        SymMatrix s_next;
        for (int k = 0;; ++k, alpha_d *= 0.5) {
            for (std::size_t i = 0; i < n; ++i) y_next[i] = y[i] + alpha_d * corr.dy[i];
            s_next = problem.dual_slack(y_next);
            if (cholesky(s_next) || k == kMaxBacktracks) break;
        }
        x = std::move(x_next);
        y = std::move(y_next);
        s = std::move(s_next);
    }

    sol.primal = SymMatrix(std::move(x));
    sol.dual = std::move(y);
    sol.dual_slack = std::move(s);
    sol.primal_value = problem.primal_value(sol.primal);
    sol.dual_value = std::accumulate(sol.dual.begin(), sol.dual.end(), 0.0);
    sol.gap = sol.dual_value - sol.primal_value;
    sol.iterations = iter;
    return sol;
}

CertificateVerdict check_certificate(const SdpProblem& problem, const SymMatrix& x,
                                     const std::vector<double>& y,
                                     const CertificateTolerances& tol) {
    if (x.dim() != problem.dim() || y.size() != problem.dim()) {
        throw DimensionError("check_certificate: dimension mismatch (problem " +
                             std::to_string(problem.dim()) + ", X " + std::to_string(x.dim()) +
                             ", y " + std::to_string(y.size()) + ")");
    }
    CertificateVerdict v;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        v.diag_residual = std::max(v.diag_residual, std::abs(x(i, i) - 1.0));
    }
    const SymMatrix s = problem.dual_slack(y);
    v.primal_min_eigenvalue = min_eigenvalue(x);
    v.dual_slack_min_eigenvalue = min_eigenvalue(s);
    v.complementarity = inner(x.matrix(), s.matrix());
    v.primal_value = problem.primal_value(x);
    v.dual_value = std::accumulate(y.begin(), y.end(), 0.0);
    v.primal_feasible = v.diag_residual <= tol.feasibility && v.primal_min_eigenvalue >= -tol.psd;
    v.dual_feasible = v.dual_slack_min_eigenvalue >= -tol.psd;
    v.optimal_pair =
        v.primal_feasible && v.dual_feasible && std::abs(v.complementarity) <= tol.complementarity;
    return v;
}

}  // namespace tcert::sdp
