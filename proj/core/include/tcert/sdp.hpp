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

#include <stdexcept>
#include <string>
#include <vector>

#include "tcert/linalg.hpp"
#include "tcert/matrix.hpp"

namespace tcert::sdp {

/// maximize <Lambda, X>  subject to  X = X^T >= 0,  X_ii = 1.
///
/// The dual is  minimize sum(y)  subject to  S = Diag(y) - Lambda >= 0.
/// Lambda must have a zero diagonal: the objective never references X_ii.
class SdpProblem {
   public:
    explicit SdpProblem(SymMatrix objective);

    std::size_t dim() const noexcept { return objective_.dim(); }
    const SymMatrix& objective() const noexcept { return objective_; }

    /// sum_ij Lambda_ij X_ij
    double primal_value(const SymMatrix& x) const;
    /// Diag(y) - Lambda
    SymMatrix dual_slack(const std::vector<double>& y) const;

   private:
    SymMatrix objective_;
};

enum class SdpStatus { optimal, max_iter, infeasible };

std::string to_string(SdpStatus s);

struct SdpSolution {
    SymMatrix primal;
    std::vector<double> dual;
    SymMatrix dual_slack;
    double primal_value = 0.0;
    double dual_value = 0.0;
    double gap = 0.0;
    int iterations = 0;
    SdpStatus status = SdpStatus::max_iter;
};

struct SolverOptions {
    double tol = 1e-9;
    int max_iter = 200;
    /// Fraction of the step to the PSD boundary that is actually taken.
    double step_fraction = 0.98;
};

/// Raised when the Newton system or a PSD factorization breaks down.
class SolverError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Primal-dual path-following (HKM direction, Mehrotra predictor-corrector)
/// started from the strictly feasible pair X = I, y = (1 + ||Lambda||_F) 1.
/// Every iterate is exactly primal and dual feasible, so the reported gap
/// <X, S> certifies the objective value.
SdpSolution solve(const SdpProblem& problem, const SolverOptions& opts = {});

struct CertificateTolerances {
    double feasibility = 1e-9;
    double psd = kPsdTolerance;
    double complementarity = 1e-9;
};

struct CertificateVerdict {
    double diag_residual = 0.0;        ///< max_i |X_ii - 1|
    double primal_min_eigenvalue = 0.0;
    double dual_slack_min_eigenvalue = 0.0;
    double complementarity = 0.0;      ///< <X, S>
    double primal_value = 0.0;
    double dual_value = 0.0;
    bool primal_feasible = false;
    bool dual_feasible = false;
    bool optimal_pair = false;
};

/// Checks a candidate primal/dual pair. Feasible plus <X, S> = 0 means both
/// are optimal.
CertificateVerdict check_certificate(const SdpProblem& problem, const SymMatrix& x,
                                     const std::vector<double>& y,
                                     const CertificateTolerances& tol = {});

}  // namespace tcert::sdp
