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

#include <optional>
#include <stdexcept>
#include <vector>

#include "tcert/matrix.hpp"

namespace tcert {

/// Default PSD tolerance: a matrix is PSD iff its minimum eigenvalue is >= -kPsdTolerance.
inline constexpr double kPsdTolerance = 1e-9;

/// Eigenpairs of a real-symmetric or complex-Hermitian matrix. Eigenvalues are
/// ascending; column k of `eigenvectors` belongs to eigenvalues[k].
template <typename T>
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    DenseMatrix<T> eigenvectors;
    int sweeps = 0;

    /// V diag(lambda) V^dagger.
    DenseMatrix<T> reconstruct() const;
};

class EigenSolverError : public std::runtime_error {
   public:
    EigenSolverError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

   private:
    double residual_;
};

/// Cyclic Jacobi. Throws EigenSolverError if the off-diagonal mass has not
/// dropped to round-off within the sweep cap.
EigenDecomposition<double> eig_sym(const SymMatrix& m);
EigenDecomposition<complex> eig_herm(const HermMatrix& m);

double min_eigenvalue(const SymMatrix& m);
double min_eigenvalue(const HermMatrix& m);

struct PsdVerdict {
    bool psd = false;
    double min_eigenvalue = 0.0;
    double tolerance = kPsdTolerance;
};

PsdVerdict psd_check(const SymMatrix& m, double tol = kPsdTolerance);
PsdVerdict psd_check(const HermMatrix& m, double tol = kPsdTolerance);

/// Sum of absolute eigenvalues.
double trace_norm(const HermMatrix& m);

double frobenius_distance(const SymMatrix& a, const SymMatrix& b);

/// Principal square root of a PSD matrix. Eigenvalues in [-tol, 0) are
/// clamped to zero; anything more negative is rejected.
SymMatrix principal_sqrt(const SymMatrix& m, double tol = kPsdTolerance);

/// Singular values in descending order (one-sided Jacobi).
std::vector<double> singular_values(const Matrix& a);

/// Number of singular values above rel_threshold * sigma_max.
std::size_t numerical_rank(const Matrix& a, double rel_threshold);

/// Lower-triangular L with L L^T = m, or nullopt if m is not numerically positive definite.
std::optional<Matrix> cholesky(const SymMatrix& m);

/// Inverse of a symmetric positive definite matrix from its Cholesky factor.
SymMatrix spd_inverse(const Matrix& chol_lower);

/// Solves (L L^T) x = b for the Cholesky factor L.
std::vector<double> cholesky_solve(const Matrix& chol_lower, std::vector<double> b);

}  // namespace tcert
