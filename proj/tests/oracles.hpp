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

// Reference computations used only by tests. Nothing here calls into the
// library's eigensolver, PDM builder or S3 optimizer.

#pragma once

#include <array>
#include <vector>

#include "tcert/matrix.hpp"
#include "tcert/qsim.hpp"
#include "tcert/random.hpp"

namespace tcert::oracle {

/// Eigenvalues by Householder tridiagonalization and Sturm-count bisection.
std::vector<double> bisection_eigenvalues(const Matrix& m, double tol = 1e-13);

/// Random symmetric matrix with N(0, 1) entries.
Matrix random_symmetric(Rng& rng, std::size_t n);
/// Random symmetric matrix with zero diagonal.
Matrix random_zero_diag_symmetric(Rng& rng, std::size_t n);

/// sum_{i<N} X_{i,i+1} - X_{N,1}
double cycle_value(const Matrix& x);

/// R = 1/4 sum_ij T_ij s_i (x) s_j with T_ij = 1/2 Tr[{s_i, rho} E^dagger(s_j)] (T_0j = Tr[rho E^dagger(s_j)]).
CMatrix pauli_expansion_pdm(const CMatrix& rho, const qsim::KrausChannel& ch);

/// Brute force S3 max over coplanar triples in the three coordinate planes.
/// a1 and a3 run over `step_deg` grids; a2 is then exact inside the plane.
double coplanar_s3_max(const std::array<double, 3>& weights, double step_deg = 1.0);
/// Same, with all three angles on the grid.
double coplanar_s3_max_full_grid(const std::array<double, 3>& weights, double step_deg = 1.0);

}  // namespace tcert::oracle
