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

#include "tcert/ncycle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "tcert/linalg.hpp"
#include "tcert/qsim.hpp"
#include "tcert/random.hpp"

namespace tcert::ncycle {
namespace {

constexpr double kPi = std::numbers::pi;

void require_cycle(int n, const char* what) {
    if (n < 3) {
        throw std::invalid_argument(std::string(what) + ": n must be >= 3, got " +
                                    std::to_string(n));
    }
}

std::size_t dim_of(int n) { return static_cast<std::size_t>(n); }

}  // namespace

double NCycleInequality::evaluate(const SymMatrix& x) const {
    if (x.dim() != coefficients.dim()) throw DimensionError("NCycleInequality::evaluate: dimension");
    return inner(coefficients.matrix(), x.matrix());
}

NCycleInequality build(int n) {
    require_cycle(n, "build");
    const std::size_t d = dim_of(n);
    Matrix lambda(d, d);
    for (std::size_t i = 0; i + 1 < d; ++i) {
        lambda(i, i + 1) = 0.5;
        lambda(i + 1, i) = 0.5;
    }
    lambda(0, d - 1) = -0.5;
    lambda(d - 1, 0) = -0.5;

    NCycleInequality ineq;
    ineq.n = n;
    ineq.coefficients = SymMatrix(std::move(lambda));
    ineq.classical_bound = n - 2.0;
    ineq.quantum_bound = n * std::cos(kPi / n);
    return ineq;
}

SymMatrix analytic_optimizer(int n) {
    require_cycle(n, "analytic_optimizer");
    const std::size_t d = dim_of(n);
    Matrix x(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            x(i, j) = i == j ? 1.0
                             : std::cos((static_cast<double>(i) - static_cast<double>(j)) * kPi / n);
    return SymMatrix(std::move(x));
}

SymMatrix t_matrix(int n) {
    require_cycle(n, "t_matrix");
    const std::size_t d = dim_of(n);
    Matrix t(d, d);
    for (std::size_t i = 0; i + 1 < d; ++i) {
        t(i, i + 1) = -1.0;
        t(i + 1, i) = -1.0;
    }
    t(0, d - 1) = 1.0;
    t(d - 1, 0) = 1.0;
    return SymMatrix(std::move(t));
}

DualCertificate dual_certificate(int n) {
    SymMatrix t = t_matrix(n);
    Matrix w = 0.5 * t.matrix();
    for (std::size_t i = 0; i < w.rows(); ++i) w(i, i) = std::cos(kPi / n);
    return {SymMatrix(std::move(w)), std::move(t)};
}

std::vector<double> t_spectrum_analytic(int n) {
    require_cycle(n, "t_spectrum_analytic");
    std::vector<double> ev;
    ev.reserve(dim_of(n));
    for (int m = 0; m < n; ++m) ev.push_back(-2.0 * std::cos((2.0 * m + 1.0) * kPi / n));
    std::sort(ev.begin(), ev.end());
    return ev;
}

std::size_t nondegeneracy_nullspace(const SymMatrix& w, double rel_threshold) {
    const std::size_t n = w.dim();
    if (n < 2) throw DimensionError("nondegeneracy_nullspace: need dim >= 2");
    // Column (i<j) is vec((e_i e_j^T + e_j e_i^T) W).
    const std::size_t cols = n * (n - 1) / 2;
    Matrix a(n * n, cols);
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++c) {
            for (std::size_t k = 0; k < n; ++k) {
                a(i * n + k, c) += w(j, k);
                a(j * n + k, c) += w(i, k);
            }
        }
    }
    return cols - numerical_rank(a, rel_threshold);
}

std::size_t nondegeneracy_nullspace(int n) { return nondegeneracy_nullspace(dual_certificate(n).w); }

CertificateBundle certificate_bundle(int n) { return certificate_bundle(n, dual_certificate(n).w); }

CertificateBundle certificate_bundle(int n, const SymMatrix& w) {
    const NCycleInequality ineq = build(n);
    if (w.dim() != dim_of(n)) {
        throw DimensionError("certificate_bundle: W has dimension " + std::to_string(w.dim()) +
                             ", expected " + std::to_string(n));
    }
    CertificateBundle b;
    b.n = n;
    b.x_opt = analytic_optimizer(n);
    b.w = w;
    b.t = t_matrix(n);
    b.objective = ineq.evaluate(b.x_opt);
    b.dual_value = trace(w.matrix());
    b.slackness = inner(b.x_opt.matrix(), w.matrix());
    b.x_min_eig = min_eigenvalue(b.x_opt);
    b.w_min_eig = min_eigenvalue(w);
    b.nullspace_dim = nondegeneracy_nullspace(w);

    if (std::abs(b.objective - ineq.quantum_bound) > 1e-10) b.failures.push_back("objective");
    if (b.x_min_eig < -kPsdTolerance) b.failures.push_back("primal_infeasible");
    // W must be a dual slack Diag(y) - Lambda.
    double structure = 0.0;
    for (std::size_t i = 0; i < w.dim(); ++i)
        for (std::size_t j = 0; j < w.dim(); ++j)
            if (i != j) structure = std::max(structure, std::abs(w(i, j) + ineq.coefficients(i, j)));
    if (structure > 1e-12) b.failures.push_back("dual_structure");
    if (b.w_min_eig < -kPsdTolerance) b.failures.push_back("dual_infeasible");
    if (std::abs(b.dual_value - ineq.quantum_bound) > 1e-10) b.failures.push_back("dual_value");
    if (std::abs(b.slackness) > 1e-9) b.failures.push_back("complementary_slackness");
    if (b.nullspace_dim != 0) b.failures.push_back("nondegeneracy");
    return b;
}

std::vector<std::vector<double>> gram_vectors(const SymMatrix& x) {
    const PsdVerdict v = psd_check(x);
    if (!v.psd) {
        std::ostringstream os;
        os << "gram_vectors: matrix is not PSD (min eigenvalue " << v.min_eigenvalue << ")";
        throw std::invalid_argument(os.str());
    }
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (std::abs(x(i, i) - 1.0) > 1e-8) {
            throw std::invalid_argument("gram_vectors: diagonal entry " + std::to_string(i) +
                                        " is not 1");
        }
    }
    const SymMatrix root = principal_sqrt(x);
    std::vector<std::vector<double>> out;
    out.reserve(x.dim());
    for (std::size_t j = 0; j < x.dim(); ++j) out.push_back(root.matrix().column(j));
    return out;
}

QubitRealizationReport qubit_realization_check(int n, std::uint64_t seed, int states) {
    const NCycleInequality ineq = build(n);
    if (states < 1) throw std::invalid_argument("qubit_realization_check: states must be >= 1");
    const SymMatrix x_opt = analytic_optimizer(n);
    const std::size_t d = dim_of(n);

    std::vector<qsim::BlochObservable> obs;
    for (std::size_t i = 0; i < d; ++i) {
        const double angle = static_cast<double>(i) * kPi / n;
        obs.emplace_back(qsim::Vec3{std::cos(angle), std::sin(angle), 0.0});
    }

    QubitRealizationReport r;
    r.n = n;
    r.states = states;
    r.expected_value = ineq.quantum_bound;
    Rng rng = make_rng(seed);
    for (int s = 0; s < states; ++s) {
        const qsim::DensityMatrix rho = s == 0   ? qsim::DensityMatrix::maximally_mixed()
                                        : s == 1 ? qsim::DensityMatrix::ket0()
                                                 : qsim::random_density_matrix(rng);
        Matrix y(d, d);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                y(i, j) = qsim::seq_corr_simple(rho, obs[i], obs[j]);
                r.max_entry_deviation = std::max(r.max_entry_deviation, std::abs(y(i, j) - x_opt(i, j)));
            }
        }
        const double value = ineq.evaluate(SymMatrix(std::move(y)));
        r.max_value_deviation = std::max(r.max_value_deviation, std::abs(value - r.expected_value));
    }
    return r;
}

}  // namespace tcert::ncycle
