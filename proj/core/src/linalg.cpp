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

#include "tcert/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace tcert {
namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTol = 1e-14;
// Accept a stalled iteration as converged when it is this close.
constexpr double kStallAcceptTol = 1e-11;

template <typename T>
double off_diagonal_norm(const DenseMatrix<T>& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += abs2(a(i, j));
    return std::sqrt(s);
}

// One Jacobi rotation G = [[c, s*ph], [-s*conj(ph), c]] on the (p, q) plane,
// applied as A <- G^dagger A G and V <- V G. ph is the unit phase of a(p,q),
// so the same code covers the real-symmetric (ph = +-1) and Hermitian cases.
template <typename T>
void rotate(DenseMatrix<T>& a, DenseMatrix<T>& v, std::size_t p, std::size_t q) {
    const T z = a(p, q);
    const double az = std::abs(z);
    if (az == 0.0) return;
    const T ph = z / az;
    const double app = std::real(a(p, p));
    const double aqq = std::real(a(q, q));
    const double theta = (aqq - app) / (2.0 * az);
    double t;
    if (std::abs(theta) > 1e150) {
        t = 0.5 / theta;
    } else {
        t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const T sph = s * ph;
    const T sphc = s * conj_if(ph);

    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        const T akp = a(k, p);
        const T akq = a(k, q);
        a(k, p) = c * akp - sphc * akq;
        a(k, q) = sph * akp + c * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const T apk = a(p, k);
        const T aqk = a(q, k);
        a(p, k) = c * apk - sph * aqk;
        a(q, k) = sphc * apk + c * aqk;
    }
    a(p, q) = T{};
    a(q, p) = T{};
    a(p, p) = app - t * az;
    a(q, q) = aqq + t * az;

    for (std::size_t k = 0; k < n; ++k) {
        const T vkp = v(k, p);
        const T vkq = v(k, q);
        v(k, p) = c * vkp - sphc * vkq;
        v(k, q) = sph * vkp + c * vkq;
    }
}

template <typename T>
EigenDecomposition<T> jacobi(DenseMatrix<T> a) {
    const std::size_t n = a.rows();
    DenseMatrix<T> v = DenseMatrix<T>::identity(n);
    const double scale = frobenius_norm(a);

    int sweeps = 0;
    double off = off_diagonal_norm(a);
    double prev_off = std::numeric_limits<double>::infinity();
    while (off > kOffDiagonalTol * scale) {
        if (sweeps >= kMaxSweeps || off >= prev_off) {
            if (off <= kStallAcceptTol * scale) break;
            std::ostringstream os;
            os << "Jacobi eigensolver did not converge after " << sweeps
               << " sweeps; off-diagonal residual " << off << " (matrix norm " << scale << ")";
            throw EigenSolverError(os.str(), off);
        }
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
        ++sweeps;
        prev_off = off;
        off = off_diagonal_norm(a);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return std::real(a(i, i)) < std::real(a(j, j));
    });

    EigenDecomposition<T> out;
    out.sweeps = sweeps;
    out.eigenvalues.resize(n);
    out.eigenvectors = DenseMatrix<T>(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = std::real(a(order[k], order[k]));
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

}  // namespace

template <typename T>
DenseMatrix<T> EigenDecomposition<T>::reconstruct() const {
    const std::size_t n = eigenvalues.size();
    DenseMatrix<T> m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lam = eigenvalues[k];
        for (std::size_t i = 0; i < n; ++i) {
            const T vik = lam * eigenvectors(i, k);
            for (std::size_t j = 0; j < n; ++j) m(i, j) += vik * conj_if(eigenvectors(j, k));
        }
    }
    return m;
}

template struct EigenDecomposition<double>;
template struct EigenDecomposition<complex>;

EigenDecomposition<double> eig_sym(const SymMatrix& m) { return jacobi(m.matrix()); }

EigenDecomposition<complex> eig_herm(const HermMatrix& m) { return jacobi(m.matrix()); }

double min_eigenvalue(const SymMatrix& m) { return eig_sym(m).eigenvalues.front(); }

double min_eigenvalue(const HermMatrix& m) { return eig_herm(m).eigenvalues.front(); }

PsdVerdict psd_check(const SymMatrix& m, double tol) {
    const double lo = min_eigenvalue(m);
    return {lo >= -tol, lo, tol};
}

PsdVerdict psd_check(const HermMatrix& m, double tol) {
    const double lo = min_eigenvalue(m);
    return {lo >= -tol, lo, tol};
}

double trace_norm(const HermMatrix& m) {
    double s = 0.0;
    for (double lam : eig_herm(m).eigenvalues) s += std::abs(lam);
    return s;
}

double frobenius_distance(const SymMatrix& a, const SymMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("frobenius_distance: dimensions " + std::to_string(a.dim()) + " and " +
                             std::to_string(b.dim()));
    }
    return frobenius_norm(a.matrix() - b.matrix());
}

SymMatrix principal_sqrt(const SymMatrix& m, double tol) {
    const auto ed = eig_sym(m);
    if (ed.eigenvalues.front() < -tol) {
        std::ostringstream os;
        os << "principal_sqrt: matrix is not PSD (min eigenvalue " << ed.eigenvalues.front() << ")";
        throw std::domain_error(os.str());
    }
    const std::size_t n = m.dim();
    Matrix r(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double root = std::sqrt(std::max(ed.eigenvalues[k], 0.0));
        if (root == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                r(i, j) += root * ed.eigenvectors(i, k) * ed.eigenvectors(j, k);
    }
    return SymMatrix(std::move(r));
}

std::vector<double> singular_values(const Matrix& input) {
    Matrix u = input.rows() >= input.cols() ? input : input.transpose();
    const std::size_t m = u.rows();
    const std::size_t n = u.cols();
    constexpr double eps = 1e-15;

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double alpha = 0.0, beta = 0.0, gamma = 0.0;
                for (std::size_t i = 0; i < m; ++i) {
                    alpha += u(i, p) * u(i, p);
                    beta += u(i, q) * u(i, q);
                    gamma += u(i, p) * u(i, q);
                }
                if (gamma == 0.0 || std::abs(gamma) <= eps * std::sqrt(alpha * beta)) continue;
                rotated = true;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t =
                    (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t i = 0; i < m; ++i) {
                    const double up = u(i, p);
                    const double uq = u(i, q);
                    u(i, p) = c * up - s * uq;
                    u(i, q) = s * up + c * uq;
                }
            }
        }
        if (!rotated) break;
    }

    std::vector<double> sv(n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += u(i, j) * u(i, j);
        sv[j] = std::sqrt(s);
    }
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

std::size_t numerical_rank(const Matrix& a, double rel_threshold) {
    const auto sv = singular_values(a);
    if (sv.empty() || sv.front() == 0.0) return 0;
    const double cut = rel_threshold * sv.front();
    return static_cast<std::size_t>(
        std::count_if(sv.begin(), sv.end(), [cut](double s) { return s > cut; }));
}

std::optional<Matrix> cholesky(const SymMatrix& m) {
    const std::size_t n = m.dim();
    Matrix l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = m(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
        if (!(d > 0.0)) return std::nullopt;
        const double ljj = std::sqrt(d);
        l(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = m(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            l(i, j) = s / ljj;
        }
    }
    return l;
}

std::vector<double> cholesky_solve(const Matrix& l, std::vector<double> b) {
    const std::size_t n = l.rows();
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[i];
        for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * b[k];
        b[i] = s / l(i, i);
    }
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= l(k, i) * b[k];
        b[i] = s / l(i, i);
    }
    return b;
}

SymMatrix spd_inverse(const Matrix& l) {
    const std::size_t n = l.rows();
    Matrix inv(n, n);
    std::vector<double> e(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::fill(e.begin(), e.end(), 0.0);
        e[j] = 1.0;
        const auto col = cholesky_solve(l, e);
        for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
    }
    return SymMatrix(std::move(inv));
}

}  // namespace tcert
