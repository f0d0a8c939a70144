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

#include "tcert/qsim.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "tcert/linalg.hpp"
#include "tcert/pdm.hpp"

namespace tcert::qsim {
namespace {

using namespace std::complex_literals;

const std::array<CMatrix, 4>& pauli_table() {
    static const std::array<CMatrix, 4> table = {
        CMatrix{{1.0, 0.0}, {0.0, 1.0}},
        CMatrix{{0.0, 1.0}, {1.0, 0.0}},
        CMatrix{{0.0, -1i}, {1i, 0.0}},
        CMatrix{{1.0, 0.0}, {0.0, -1.0}},
    };
    return table;
}

void require_qubit_operator(const CMatrix& m, const char* what) {
    if (m.rows() != 2 || m.cols() != 2) {
        throw DimensionError(std::string(what) + ": expected a 2x2 operator");
    }
}

double unitarity_defect(const CMatrix& u) {
    return frobenius_norm(u.adjoint() * u - CMatrix::identity(u.rows()));
}

}  // namespace

const CMatrix& pauli(int index) {
    if (index < 0 || index > 3) {
        throw std::out_of_range("pauli index must be in 0..3, got " + std::to_string(index));
    }
    return pauli_table()[static_cast<std::size_t>(index)];
}

CMatrix pauli_dot(const Vec3& a) {
    return a[0] * pauli(1) + a[1] * pauli(2) + a[2] * pauli(3);
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

DensityMatrix::DensityMatrix(CMatrix m) {
    require_qubit_operator(m, "DensityMatrix");
    if (max_hermitian_defect(m) > kHermitianTol) {
        throw std::invalid_argument("DensityMatrix: not Hermitian");
    }
    const complex tr = trace(m);
    if (std::abs(tr - 1.0) > kTraceTol) {
        std::ostringstream os;
        os << "DensityMatrix: trace " << tr << " != 1";
        throw std::invalid_argument(os.str());
    }
    HermMatrix h(std::move(m));
    const double lo = min_eigenvalue(h);
    if (lo < -kPsdTol) {
        std::ostringstream os;
        os << "DensityMatrix: not PSD (min eigenvalue " << lo << ")";
        throw std::invalid_argument(os.str());
    }
    m_ = h.matrix();
}

DensityMatrix DensityMatrix::ket0() { return DensityMatrix(CMatrix{{1.0, 0.0}, {0.0, 0.0}}); }

DensityMatrix DensityMatrix::maximally_mixed() {
    return DensityMatrix(CMatrix{{0.5, 0.0}, {0.0, 0.5}});
}

DensityMatrix DensityMatrix::from_bloch(const Vec3& r) {
    return DensityMatrix(0.5 * (CMatrix::identity(2) + pauli_dot(r)));
}

double DensityMatrix::expectation(const CMatrix& op) const { return std::real(trace(m_ * op)); }

BlochObservable::BlochObservable(const Vec3& a) : a_(a) {
    const double norm = std::sqrt(dot(a, a));
    if (std::abs(norm - 1.0) > kNormTol) {
        std::ostringstream os;
        os << "BlochObservable: |a| = " << norm << " is not 1";
        throw std::invalid_argument(os.str());
    }
}

BlochObservable BlochObservable::normalized(const Vec3& a) {
    const double norm = std::sqrt(dot(a, a));
    if (norm == 0.0) throw std::invalid_argument("BlochObservable: zero vector");
    return BlochObservable(Vec3{a[0] / norm, a[1] / norm, a[2] / norm});
}

BlochObservable BlochObservable::axis(int k) {
    if (k < 1 || k > 3) throw std::out_of_range("BlochObservable::axis expects 1, 2 or 3");
    Vec3 a{0.0, 0.0, 0.0};
    a[static_cast<std::size_t>(k - 1)] = 1.0;
    return BlochObservable(a);
}

KrausChannel::KrausChannel(std::vector<CMatrix> kraus) : kraus_(std::move(kraus)) {
    if (kraus_.empty()) throw std::invalid_argument("KrausChannel: empty Kraus list");
    for (const auto& k : kraus_) require_qubit_operator(k, "KrausChannel");
    const double defect = trace_preservation_defect();
    if (defect > kTraceTol) {
        std::ostringstream os;
        os << "KrausChannel: not trace preserving (||sum K^dagger K - I||_F = " << defect << ")";
        throw std::invalid_argument(os.str());
    }
}

KrausChannel KrausChannel::identity() { return KrausChannel({CMatrix::identity(2)}); }

KrausChannel KrausChannel::depolarizing() {
    std::vector<CMatrix> ops;
    for (int i = 0; i < 4; ++i) ops.push_back(complex{0.5} * pauli(i));
    return KrausChannel(std::move(ops));
}

KrausChannel KrausChannel::unitary(const CMatrix& u) { return KrausChannel({u}); }

KrausChannel KrausChannel::mixture(const KrausChannel& a, const KrausChannel& b, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("KrausChannel::mixture: p not in [0,1]");
    std::vector<CMatrix> ops;
    for (const auto& k : a.kraus_) ops.push_back(complex{std::sqrt(p)} * k);
    for (const auto& k : b.kraus_) ops.push_back(complex{std::sqrt(1.0 - p)} * k);
    return KrausChannel(std::move(ops));
}

CMatrix KrausChannel::apply(const CMatrix& x) const {
    CMatrix out(x.rows(), x.cols());
    for (const auto& k : kraus_) out += k * x * k.adjoint();
    return out;
}

CMatrix KrausChannel::adjoint_apply(const CMatrix& x) const {
    CMatrix out(x.rows(), x.cols());
    for (const auto& k : kraus_) out += k.adjoint() * x * k;
    return out;
}

double KrausChannel::trace_preservation_defect() const {
    CMatrix s(2, 2);
    for (const auto& k : kraus_) s += k.adjoint() * k;
    return frobenius_norm(s - CMatrix::identity(2));
}

std::vector<double> KrausChannel::kraus_norms() const {
    std::vector<double> n;
    n.reserve(kraus_.size());
    for (const auto& k : kraus_) n.push_back(frobenius_norm(k));
    return n;
}

std::size_t KrausChannel::kraus_rank(double tol) const {
    // Choi matrix sum_k vec(K) vec(K)^dagger.
    CMatrix choi(4, 4);
    for (const auto& k : kraus_) {
        const auto v = k.values();
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) choi(i, j) += v[i] * std::conj(v[j]);
    }
    const auto ev = eig_herm(HermMatrix(std::move(choi))).eigenvalues;
    const double top = ev.back();
    std::size_t rank = 0;
    for (double e : ev)
        if (e > tol * std::max(top, 1.0)) ++rank;
    return rank;
}

KrausChannel pauli_channel(const PauliChannelParams& params) {
    constexpr double slack = 1e-12;
    constexpr double pi = std::numbers::pi;
    if (params.u < -slack || params.u > 2.0 * pi + slack || params.v < -slack ||
        params.v > pi + slack) {
        std::ostringstream os;
        os << "pauli_channel: need u in [0, 2pi] and v in [0, pi], got u=" << params.u
           << " v=" << params.v;
        throw std::invalid_argument(os.str());
    }
    const double cu = std::cos(params.u / 2.0), su = std::sin(params.u / 2.0);
    const double cv = std::cos(params.v / 2.0), sv = std::sin(params.v / 2.0);
    // K_- carries +i on sigma_2: with -i the pair is not trace preserving.
    CMatrix k_plus = complex{cv * cu} * pauli(0) + complex{sv * su} * pauli(3);
    CMatrix k_minus = complex{sv * cu} * pauli(1) + complex{0.0, cv * su} * pauli(2);
    return KrausChannel({std::move(k_plus), std::move(k_minus)});
}

double seq_corr_simple(const DensityMatrix& rho, const BlochObservable& a,
                       const BlochObservable& b) {
    const CMatrix am = a.matrix();
    const CMatrix bm = b.matrix();
    return 0.5 * std::real(trace(rho.matrix() * (am * bm + bm * am)));
}

double seq_corr_channel(const DensityMatrix& rho, const CMatrix& a, const CMatrix& b,
                        const KrausChannel& ch) {
    require_qubit_operator(a, "seq_corr_channel");
    require_qubit_operator(b, "seq_corr_channel");
    const CMatrix& r = rho.matrix();
    return 0.5 * std::real(trace((a * r + r * a) * ch.adjoint_apply(b)));
}

double seq_corr_channel(const DensityMatrix& rho, const BlochObservable& a, const BlochObservable& b,
                        const KrausChannel& ch) {
    return seq_corr_channel(rho, a.matrix(), b.matrix(), ch);
}

LemmaCheck pauli_corr_lemma_check(const DensityMatrix& rho, const KrausChannel& ch, int k, int l) {
    if (k < 1 || k > 3 || l < 1 || l > 3) {
        throw std::out_of_range("pauli_corr_lemma_check: k and l must be in 1..3");
    }
    const Pdm r = pdm_two_events(rho, ch);
    LemmaCheck out;
    out.lhs = pdm_correlation(r, pauli(k), pauli(l));
    const CMatrix& sl = pauli(l);
    out.rhs = 0.5 * (rho.expectation(pauli(k)) * std::real(trace(sl * ch.apply(pauli(0)))) +
                     std::real(trace(sl * ch.apply(pauli(k)))));
    return out;
}

IsometryCheck isometry_in_time_check(const DensityMatrix& rho, const KrausChannel& ch,
                                     const BlochObservable& a, const BlochObservable& b,
                                     PauliAxis v_axis, const CMatrix& u) {
    require_qubit_operator(u, "isometry_in_time_check");
    const double defect = unitarity_defect(u);
    if (defect > 1e-12) {
        std::ostringstream os;
        os << "isometry_in_time_check: U is not unitary (||U^dagger U - I||_F = " << defect << ")";
        throw std::invalid_argument(os.str());
    }
    const CMatrix& v = pauli(static_cast<int>(v_axis) + 1);
    const CMatrix vd = v.adjoint();
    const CMatrix ud = u.adjoint();

    IsometryCheck out;
    out.before = pdm_correlation(pdm_two_events(rho, ch), a.matrix(), b.matrix());

    std::vector<CMatrix> moved;
    for (const auto& k : ch.kraus()) moved.push_back(u * k * vd);
    const KrausChannel ch_t(std::move(moved));
    const DensityMatrix rho_t(v * rho.matrix() * vd);
    out.after = pdm_correlation(pdm_two_events(rho_t, ch_t), v * a.matrix() * vd,
                                u * b.matrix() * ud);
    return out;
}

}  // namespace tcert::qsim
