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

#include <array>
#include <span>
#include <vector>

#include "tcert/matrix.hpp"

namespace tcert::qsim {

using Vec3 = std::array<double, 3>;

/// sigma_0..sigma_3 = I, X, Y, Z.
const CMatrix& pauli(int index);

/// a . sigma
CMatrix pauli_dot(const Vec3& a);

double dot(const Vec3& a, const Vec3& b);

/// Qubit density matrix: Hermitian, unit trace and PSD.
class DensityMatrix {
   public:
    static constexpr double kHermitianTol = 1e-12;
    static constexpr double kTraceTol = 1e-12;
    static constexpr double kPsdTol = 1e-10;

    explicit DensityMatrix(CMatrix m);

    /// |0><0|
    static DensityMatrix ket0();
    /// I / 2
    static DensityMatrix maximally_mixed();
    /// (I + r . sigma) / 2 with |r| <= 1.
    static DensityMatrix from_bloch(const Vec3& r);

    const CMatrix& matrix() const noexcept { return m_; }
    /// Re Tr(rho op)
    double expectation(const CMatrix& op) const;

   private:
    CMatrix m_;
};

/// Two-outcome observable a . sigma with |a| = 1.
class BlochObservable {
   public:
    static constexpr double kNormTol = 1e-12;

    explicit BlochObservable(const Vec3& a);
    /// Rescales a nonzero vector to unit length.
    static BlochObservable normalized(const Vec3& a);
    static BlochObservable axis(int k);  // k in {1, 2, 3}

    const Vec3& bloch() const noexcept { return a_; }
    CMatrix matrix() const { return pauli_dot(a_); }

   private:
    Vec3 a_;
};

/// Qubit channel E(rho) = sum_k K_k rho K_k^dagger, trace preserving.
class KrausChannel {
   public:
    static constexpr double kTraceTol = 1e-10;

    explicit KrausChannel(std::vector<CMatrix> kraus);

    static KrausChannel identity();
    /// E(rho) = I/2 Tr(rho), Kraus operators sigma_i / 2.
    static KrausChannel depolarizing();
    static KrausChannel unitary(const CMatrix& u);
    /// p E_a + (1 - p) E_b
    static KrausChannel mixture(const KrausChannel& a, const KrausChannel& b, double p);

    std::span<const CMatrix> kraus() const noexcept { return kraus_; }

    CMatrix apply(const CMatrix& x) const;
    /// E^dagger(x) = sum_k K_k^dagger x K_k
    CMatrix adjoint_apply(const CMatrix& x) const;

    /// || sum_k K^dagger K - I ||_F
    double trace_preservation_defect() const;

    /// Frobenius norms of the stored Kraus operators.
    std::vector<double> kraus_norms() const;
    /// Rank of the Choi matrix: the minimal number of Kraus operators.
    std::size_t kraus_rank(double tol = 1e-10) const;

   private:
    std::vector<CMatrix> kraus_;
};

/// Extremal qubit channel family, v in [0, pi], u in [0, 2 pi]. Action:
///   E(s0) = s0 + sin u sin v s3,  E(s1) = cos u s1,
///   E(s2) = cos v s2,             E(s3) = cos u cos v s3.
struct PauliChannelParams {
    double u = 0.0;
    double v = 0.0;
};

KrausChannel pauli_channel(const PauliChannelParams& params);

/// 1/2 Tr(rho {A, B})
double seq_corr_simple(const DensityMatrix& rho, const BlochObservable& a, const BlochObservable& b);

/// 1/2 Tr[(A rho + rho A) E^dagger(B)]: A measured, then the channel, then B.
double seq_corr_channel(const DensityMatrix& rho, const BlochObservable& a, const BlochObservable& b,
                        const KrausChannel& ch);
double seq_corr_channel(const DensityMatrix& rho, const CMatrix& a, const CMatrix& b,
                        const KrausChannel& ch);

struct LemmaCheck {
    double lhs = 0.0;
    double rhs = 0.0;
};

/// lhs: <s_k s_l>_seq read off the two-event PDM.
/// rhs: 1/2 [<s_k>_rho Tr(s_l E(s_0)) + Tr(s_l E(s_k))].
LemmaCheck pauli_corr_lemma_check(const DensityMatrix& rho, const KrausChannel& ch, int k, int l);

enum class PauliAxis { X, Y, Z };

struct IsometryCheck {
    double before = 0.0;
    double after = 0.0;
};

/// Correlation before and after the local isometry in time:
/// (rho, A, B, {K}) -> (V rho V^dagger, V A V^dagger, U B U^dagger, {U K V^dagger}).
IsometryCheck isometry_in_time_check(const DensityMatrix& rho, const KrausChannel& ch,
                                     const BlochObservable& a, const BlochObservable& b,
                                     PauliAxis v, const CMatrix& u);

}  // namespace tcert::qsim
