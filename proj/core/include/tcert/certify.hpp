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
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tcert/ncycle.hpp"
#include "tcert/qsim.hpp"

namespace tcert::certify {

using qsim::Vec3;
using Mat3 = std::array<std::array<double, 3>, 3>;

inline constexpr double kS3Bound = 1.5;
inline constexpr double kValueTol = 1e-6;

struct S3Result {
    double value = 0.0;
    Vec3 a1{}, a2{}, a3{};
};

/// C_kl = <s_k s_l>_seq: s_k measured first, then the channel, then s_l.
Mat3 s3_correlation_matrix(const qsim::DensityMatrix& rho, const qsim::KrausChannel& ch);
/// Same, with rho = |0><0|.
Mat3 s3_correlation_matrix(const qsim::KrausChannel& ch);

/// a1.C.a2 + a2.C.a3 - a3.C.a1
double s3_value(const Mat3& c, const Vec3& a1, const Vec3& a2, const Vec3& a3);

struct AscentOptions {
    int restarts = 24;
    int max_sweeps = 2000;
    std::uint64_t seed = 0x53;
};

/// Maximizes s3_value over unit vectors by coordinate ascent with random restarts.
S3Result s3_inner_max(const Mat3& c, const AscentOptions& opts = {});
/// Weights (cos u, cos v, cos(u - v)) on the diagonal.
S3Result s3_inner_max(double u, double v, const AscentOptions& opts = {});

struct SweepPoint {
    double u = 0.0;
    double v = 0.0;
    S3Result best;
};

struct SweepResult {
    int grid_u = 0;
    int grid_v = 0;
    std::vector<SweepPoint> points;  ///< row-major in (u, v)
    double global_max = 0.0;
    /// Indices of points with s3 >= 3/2 - 1e-6.
    std::vector<std::size_t> flagged;
    /// Corners {0, pi, 2pi} x {0, pi} with a flagged point within one cell diagonal.
    std::vector<std::array<double, 2>> maximizing_corners;
    /// Flagged points that are not near any corner.
    std::vector<std::size_t> interior_maximizers;
    std::vector<std::string> failures;

    bool ok() const noexcept { return failures.empty(); }
};

/// Grid spanning [0, 2pi] x [0, pi] with rho = |0><0| and the two-Kraus family.
SweepResult channel_sweep(int grid_u, int grid_v, std::uint64_t seed = 0x53);

struct CornerCheck {
    double u = 0.0;
    double v = 0.0;
    std::vector<double> kraus_norms;
    std::size_t kraus_rank = 0;
    double s3 = 0.0;
    bool rank_one = false;  ///< smallest Kraus norm < 1e-12
};

std::vector<CornerCheck> corner_checks(std::uint64_t seed = 0x53);

struct MixtureCheck {
    std::array<double, 2> corner_a{};
    std::array<double, 2> corner_b{};
    double p = 0.5;
    double s3 = 0.0;
};

/// s3 maximum of p E_a + (1 - p) E_b for corner channels a, b.
MixtureCheck corner_mixture(std::array<double, 2> a, std::array<double, 2> b, double p = 0.5,
                            std::uint64_t seed = 0x53);
/// Every unordered pair of distinct corners, mixed 50/50.
std::vector<MixtureCheck> corner_mixtures(std::uint64_t seed = 0x53);

/// max |Tr[(A (x) B) R] - <AB>_seq| over seeded random scenarios.
double lemma1_residual(std::uint64_t seed, int scenarios = 200);
/// max |before - after| of the time isometry over seeded random scenarios.
double isometry_residual(std::uint64_t seed, int scenarios = 100);

struct ReportOptions {
    int n = 3;
    int grid_u = 33;
    int grid_v = 17;
    std::uint64_t seed = 7;
    /// Replaces the analytic dual certificate (fault injection).
    std::optional<SymMatrix> w_override;
};

struct CertificationReport {
    ncycle::CertificateBundle ncycle_bundle;
    SweepResult sweep;
    std::vector<CornerCheck> corners;
    std::vector<MixtureCheck> mixtures;
    double lemma1_residual = 0.0;
    double isometry_residual = 0.0;
    /// "component.check" names; empty iff verdict.
    std::vector<std::string> failures;
    bool verdict = false;
};

/// Raised by full_report when a stage throws; names the stage.
class ComponentError : public std::runtime_error {
   public:
    ComponentError(std::string component, const std::string& what)
        : std::runtime_error(component + ": " + what), component_(std::move(component)) {}
    const std::string& component() const noexcept { return component_; }

   private:
    std::string component_;
};

CertificationReport full_report(const ReportOptions& opts);

}  // namespace tcert::certify
