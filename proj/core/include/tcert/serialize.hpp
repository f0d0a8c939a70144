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

#include <string>

#include <nlohmann/json.hpp>

#include "tcert/certify.hpp"
#include "tcert/ncycle.hpp"
#include "tcert/pdm.hpp"
#include "tcert/sdp.hpp"

namespace tcert::io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json to_json(const Matrix& m);
json to_json(const SymMatrix& m);
/// Complex entries as [re, im].
json to_json(const CMatrix& m);
json to_json(const sdp::SdpSolution& s);
json to_json(const sdp::CertificateVerdict& v);
json to_json(const ncycle::CertificateBundle& b);
json to_json(const ncycle::RobustnessCurve& c);
json to_json(const ncycle::QubitRealizationReport& r);
json to_json(const qsim::Pdm& r);
json to_json(const qsim::KrausChannel& ch);
json to_json(const certify::SweepResult& s);
json to_json(const certify::CertificationReport& r);

/// {"dim": N, "lambda": [[...]]}
json problem_to_json(const sdp::SdpProblem& p);
sdp::SdpProblem problem_from_json(const json& j);

SymMatrix sym_from_json(const json& j);
CMatrix cmatrix_from_json(const json& j);

/// Columns u, v, s3_max, a1x..a3z, one row per grid point.
std::string sweep_to_csv(const certify::SweepResult& s);

/// Deterministic text: keys sorted, doubles with 17 significant digits,
/// non-finite values as null. indent < 0 gives a single line.
std::string dump(const json& j, int indent = 2);

}  // namespace tcert::io
