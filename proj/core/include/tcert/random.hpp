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

#include <cstdint>
#include <random>

#include "tcert/matrix.hpp"
#include "tcert/qsim.hpp"

namespace tcert {

using Rng = std::mt19937_64;

/// Independent deterministic stream for (seed, stream), e.g. (seed, trial index).
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// Point uniform on the unit sphere in R^dim.
std::vector<double> random_unit_vector(Rng& rng, std::size_t dim);

namespace qsim {

/// Mixed state from a 2x2 Ginibre matrix, G G^dagger / Tr.
DensityMatrix random_density_matrix(Rng& rng);

BlochObservable random_observable(Rng& rng);

/// Haar-distributed 2x2 unitary.
CMatrix haar_unitary(Rng& rng);

/// Two Kraus operators from the row blocks of a Haar-random 4x2 isometry.
KrausChannel random_channel(Rng& rng);

}  // namespace qsim
}  // namespace tcert
