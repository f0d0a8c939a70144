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

#include "tcert/random.hpp"

#include <cmath>

namespace tcert {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                      0x7c3aU};
    return Rng(seq);
}

std::vector<double> random_unit_vector(Rng& rng, std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("random_unit_vector: dim must be positive");
    std::normal_distribution<double> g;
    std::vector<double> v(dim);
    double norm = 0.0;
    do {
        norm = 0.0;
        for (auto& x : v) {
            x = g(rng);
            norm += x * x;
        }
    } while (norm < 1e-300);
    norm = std::sqrt(norm);
    for (auto& x : v) x /= norm;
    return v;
}

namespace qsim {
namespace {

CMatrix ginibre(Rng& rng, std::size_t rows, std::size_t cols) {
    std::normal_distribution<double> g;
    CMatrix m(rows, cols);
    for (auto& v : m.values()) v = complex{g(rng), g(rng)};
    return m;
}

// Gram-Schmidt on the columns, with the phase convention that makes the
// result Haar distributed.
CMatrix orthonormal_columns(CMatrix a) {
    const std::size_t rows = a.rows();
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            complex p{};
            for (std::size_t i = 0; i < rows; ++i) p += std::conj(a(i, k)) * a(i, j);
            for (std::size_t i = 0; i < rows; ++i) a(i, j) -= p * a(i, k);
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < rows; ++i) norm += std::norm(a(i, j));
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < rows; ++i) a(i, j) /= norm;
    }
    return a;
}

}  // namespace

DensityMatrix random_density_matrix(Rng& rng) {
    const CMatrix g = ginibre(rng, 2, 2);
    CMatrix rho = g * g.adjoint();
    rho *= complex{1.0 / std::real(trace(rho))};
    rho = HermMatrix(std::move(rho)).matrix();
    return DensityMatrix(std::move(rho));
}

BlochObservable random_observable(Rng& rng) {
    const auto v = random_unit_vector(rng, 3);
    return BlochObservable::normalized(Vec3{v[0], v[1], v[2]});
}

CMatrix haar_unitary(Rng& rng) { return orthonormal_columns(ginibre(rng, 2, 2)); }

KrausChannel random_channel(Rng& rng) {
    const CMatrix w = orthonormal_columns(ginibre(rng, 4, 2));
    CMatrix k1(2, 2), k2(2, 2);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            k1(i, j) = w(i, j);
            k2(i, j) = w(i + 2, j);
        }
    }
    return KrausChannel({std::move(k1), std::move(k2)});
}

}  // namespace qsim
}  // namespace tcert
