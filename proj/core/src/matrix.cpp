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

#include "tcert/matrix.hpp"

#include <cmath>
#include <sstream>

namespace tcert {

CMatrix to_complex(const Matrix& m) {
    CMatrix c(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = m(i, j);
    return c;
}

SymMatrix::SymMatrix(Matrix m) {
    if (!m.is_square() || m.rows() == 0) {
        throw DimensionError("SymMatrix requires a non-empty square matrix");
    }
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double a = m(i, j);
            const double b = m(j, i);
            max_asymmetry_ = std::max(max_asymmetry_, std::abs(a - b));
            const double avg = 0.5 * (a + b);
            m(i, j) = avg;
            m(j, i) = avg;
        }
    }
    m_ = std::move(m);
}

HermMatrix::HermMatrix(CMatrix m) {
    if (!m.is_square() || m.rows() == 0) {
        throw DimensionError("HermMatrix requires a non-empty square matrix");
    }
    const double defect = max_hermitian_defect(m);
    if (defect > kTolerance) {
        std::ostringstream os;
        os << "matrix is not Hermitian: max |m_ij - conj(m_ji)| = " << defect;
        throw std::invalid_argument(os.str());
    }
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m(i, j) = avg;
            m(j, i) = std::conj(avg);
        }
    }
    m_ = std::move(m);
}

}  // namespace tcert
