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

#include "tcert/pdm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tcert/linalg.hpp"

namespace tcert::qsim {
namespace {

std::size_t pow2(int k) { return std::size_t{1} << k; }

// sigma acting on `qubit` of a register of `qubits` qubits (qubit 0 is the
// most significant tensor factor).
CMatrix embed(const CMatrix& op, int qubit, int qubits) {
    CMatrix out = CMatrix::identity(1);
    for (int q = 0; q < qubits; ++q) out = kron(out, q == qubit ? op : CMatrix::identity(2));
    return out;
}

void require_two_event(const Pdm& r) {
    if (r.events() != 2) {
        throw DimensionError("pdm_correlation: expected a two-event PDM, got " +
                             std::to_string(r.events()) + " events");
    }
}

}  // namespace

Pdm::Pdm(int events, HermMatrix matrix) : events_(events), matrix_(std::move(matrix)) {
    if (events < 1 || events > 16) throw std::invalid_argument("Pdm: bad event count");
    if (matrix_.dim() != pow2(events)) {
        throw DimensionError("Pdm: dimension " + std::to_string(matrix_.dim()) + " != 2^" +
                             std::to_string(events));
    }
    const double tr = std::real(trace(matrix_.matrix()));
    if (std::abs(tr - 1.0) > kTraceTol) {
        std::ostringstream os;
        os << "Pdm: trace " << tr << " != 1";
        throw std::invalid_argument(os.str());
    }
}

Pdm Pdm::from_state(const HermMatrix& state) {
    const std::size_t d = state.dim();
    if (d < 2 || (d & (d - 1)) != 0) throw DimensionError("Pdm::from_state: dimension is not 2^n");
    int n = 0;
    while (pow2(n) < d) ++n;
    return Pdm(n, state);
}

Pdm pdm_two_events(const DensityMatrix& rho, const KrausChannel& ch) {
    // Plain anticommutator with (1/2) sum_{i=0..3} s_i (x) s_i, which is SWAP.
    const CMatrix half_id = CMatrix{{0.5, 0.0}, {0.0, 0.5}};
    const CMatrix left = kron(rho.matrix(), half_id);
    CMatrix swap(4, 4);
    for (int i = 0; i < 4; ++i) swap += kron(pauli(i), pauli(i));
    swap *= complex{0.5};
    const CMatrix anti = left * swap + swap * left;

    // (id (x) E) applied blockwise: block (a, b) is a 2x2 operator on B.
    CMatrix out(4, 4);
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
            CMatrix block(2, 2);
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) block(i, j) = anti(2 * a + i, 2 * b + j);
            const CMatrix mapped = ch.apply(block);
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) out(2 * a + i, 2 * b + j) = mapped(i, j);
        }
    }
    return Pdm(2, HermMatrix(std::move(out)));
}

Pdm pdm_general(const PdmScenario& scenario) {
    const auto& events = scenario.events;
    const int n = static_cast<int>(events.size());
    if (n == 0 || n > kMaxPdmEvents) {
        throw std::invalid_argument("pdm_general: need 1.." + std::to_string(kMaxPdmEvents) +
                                    " events, got " + std::to_string(n));
    }
    const std::size_t dim = scenario.state.rows();
    if (dim < 2 || scenario.state.cols() != dim || (dim & (dim - 1)) != 0) {
        throw DimensionError("pdm_general: state must be 2^q x 2^q");
    }
    int qubits = 0;
    while (pow2(qubits) < dim) ++qubits;
    const CMatrix state = HermMatrix(scenario.state).matrix();

    std::set<std::pair<int, int>> seen;
    for (const auto& e : events) {
        if (e.qubit < 0 || e.qubit >= qubits) {
            throw std::out_of_range("pdm_general: qubit " + std::to_string(e.qubit) +
                                    " outside a " + std::to_string(qubits) + "-qubit register");
        }
        if (!seen.insert({e.qubit, e.time_slot}).second) {
            throw std::invalid_argument("pdm_general: duplicate event on qubit " +
                                        std::to_string(e.qubit) + " at slot " +
                                        std::to_string(e.time_slot));
        }
    }

    std::vector<std::size_t> order(events.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return events[a].time_slot < events[b].time_slot;
    });

    // Embedded Paulis per event.
    std::vector<std::array<CMatrix, 4>> ops(events.size());
    for (std::size_t e = 0; e < events.size(); ++e)
        for (int k = 1; k < 4; ++k) ops[e][k] = embed(pauli(k), events[e].qubit, qubits);

    const std::size_t out_dim = pow2(n);
    CMatrix r(out_dim, out_dim);
    std::vector<int> idx(events.size(), 0);
    const std::size_t total = pow2(2 * n);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (std::size_t e = 0; e < events.size(); ++e) {
            idx[e] = static_cast<int>(c % 4);
            c /= 4;
        }
        CMatrix rec = state;
        for (std::size_t e : order) {
            if (idx[e] == 0) continue;
            const CMatrix& s = ops[e][idx[e]];
            rec = complex{0.5} * (s * rec + rec * s);
        }
        const double corr = std::real(trace(rec));
        if (corr == 0.0) continue;
        CMatrix term = CMatrix::identity(1);
        for (std::size_t e = 0; e < events.size(); ++e) term = kron(term, pauli(idx[e]));
        r += complex{corr} * term;
    }
    r *= complex{1.0 / static_cast<double>(out_dim)};
    return Pdm(n, HermMatrix(std::move(r)));
}

double causality_monotone(const Pdm& r) { return trace_norm(r.matrix()) - 1.0; }

double pdm_correlation(const Pdm& r, const CMatrix& a, const CMatrix& b) {
    require_two_event(r);
    if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2) {
        throw DimensionError("pdm_correlation: observables must be 2x2");
    }
    return std::real(trace(kron(a, b) * r.matrix().matrix()));
}

double pdm_correlation(const Pdm& r, const BlochObservable& a, const BlochObservable& b) {
    return pdm_correlation(r, a.matrix(), b.matrix());
}

Pdm pseudo_bell(int index) {
    static constexpr int kSigns[4][3] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    if (index < 1 || index > 4) throw std::out_of_range("pseudo_bell: index must be in 1..4");
    const auto& s = kSigns[index - 1];
    CMatrix m = kron(pauli(0), pauli(0));
    for (int k = 1; k < 4; ++k) m += complex{static_cast<double>(s[k - 1])} * kron(pauli(k), pauli(k));
    m *= complex{0.25};
    return Pdm(2, HermMatrix(std::move(m)));
}

}  // namespace tcert::qsim
