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

#include <vector>

#include "tcert/matrix.hpp"
#include "tcert/qsim.hpp"

namespace tcert::qsim {

/// Pseudo-density matrix over `events` measurement events (dimension 2^events).
/// Hermitian with unit trace; not necessarily PSD.
class Pdm {
   public:
    static constexpr double kTraceTol = 1e-10;

    Pdm(int events, HermMatrix matrix);
    /// Wraps an ordinary multi-qubit density matrix.
    static Pdm from_state(const HermMatrix& state);

    int events() const noexcept { return events_; }
    const HermMatrix& matrix() const noexcept { return matrix_; }

   private:
    int events_;
    HermMatrix matrix_;
};

/// R_AB = (id (x) E) { rho (x) I/2, 1/2 sum_i s_i (x) s_i }
Pdm pdm_two_events(const DensityMatrix& rho, const KrausChannel& ch);

struct MeasurementEvent {
    int qubit = 0;
    int time_slot = 0;
};

/// A register of qubits in `state` (dimension 2^qubits) and a list of Pauli
/// measurement events. Tensor factors of the PDM follow the order of `events`;
/// the simulation runs in time-slot order with trivial evolution between slots.
struct PdmScenario {
    CMatrix state;
    std::vector<MeasurementEvent> events;
};

inline constexpr int kMaxPdmEvents = 4;

/// R = 2^-n sum <{s_i1 .. s_in}> s_i1 (x) .. (x) s_in, where each correlation is
/// obtained by sequential Lueders measurements: every nontrivial event maps the
/// unnormalized record rho -> 1/2 {s, rho}, and the correlation is its trace.
Pdm pdm_general(const PdmScenario& scenario);

/// ||R||_tr - 1
double causality_monotone(const Pdm& r);

/// Tr[(A (x) B) R] for a two-event PDM.
double pdm_correlation(const Pdm& r, const BlochObservable& a, const BlochObservable& b);
double pdm_correlation(const Pdm& r, const CMatrix& a, const CMatrix& b);

/// 1/4 (I +- XX +- YY +- ZZ) with sign patterns (+++), (+--), (-+-), (--+).
Pdm pseudo_bell(int index);

}  // namespace tcert::qsim
