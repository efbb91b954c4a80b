// Copyright 2026 The nucsim Authors
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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "nucsim/circuit.h"
#include "nucsim/pauli.h"

namespace nucsim {

struct FilterStep {
    double t = 0;
    double delta = 0;

    bool operator==(const FilterStep &other) const = default;
};

/// Evolution times and phases of successive ancilla-coupled filter steps.
struct FilterSchedule {
    std::vector<FilterStep> steps;

    /// Throws std::invalid_argument unless every t > 0 and finite.
    void validate() const;
    size_t size() const { return steps.size(); }
    bool operator==(const FilterSchedule &other) const = default;
};

/// t_1 = π/(2Δ), t_i = t_{i-1}/2, δ_i = 0.
FilterSchedule default_schedule(double gap, size_t num_steps);

/// ∏ cos(E t_i + δ_i).
double predicted_amplitude(double energy, const FilterSchedule &schedule);

/// ∏ cos²(δ_i).
double phase_penalty(const FilterSchedule &schedule);

/// ∏ cos²((E_target − E) t_n / 2).
double rodeo_probability(double energy, double target, std::span<const double> times);

/// Initial system state of a filter run.
class TrialState {
   public:
    /// Computational basis state |index⟩ of the system qubits.
    static TrialState basis(uint64_t index);
    /// Occupation string, character k giving qubit k ("1100" occupies
    /// qubits 0 and 1).
    static TrialState from_bitstring(std::string_view bits);
    /// Explicit amplitudes; throws std::invalid_argument unless normalized
    /// within 1e-9.
    static TrialState amplitudes(std::vector<cplx> amplitudes);

    bool is_basis() const { return basis_.has_value(); }
    uint64_t basis_index() const { return basis_.value(); }
    const std::vector<cplx> &explicit_amplitudes() const { return amplitudes_; }

    /// System-qubit amplitudes on `num_qubits` qubits.
    std::vector<cplx> system_vector(uint32_t num_qubits) const;
    /// Amplitudes on the system plus the ancilla (qubit `num_qubits`) in |0⟩.
    std::vector<cplx> with_ancilla(uint32_t num_qubits) const;

   private:
    std::optional<uint64_t> basis_;
    std::vector<cplx> amplitudes_;
};

/// Circuit implementing the filter on n = h.num_qubits() system qubits plus
/// one ancilla, qubit n. Registers: qreg q[n+1], creg c[steps], creg r[n+1].
///
/// Basis trials are prepared with X gates; explicit trials emit no
/// preparation and must be supplied as the engine's initial state. Each
/// step applies RY(2δ) to the ancilla, then `trotter_steps` first-order
/// slices of exp[−i(h_j t/r) P_j⊗Y_a] over the terms in sorted order, then
/// measures the ancilla into c[i], resets it, and fences both with barriers.
/// Every qubit is measured into r at the end.
Circuit build_filter_circuit(const PauliHamiltonian &h, const FilterSchedule &schedule, size_t trotter_steps,
                             const TrialState &trial);

struct FilterPrediction {
    double success = 0;
    double energy = 0;
};

/// Trotter-free success probability and filtered energy from the exact
/// eigendecomposition of h. Throws std::runtime_error when the filter
/// annihilates the trial state (success ≤ 1e-28).
FilterPrediction predict_success(const PauliHamiltonian &h, const TrialState &trial, const FilterSchedule &schedule);

}  // namespace nucsim
