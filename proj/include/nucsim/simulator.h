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
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nucsim/circuit.h"
#include "nucsim/fusion.h"
#include "nucsim/pauli.h"
#include "nucsim/state_vector.h"

namespace nucsim {

enum class RunMode {
    /// Every shot runs the whole circuit; mid-circuit outcomes are drawn at
    /// random and shots with a nonzero ancilla outcome are rejected.
    kRejection,
    /// Mid-circuit measurement assertion: one pass, every ancilla measurement
    /// is forced to |0⟩ and its probability recorded, then all shots are
    /// sampled from the final state.
    kMma,
};

std::string_view run_mode_name(RunMode mode);
std::optional<RunMode> run_mode_from_name(std::string_view name);

/// The circuit violates the shape required by mma mode.
class StructureError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// An asserted ancilla measurement had (numerically) zero probability of |0⟩.
class AssertionFailure : public std::runtime_error {
   public:
    AssertionFailure(size_t step, double probability);
    /// 0-based index of the failing mid-circuit measurement.
    size_t step() const { return step_; }
    double probability() const { return probability_; }

   private:
    size_t step_;
    double probability_;
};

/// Projects qubit q onto |0⟩ and renormalizes. Returns P(q = |0⟩), or throws
/// ProjectionError when it is below kProjectionThreshold.
double assert_measure(StateVector &state, uint32_t q);

/// Σ h_j ⟨ψ|P_j|ψ⟩. `h` acts on the lowest h.num_qubits() qubits of the
/// state. Throws std::invalid_argument for complex coefficients or when `h`
/// is wider than the state.
double expectation_pauli(const StateVector &state, const PauliHamiltonian &h);

/// Product of `probs` in order, starting from 1.
double success_product(std::span<const double> probs);

struct RunOptions {
    RunMode mode = RunMode::kMma;
    size_t shots = 1024;
    uint64_t seed = 0;
    /// Defaults to the qubit of the first mid-circuit measurement.
    std::optional<uint32_t> ancilla;
    /// Kernels run on this pool when set.
    WorkerPool *pool = nullptr;
    /// Starting amplitudes instead of |0…0⟩.
    std::optional<std::vector<cplx>> initial_state;
    /// When set, the report carries ⟨H⟩ on the state reached just before the
    /// final measurements.
    const PauliHamiltonian *observable = nullptr;
};

struct RunReport {
    RunMode mode = RunMode::kMma;
    size_t shots = 0;
    uint64_t seed = 0;
    std::optional<uint32_t> ancilla;
    /// mma: P(ancilla = |0⟩) at each mid-circuit measurement, in order.
    std::vector<double> assert_probs;
    /// mma: product of assert_probs. rejection: accepted / shots.
    double overall_success = 0;
    size_t accepted = 0;
    /// rejection: shots rejected at each mid-circuit measurement.
    std::vector<size_t> rejected_per_step;
    /// Classical register contents of accepted shots, keyed by registers in
    /// reverse declaration order, each written most significant bit first and
    /// separated by spaces.
    std::map<std::string, uint64_t> samples;
    std::optional<double> energy;
    std::optional<FusionStats> fusion_stats;
    double wall_time_s = 0;
    /// Final amplitudes (mma mode only; left empty unless requested).
    std::vector<cplx> final_state;
};

/// Start of the final sampling segment: the trailing run of measures and
/// barriers. Measurements before it are mid-circuit.
size_t final_segment_start(const Circuit &circuit);

/// Executes `circuit`. Throws StructureError when mma preconditions fail
/// and AssertionFailure when an asserted measurement is impossible.
RunReport run(const Circuit &circuit, const RunOptions &options, bool keep_final_state = false);

}  // namespace nucsim
