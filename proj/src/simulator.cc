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

#include "nucsim/simulator.h"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "nucsim/rng.h"

namespace nucsim {

namespace {

constexpr size_t kReduceChunk = 4096;

const Matrix &pauli_x_matrix() {
    static const Matrix x = gate_matrix(Gate::named(GateType::X));
    return x;
}

void apply_gate(StateVector &state, const Instruction &inst) {
    state.apply_matrix(gate_matrix(inst.gate), inst.qubits);
}

StateVector initial_state(const Circuit &circuit, const RunOptions &options) {
    if (!options.initial_state.has_value()) {
        return StateVector(circuit.num_qubits());
    }
    const auto &amps = *options.initial_state;
    if (amps.size() != (size_t{1} << circuit.num_qubits())) {
        throw std::invalid_argument("Initial state has " + std::to_string(amps.size()) +
                                    " amplitudes; the circuit needs " +
                                    std::to_string(size_t{1} << circuit.num_qubits()) + ".");
    }
    return StateVector(amps);
}

struct Layout {
    size_t final_start = 0;
    std::optional<uint32_t> ancilla;
    // Indices of mid-circuit measures on the ancilla, in order.
    std::vector<size_t> ancilla_measures;
};

Layout analyze(const Circuit &circuit, const RunOptions &options) {
    Layout layout;
    layout.final_start = final_segment_start(circuit);
    layout.ancilla = options.ancilla;
    const auto &ins = circuit.instructions();
    if (layout.ancilla.has_value() && *layout.ancilla >= circuit.num_qubits()) {
        throw std::invalid_argument("Ancilla index " + std::to_string(*layout.ancilla) + " out of range.");
    }
    for (size_t k = 0; k < layout.final_start; k++) {
        if (ins[k].kind != OpKind::kMeasure) {
            continue;
        }
        if (!layout.ancilla.has_value()) {
            layout.ancilla = ins[k].qubits[0];
        }
        if (ins[k].qubits[0] == *layout.ancilla) {
            layout.ancilla_measures.push_back(k);
        }
    }
    if (options.mode != RunMode::kMma) {
        return layout;
    }
    for (size_t k = 0; k < layout.final_start; k++) {
        if (ins[k].kind != OpKind::kMeasure) {
            continue;
        }
        uint32_t q = ins[k].qubits[0];
        if (q != *layout.ancilla) {
            throw StructureError("instruction " + std::to_string(k) + ": mid-circuit measurement of qubit " +
                                 std::to_string(q) + " is not on the ancilla (qubit " +
                                 std::to_string(*layout.ancilla) + ").");
        }
        size_t next = k + 1;
        while (next < ins.size() && ins[next].kind == OpKind::kBarrier) {
            next++;
        }
        if (next >= ins.size() || ins[next].kind != OpKind::kReset || ins[next].qubits[0] != q) {
            throw StructureError("instruction " + std::to_string(k) +
                                 ": ancilla measurement is not followed by a reset of the ancilla.");
        }
    }
    return layout;
}

// Builds sample keys from sampled basis indices and the classical bits fixed
// before the final segment.
class SampleKeys {
   public:
    SampleKeys(const Circuit &circuit, size_t final_start) : circuit_(circuit) {
        const auto &ins = circuit.instructions();
        for (size_t k = final_start; k < ins.size(); k++) {
            if (ins[k].kind == OpKind::kMeasure) {
                final_measures_.emplace_back(ins[k].qubits[0], ins[k].clbit);
            }
        }
    }

    bool has_final_measures() const { return !final_measures_.empty(); }

    std::string key(uint64_t index, std::vector<uint8_t> clbits) const {
        for (auto [q, c] : final_measures_) {
            clbits[c] = static_cast<uint8_t>((index >> q) & 1);
        }
        std::string out;
        const auto &regs = circuit_.classical_registers();
        std::vector<uint32_t> offsets;
        uint32_t offset = 0;
        for (const auto &r : regs) {
            offsets.push_back(offset);
            offset += r.size;
        }
        for (size_t r = regs.size(); r-- > 0;) {
            if (!out.empty()) {
                out += ' ';
            }
            for (uint32_t b = regs[r].size; b-- > 0;) {
                out += clbits[offsets[r] + b] ? '1' : '0';
            }
        }
        return out;
    }

   private:
    const Circuit &circuit_;
    std::vector<std::pair<uint32_t, uint32_t>> final_measures_;
};

void reset_deterministic_zero(StateVector &state, uint32_t q, size_t index) {
    double p0 = state.probability_zero(q);
    double p1 = state.norm_squared() - p0;
    if (p1 > kProjectionThreshold) {
        throw StructureError("instruction " + std::to_string(index) + ": reset of qubit " + std::to_string(q) +
                             " with P(|1⟩) = " + std::to_string(p1) +
                             " cannot be simulated in mma mode; only resets after an asserted measurement are "
                             "supported.");
    }
    if (p1 > 0) {
        state.measure_project(q, 0);
    }
}

int random_measure(StateVector &state, uint32_t q, Xoshiro256 &rng) {
    double p0 = state.probability_zero(q);
    double p1 = state.norm_squared() - p0;
    int outcome = rng.uniform() * (p0 + p1) < p0 ? 0 : 1;
    if ((outcome == 0 ? p0 : p1) < kProjectionThreshold) {
        outcome = 1 - outcome;
    }
    state.measure_project(q, outcome);
    return outcome;
}

void run_mma(const Circuit &circuit, const RunOptions &options, const Layout &layout, RunReport &report,
             bool keep_final_state) {
    StateVector state = initial_state(circuit, options);
    state.attach_pool(options.pool);
    const auto &ins = circuit.instructions();
    for (size_t k = 0; k < layout.final_start; k++) {
        const auto &inst = ins[k];
        switch (inst.kind) {
            case OpKind::kGate:
                apply_gate(state, inst);
                break;
            case OpKind::kMeasure: {
                size_t step = report.assert_probs.size();
                try {
                    report.assert_probs.push_back(assert_measure(state, inst.qubits[0]));
                } catch (const ProjectionError &) {
                    throw AssertionFailure(step, state.probability_zero(inst.qubits[0]));
                }
                break;
            }
            case OpKind::kReset:
                reset_deterministic_zero(state, inst.qubits[0], k);
                break;
            case OpKind::kBarrier:
                break;
        }
    }
    report.overall_success = success_product(report.assert_probs);
    if (options.observable != nullptr) {
        report.energy = expectation_pauli(state, *options.observable);
    }
    SampleKeys keys(circuit, layout.final_start);
    if (keys.has_final_measures()) {
        std::map<uint64_t, uint64_t> counts;
        for (uint64_t index : state.sample(options.shots, options.seed)) {
            counts[index]++;
        }
        std::vector<uint8_t> clbits(circuit.num_clbits(), 0);
        for (auto [index, count] : counts) {
            report.samples[keys.key(index, clbits)] += count;
        }
    }
    report.accepted = options.shots;
    if (keep_final_state) {
        auto amps = state.amplitudes();
        report.final_state.assign(amps.begin(), amps.end());
    }
}

void run_rejection(const Circuit &circuit, const RunOptions &options, const Layout &layout, RunReport &report) {
    const auto &ins = circuit.instructions();
    report.rejected_per_step.assign(layout.ancilla_measures.size(), 0);
    SampleKeys keys(circuit, layout.final_start);
    Xoshiro256 rng(options.seed);
    StateVector start = initial_state(circuit, options);
    StateVector state = start;
    state.attach_pool(options.pool);
    for (size_t shot = 0; shot < options.shots; shot++) {
        std::copy(start.amplitudes().begin(), start.amplitudes().end(), state.amplitudes().begin());
        std::vector<uint8_t> clbits(circuit.num_clbits(), 0);
        size_t step = 0;
        bool rejected = false;
        for (size_t k = 0; k < layout.final_start && !rejected; k++) {
            const auto &inst = ins[k];
            switch (inst.kind) {
                case OpKind::kGate:
                    apply_gate(state, inst);
                    break;
                case OpKind::kMeasure: {
                    int outcome = random_measure(state, inst.qubits[0], rng);
                    clbits[inst.clbit] = static_cast<uint8_t>(outcome);
                    if (layout.ancilla.has_value() && inst.qubits[0] == *layout.ancilla) {
                        if (outcome != 0) {
                            report.rejected_per_step[step]++;
                            rejected = true;
                        }
                        step++;
                    }
                    break;
                }
                case OpKind::kReset:
                    if (random_measure(state, inst.qubits[0], rng) == 1) {
                        state.apply_1q(pauli_x_matrix(), inst.qubits[0]);
                    }
                    break;
                case OpKind::kBarrier:
                    break;
            }
        }
        if (rejected) {
            continue;
        }
        report.accepted++;
        if (options.observable != nullptr && !report.energy.has_value()) {
            report.energy = expectation_pauli(state, *options.observable);
        }
        if (keys.has_final_measures()) {
            uint64_t index = state.sample(1, rng())[0];
            report.samples[keys.key(index, clbits)]++;
        }
    }
    report.overall_success =
        options.shots == 0 ? 0.0 : static_cast<double>(report.accepted) / static_cast<double>(options.shots);
}

}  // namespace

std::string_view run_mode_name(RunMode mode) {
    return mode == RunMode::kMma ? "mma" : "rejection";
}

std::optional<RunMode> run_mode_from_name(std::string_view name) {
    if (name == "mma") {
        return RunMode::kMma;
    }
    if (name == "rejection") {
        return RunMode::kRejection;
    }
    return std::nullopt;
}

AssertionFailure::AssertionFailure(size_t step, double probability)
    : std::runtime_error("Assertion failed at mid-circuit measurement " + std::to_string(step + 1) +
                         ": P(ancilla = |0⟩) = " + std::to_string(probability) + " is below the threshold."),
      step_(step),
      probability_(probability) {}

double assert_measure(StateVector &state, uint32_t q) {
    return state.measure_project(q, 0);
}

double expectation_pauli(const StateVector &state, const PauliHamiltonian &h) {
    if (h.num_qubits() > state.num_qubits()) {
        throw std::invalid_argument("Observable acts on " + std::to_string(h.num_qubits()) +
                                    " qubits but the state has " + std::to_string(state.num_qubits()) + ".");
    }
    if (!h.is_hermitian(0.0)) {
        throw std::invalid_argument("Observable has complex coefficients.");
    }
    auto amps = state.amplitudes();
    const size_t dim = amps.size();
    const size_t chunks = (dim + kReduceChunk - 1) / kReduceChunk;
    std::vector<double> term_values;
    term_values.reserve(h.size());
    std::vector<double> re(chunks), im(chunks);
    for (const auto &term : h.terms()) {
        const uint64_t x = term.string.x_mask();
        for (size_t c = 0; c < chunks; c++) {
            cplx acc = 0;
            size_t end = std::min(dim, (c + 1) * kReduceChunk);
            for (size_t i = c * kReduceChunk; i < end; i++) {
                acc += std::conj(amps[i ^ x]) * term.string.basis_phase(i) * amps[i];
            }
            re[c] = acc.real();
            im[c] = acc.imag();
        }
        double value_im = pairwise_sum(im);
        if (std::abs(value_im) > 1e-9) {
            throw std::logic_error("Pauli expectation has an imaginary part " + std::to_string(value_im) + ".");
        }
        term_values.push_back(term.coefficient.real() * pairwise_sum(re));
    }
    return pairwise_sum(std::move(term_values));
}

double success_product(std::span<const double> probs) {
    double p = 1.0;
    for (double x : probs) {
        p *= x;
    }
    return p;
}

size_t final_segment_start(const Circuit &circuit) {
    const auto &ins = circuit.instructions();
    size_t k = ins.size();
    while (k > 0 && (ins[k - 1].kind == OpKind::kMeasure || ins[k - 1].kind == OpKind::kBarrier)) {
        k--;
    }
    return k;
}

RunReport run(const Circuit &circuit, const RunOptions &options, bool keep_final_state) {
    auto started = std::chrono::steady_clock::now();
    if (options.shots == 0) {
        throw std::invalid_argument("shots must be at least 1.");
    }
    Layout layout = analyze(circuit, options);
    RunReport report;
    report.mode = options.mode;
    report.shots = options.shots;
    report.seed = options.seed;
    report.ancilla = layout.ancilla;
    if (options.mode == RunMode::kMma) {
        run_mma(circuit, options, layout, report, keep_final_state);
    } else {
        run_rejection(circuit, options, layout, report);
    }
    report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

}  // namespace nucsim
