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

#include "nucsim/circuit.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nucsim {

Instruction Instruction::make_gate(Gate gate, std::vector<uint32_t> qubits) {
    Instruction inst;
    inst.kind = OpKind::kGate;
    inst.gate = std::move(gate);
    inst.qubits = std::move(qubits);
    return inst;
}

Instruction Instruction::measure(uint32_t qubit, uint32_t clbit) {
    Instruction inst;
    inst.kind = OpKind::kMeasure;
    inst.qubits = {qubit};
    inst.clbit = clbit;
    return inst;
}

Instruction Instruction::reset(uint32_t qubit) {
    Instruction inst;
    inst.kind = OpKind::kReset;
    inst.qubits = {qubit};
    return inst;
}

Instruction Instruction::barrier(std::vector<uint32_t> qubits) {
    Instruction inst;
    inst.kind = OpKind::kBarrier;
    inst.qubits = std::move(qubits);
    return inst;
}

Circuit::Circuit(uint32_t num_qubits, std::string qreg_name)
    : num_qubits_(num_qubits), qreg_name_(std::move(qreg_name)) {}

uint32_t Circuit::num_clbits() const {
    uint32_t total = 0;
    for (const auto &r : cregs_) {
        total += r.size;
    }
    return total;
}

uint32_t Circuit::clbit_index(const std::string &name, uint32_t index) const {
    uint32_t offset = 0;
    for (const auto &r : cregs_) {
        if (r.name == name) {
            if (index >= r.size) {
                throw std::out_of_range("Classical bit " + name + "[" + std::to_string(index) + "] out of range.");
            }
            return offset + index;
        }
        offset += r.size;
    }
    throw std::out_of_range("Unknown classical register '" + name + "'.");
}

size_t Circuit::gate_count() const {
    return std::count_if(instructions_.begin(), instructions_.end(), [](const Instruction &i) { return i.is_gate(); });
}

size_t Circuit::two_qubit_gate_count() const {
    return std::count_if(instructions_.begin(), instructions_.end(),
                         [](const Instruction &i) { return i.is_gate() && i.qubits.size() == 2; });
}

uint32_t Circuit::add_classical_register(std::string name, uint32_t size) {
    for (const auto &r : cregs_) {
        if (r.name == name) {
            throw std::invalid_argument("Duplicate classical register '" + name + "'.");
        }
    }
    uint32_t offset = num_clbits();
    cregs_.push_back({std::move(name), size});
    return offset;
}

void Circuit::append(Instruction inst) {
    for (size_t k = 0; k < inst.qubits.size(); k++) {
        if (inst.qubits[k] >= num_qubits_) {
            throw std::out_of_range("Qubit index " + std::to_string(inst.qubits[k]) + " out of range for " +
                                    std::to_string(num_qubits_) + " qubits.");
        }
        for (size_t j = 0; j < k; j++) {
            if (inst.qubits[j] == inst.qubits[k]) {
                throw std::invalid_argument("Repeated qubit " + std::to_string(inst.qubits[k]) +
                                            " within one instruction.");
            }
        }
    }
    switch (inst.kind) {
        case OpKind::kGate:
            if (inst.qubits.size() != inst.gate.num_qubits()) {
                throw std::invalid_argument("Gate '" + std::string(gate_info(inst.gate.type).name) + "' expects " +
                                            std::to_string(inst.gate.num_qubits()) + " qubit(s).");
            }
            break;
        case OpKind::kMeasure:
            if (inst.clbit >= num_clbits()) {
                throw std::out_of_range("Classical bit " + std::to_string(inst.clbit) + " out of range.");
            }
            [[fallthrough]];
        case OpKind::kReset:
            if (inst.qubits.size() != 1) {
                throw std::invalid_argument("Measure/reset act on exactly one qubit.");
            }
            break;
        case OpKind::kBarrier:
            break;
    }
    instructions_.push_back(std::move(inst));
}

void Circuit::gate(GateType type, std::initializer_list<uint32_t> qubits, std::initializer_list<double> params) {
    append(Instruction::make_gate(Gate::named(type, params), std::vector<uint32_t>(qubits)));
}

void Circuit::measure(uint32_t qubit, uint32_t clbit) {
    append(Instruction::measure(qubit, clbit));
}

void Circuit::reset(uint32_t qubit) {
    append(Instruction::reset(qubit));
}

void Circuit::barrier(std::vector<uint32_t> qubits) {
    append(Instruction::barrier(std::move(qubits)));
}

void Circuit::barrier_all() {
    std::vector<uint32_t> all(num_qubits_);
    std::iota(all.begin(), all.end(), 0u);
    barrier(std::move(all));
}

Circuit Circuit::empty_like() const {
    Circuit out(num_qubits_, qreg_name_);
    out.cregs_ = cregs_;
    return out;
}

}  // namespace nucsim
