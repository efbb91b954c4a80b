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
#include <string>
#include <vector>

#include "nucsim/gates.h"

namespace nucsim {

enum class OpKind : uint8_t { kGate, kMeasure, kReset, kBarrier };

struct Instruction {
    OpKind kind = OpKind::kGate;
    Gate gate;
    /// Gate operands in gate order, the measured/reset qubit, or the barrier set.
    std::vector<uint32_t> qubits;
    /// Flat classical bit index (registers concatenated in declaration order).
    uint32_t clbit = 0;

    static Instruction make_gate(Gate gate, std::vector<uint32_t> qubits);
    static Instruction measure(uint32_t qubit, uint32_t clbit);
    static Instruction reset(uint32_t qubit);
    static Instruction barrier(std::vector<uint32_t> qubits);

    bool is_gate() const { return kind == OpKind::kGate; }
    bool operator==(const Instruction &other) const = default;
};

struct ClassicalRegister {
    std::string name;
    uint32_t size = 0;
    bool operator==(const ClassicalRegister &other) const = default;
};

/// An ordered instruction list over one quantum register and any number of
/// classical registers. Instruction order is execution order.
class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(uint32_t num_qubits, std::string qreg_name = "q");

    uint32_t num_qubits() const { return num_qubits_; }
    const std::string &qreg_name() const { return qreg_name_; }
    const std::vector<ClassicalRegister> &classical_registers() const { return cregs_; }
    uint32_t num_clbits() const;
    /// Flat index of bit `index` of register `name`.
    uint32_t clbit_index(const std::string &name, uint32_t index) const;

    const std::vector<Instruction> &instructions() const { return instructions_; }
    size_t size() const { return instructions_.size(); }
    /// Number of gate instructions (measure, reset and barrier excluded).
    size_t gate_count() const;
    /// Gate instructions acting on exactly two qubits.
    size_t two_qubit_gate_count() const;

    /// Returns the flat index of the register's first bit.
    uint32_t add_classical_register(std::string name, uint32_t size);

    /// Appends after validating operand bounds and distinctness.
    void append(Instruction inst);
    void gate(GateType type, std::initializer_list<uint32_t> qubits, std::initializer_list<double> params = {});
    void measure(uint32_t qubit, uint32_t clbit);
    void reset(uint32_t qubit);
    void barrier(std::vector<uint32_t> qubits);
    void barrier_all();

    /// Copy of the register layout without instructions.
    Circuit empty_like() const;
    /// Appends without validation; for passes that rewrite a validated circuit.
    void append_unchecked(Instruction inst) { instructions_.push_back(std::move(inst)); }
    void reserve(size_t n) { instructions_.reserve(n); }

    bool operator==(const Circuit &other) const = default;

   private:
    uint32_t num_qubits_ = 0;
    std::string qreg_name_ = "q";
    std::vector<ClassicalRegister> cregs_;
    std::vector<Instruction> instructions_;
};

}  // namespace nucsim
