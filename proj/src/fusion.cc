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

#include "nucsim/fusion.h"

#include <limits>
#include <optional>

namespace nucsim {

namespace {

constexpr size_t kNone = std::numeric_limits<size_t>::max();

bool is_1q_gate(const Instruction &inst) {
    return inst.is_gate() && inst.qubits.size() == 1;
}

bool is_2q_gate(const Instruction &inst) {
    return inst.is_gate() && inst.qubits.size() == 2;
}

// V acting on operand `slot` of a two-qubit matrix.
Matrix lift_to_slot(const Matrix &v, size_t slot) {
    return slot == 0 ? kron(Matrix::identity(2), v) : kron(v, Matrix::identity(2));
}

Instruction general_gate(Matrix u, std::vector<uint32_t> qubits) {
    return Instruction::make_gate(Gate::general(std::move(u)), std::move(qubits));
}

// Output buffer whose entries can be deleted in place and compacted later.
struct Builder {
    explicit Builder(const Circuit &source) : out(source.empty_like()) {}

    size_t push(Instruction inst) {
        items.push_back(std::move(inst));
        alive.push_back(true);
        return items.size() - 1;
    }

    Circuit finish() {
        out.reserve(items.size());
        for (size_t k = 0; k < items.size(); k++) {
            if (alive[k]) {
                out.append_unchecked(std::move(items[k]));
            }
        }
        return std::move(out);
    }

    Circuit out;
    std::vector<Instruction> items;
    std::vector<bool> alive;
};

Circuit absorb_once(const Circuit &circuit) {
    const uint32_t n = circuit.num_qubits();
    Builder b(circuit);
    // Output index of the last instruction on q when it is a 2-qubit gate.
    std::vector<size_t> last_2q(n, kNone);
    // Output index of a 1-qubit gate on q that nothing has touched q after.
    std::vector<size_t> pending(n, kNone);
    for (const auto &inst : circuit.instructions()) {
        if (is_1q_gate(inst)) {
            uint32_t q = inst.qubits[0];
            if (last_2q[q] != kNone) {
                Instruction &host = b.items[last_2q[q]];
                size_t slot = host.qubits[0] == q ? 0 : 1;
                Matrix m = lift_to_slot(gate_matrix(inst.gate), slot) * gate_matrix(host.gate);
                host = general_gate(std::move(m), host.qubits);
            } else {
                pending[q] = b.push(inst);
            }
            continue;
        }
        if (is_2q_gate(inst)) {
            std::optional<Matrix> m;
            for (size_t slot = 0; slot < 2; slot++) {
                uint32_t q = inst.qubits[slot];
                if (pending[q] == kNone) {
                    continue;
                }
                if (!m.has_value()) {
                    m = gate_matrix(inst.gate);
                }
                *m = *m * lift_to_slot(gate_matrix(b.items[pending[q]].gate), slot);
                b.alive[pending[q]] = false;
            }
            size_t index = m.has_value() ? b.push(general_gate(std::move(*m), inst.qubits)) : b.push(inst);
            for (uint32_t q : inst.qubits) {
                pending[q] = kNone;
                last_2q[q] = index;
            }
            continue;
        }
        for (uint32_t q : inst.qubits) {
            pending[q] = kNone;
            last_2q[q] = kNone;
        }
        b.push(inst);
    }
    return b.finish();
}

}  // namespace

Circuit merge_1q(const Circuit &circuit) {
    const uint32_t n = circuit.num_qubits();
    Builder b(circuit);
    std::vector<size_t> pending(n, kNone);
    std::vector<Matrix> product(n);
    auto flush = [&](uint32_t q) {
        if (pending[q] != kNone) {
            b.items[pending[q]] = general_gate(std::move(product[q]), {q});
            pending[q] = kNone;
        }
    };
    for (const auto &inst : circuit.instructions()) {
        if (is_1q_gate(inst)) {
            uint32_t q = inst.qubits[0];
            if (pending[q] == kNone) {
                product[q] = gate_matrix(inst.gate);
                pending[q] = b.push(inst);
            } else {
                product[q] = gate_matrix(inst.gate) * product[q];
            }
            continue;
        }
        for (uint32_t q : inst.qubits) {
            flush(q);
        }
        b.push(inst);
    }
    for (uint32_t q = 0; q < n; q++) {
        flush(q);
    }
    return b.finish();
}

Circuit absorb_1q(const Circuit &circuit) {
    Circuit current = absorb_once(circuit);
    size_t count = current.gate_count();
    for (;;) {
        Circuit next = absorb_once(current);
        size_t next_count = next.gate_count();
        current = std::move(next);
        if (next_count == count) {
            return current;
        }
        count = next_count;
    }
}

Circuit normalize_2q_order(const Circuit &circuit) {
    Circuit out = circuit.empty_like();
    out.reserve(circuit.size());
    for (const auto &inst : circuit.instructions()) {
        if (is_2q_gate(inst) && inst.qubits[0] > inst.qubits[1]) {
            out.append_unchecked(
                general_gate(swap_operands(gate_matrix(inst.gate)), {inst.qubits[1], inst.qubits[0]}));
        } else {
            out.append_unchecked(inst);
        }
    }
    return out;
}

Circuit fuse_2q(const Circuit &circuit) {
    const uint32_t n = circuit.num_qubits();
    Builder b(circuit);
    std::vector<size_t> last(n, kNone);
    for (const auto &inst : circuit.instructions()) {
        if (is_2q_gate(inst)) {
            uint32_t lo = inst.qubits[0], hi = inst.qubits[1];
            Matrix m = gate_matrix(inst.gate);
            if (lo > hi) {
                std::swap(lo, hi);
                m = swap_operands(m);
            }
            size_t k = last[lo];
            if (k != kNone && last[hi] == k && is_2q_gate(b.items[k]) && b.items[k].qubits[0] == lo &&
                b.items[k].qubits[1] == hi) {
                b.items[k] = general_gate(m * gate_matrix(b.items[k].gate), {lo, hi});
                continue;
            }
            size_t index = inst.gate.type == GateType::C2 && inst.qubits[0] == lo
                               ? b.push(inst)
                               : b.push(general_gate(std::move(m), {lo, hi}));
            last[lo] = last[hi] = index;
            continue;
        }
        size_t index = b.push(inst);
        for (uint32_t q : inst.qubits) {
            last[q] = index;
        }
    }
    return b.finish();
}

std::pair<Circuit, FusionStats> fuse_pipeline(const Circuit &circuit) {
    FusionStats stats;
    stats.gates_before = circuit.gate_count();
    Circuit c = merge_1q(circuit);
    stats.per_pass.push_back({"merge_1q", c.gate_count()});
    c = absorb_1q(c);
    stats.per_pass.push_back({"absorb_1q", c.gate_count()});
    c = normalize_2q_order(c);
    stats.per_pass.push_back({"normalize_2q_order", c.gate_count()});
    c = fuse_2q(c);
    stats.per_pass.push_back({"fuse_2q", c.gate_count()});
    stats.gates_after = c.gate_count();
    if (stats.gates_after > 0) {
        stats.reduction_factor = static_cast<double>(stats.gates_before) / static_cast<double>(stats.gates_after);
    }
    return {std::move(c), std::move(stats)};
}

}  // namespace nucsim
