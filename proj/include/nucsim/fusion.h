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

#include <string>
#include <utility>
#include <vector>

#include "nucsim/circuit.h"

namespace nucsim {

struct FusionPassCount {
    std::string name;
    size_t gates = 0;

    bool operator==(const FusionPassCount &other) const = default;
};

struct FusionStats {
    size_t gates_before = 0;
    size_t gates_after = 0;
    /// Gate count after each pass, in pipeline order.
    std::vector<FusionPassCount> per_pass;
    /// gates_before / gates_after, or 1 when the circuit has no gates.
    double reduction_factor = 1.0;

    bool operator==(const FusionStats &other) const = default;
};

// All passes only exploit adjacency on per-qubit instruction timelines: two
// instructions are adjacent on qubit q when no instruction touching q lies
// between them. Gates are never reordered across a measure, reset or barrier
// on a shared qubit, and gates on three or more qubits are passed through
// unchanged and block fusion on every qubit they touch.

/// Every maximal run of 1-qubit gates on one qubit becomes a single C1 holding
/// the ordered product (later gates multiply on the left), placed where the
/// run starts.
Circuit merge_1q(const Circuit &circuit);

/// Folds each 1-qubit gate into an adjacent 2-qubit gate on its qubit: into
/// the preceding one when it directly follows a 2-qubit gate (C2 = V·U),
/// otherwise into the following one (C2 = U·V). Repeats until no gate is
/// absorbed.
Circuit absorb_1q(const Circuit &circuit);

/// Rewrites every 2-qubit gate on (b, a) with b > a as a C2 on (a, b), with
/// the matrix conjugated by SWAP.
Circuit normalize_2q_order(const Circuit &circuit);

/// Collapses runs of 2-qubit gates on the same ordered pair into one C2, and
/// turns every remaining 2-qubit gate into a C2.
Circuit fuse_2q(const Circuit &circuit);

/// merge_1q → absorb_1q → normalize_2q_order → fuse_2q.
std::pair<Circuit, FusionStats> fuse_pipeline(const Circuit &circuit);

}  // namespace nucsim
