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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "nucsim/linalg.h"

namespace nucsim {

/// The qelib1 gate set plus the two general fused gates C1 and C2.
enum class GateType : uint8_t {
    U3,
    U2,
    U1,
    CX,
    ID,
    X,
    Y,
    Z,
    H,
    S,
    SDG,
    T,
    TDG,
    RX,
    RY,
    RZ,
    CZ,
    CY,
    SWAP,
    CH,
    CCX,
    CSWAP,
    CRX,
    CRY,
    CRZ,
    CU1,
    CU3,
    RXX,
    RZZ,
    RCCX,
    RC3X,
    C3X,
    C3SQRTX,
    C4X,
    C1,
    C2,
};

struct GateInfo {
    std::string_view name;  // lower-case qelib1 spelling
    uint8_t num_qubits;
    uint8_t num_params;
};

const GateInfo &gate_info(GateType type);

/// Lookup by qelib1 spelling ("cx", "u3", ...). C1/C2 have no QASM name.
std::optional<GateType> gate_type_from_name(std::string_view name);

/// A fully parameterized gate. Named gates carry their angles in `params`;
/// C1/C2 carry an explicit row-major 2×2 / 4×4 payload in `matrix`.
struct Gate {
    GateType type = GateType::ID;
    std::array<double, 3> params{};
    std::vector<cplx> matrix;

    static Gate named(GateType type, std::span<const double> params);
    static Gate named(GateType type, std::initializer_list<double> params = {});
    static Gate general(Matrix u);

    uint8_t num_qubits() const { return gate_info(type).num_qubits; }
    bool operator==(const Gate &other) const;
};

/// Dense unitary of a gate in little-endian operand order: operand k of the
/// instruction is bit k of the matrix index. For controlled gates the
/// controls are the leading operands, as in qelib1 (`cx c,t`).
Matrix gate_matrix(const Gate &gate);

/// Unitarity tolerance applied to C1/C2 payloads.
inline constexpr double kPayloadUnitarityTolerance = 1e-10;

/// Decomposes a 2×2 unitary as e^{i·phase}·U3(theta, phi, lambda).
struct U3Angles {
    double theta;
    double phi;
    double lambda;
    double phase;
};
U3Angles u3_angles(const Matrix &u);

}  // namespace nucsim
