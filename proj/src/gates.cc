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

#include "nucsim/gates.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace nucsim {

namespace {

using std::numbers::pi;
constexpr cplx I{0.0, 1.0};

constexpr GateInfo kGateTable[] = {
    {"u3", 1, 3},      {"u2", 1, 2},     {"u1", 1, 1},    {"cx", 2, 0},      {"id", 1, 0},    {"x", 1, 0},
    {"y", 1, 0},       {"z", 1, 0},      {"h", 1, 0},     {"s", 1, 0},       {"sdg", 1, 0},   {"t", 1, 0},
    {"tdg", 1, 0},     {"rx", 1, 1},     {"ry", 1, 1},    {"rz", 1, 1},      {"cz", 2, 0},    {"cy", 2, 0},
    {"swap", 2, 0},    {"ch", 2, 0},     {"ccx", 3, 0},   {"cswap", 3, 0},   {"crx", 2, 1},   {"cry", 2, 1},
    {"crz", 2, 1},     {"cu1", 2, 1},    {"cu3", 2, 3},   {"rxx", 2, 1},     {"rzz", 2, 1},   {"rccx", 3, 0},
    {"rc3x", 4, 0},    {"c3x", 4, 0},    {"c3sqrtx", 4, 0}, {"c4x", 5, 0},   {"C1", 1, 0},    {"C2", 2, 0},
};

Matrix m2(cplx a, cplx b, cplx c, cplx d) {
    return Matrix::square(2, {a, b, c, d});
}

Matrix u3(double theta, double phi, double lambda) {
    double c = std::cos(theta / 2);
    double s = std::sin(theta / 2);
    return m2(c, -std::exp(I * lambda) * s, std::exp(I * phi) * s, std::exp(I * (phi + lambda)) * c);
}

Matrix phase_gate(double lambda) {
    return m2(1, 0, 0, std::exp(I * lambda));
}

Matrix rx(double theta) {
    double c = std::cos(theta / 2);
    double s = std::sin(theta / 2);
    return m2(c, -I * s, -I * s, c);
}

Matrix ry(double theta) {
    double c = std::cos(theta / 2);
    double s = std::sin(theta / 2);
    return m2(c, -s, s, c);
}

Matrix rz(double theta) {
    return m2(std::exp(-I * (theta / 2)), 0, 0, std::exp(I * (theta / 2)));
}

Matrix pauli_x() {
    return m2(0, 1, 1, 0);
}

Matrix hadamard() {
    double r = 1.0 / std::sqrt(2.0);
    return m2(r, r, r, -r);
}

// Controls on operand bits [0, k), target on bit k.
Matrix controlled(const Matrix &w, size_t num_controls) {
    size_t dim = size_t{1} << (num_controls + 1);
    size_t control_mask = (size_t{1} << num_controls) - 1;
    size_t target_bit = size_t{1} << num_controls;
    Matrix out = Matrix::identity(dim);
    for (size_t r = 0; r < dim; r++) {
        if ((r & control_mask) != control_mask) {
            continue;
        }
        for (size_t c = 0; c < dim; c++) {
            if ((c & control_mask) != control_mask) {
                continue;
            }
            out(r, c) = w((r & target_bit) ? 1 : 0, (c & target_bit) ? 1 : 0);
        }
    }
    return out;
}

// Embeds a gate acting on `operands` (little-endian within the gate) into a
// `width`-qubit dense matrix.
Matrix embed(const Matrix &u, std::initializer_list<size_t> operands, size_t width) {
    std::vector<size_t> ops(operands);
    size_t dim = size_t{1} << width;
    size_t mask = 0;
    for (size_t q : ops) {
        mask |= size_t{1} << q;
    }
    auto local = [&](size_t idx) {
        size_t l = 0;
        for (size_t k = 0; k < ops.size(); k++) {
            l |= ((idx >> ops[k]) & 1) << k;
        }
        return l;
    };
    Matrix out(dim, dim);
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            if ((r & ~mask) == (c & ~mask)) {
                out(r, c) = u(local(r), local(c));
            }
        }
    }
    return out;
}

struct Step {
    Matrix u;
    std::initializer_list<size_t> operands;
};

Matrix sequence(std::initializer_list<Step> steps, size_t width) {
    Matrix acc = Matrix::identity(size_t{1} << width);
    for (const auto &step : steps) {
        acc = embed(step.u, step.operands, width) * acc;
    }
    return acc;
}

Matrix rccx_matrix() {
    Matrix h = u3(pi / 2, 0, pi);
    Matrix tp = phase_gate(pi / 4);
    Matrix tm = phase_gate(-pi / 4);
    Matrix cx = controlled(pauli_x(), 1);
    return sequence({{h, {2}},
                     {tp, {2}},
                     {cx, {1, 2}},
                     {tm, {2}},
                     {cx, {0, 2}},
                     {tp, {2}},
                     {cx, {1, 2}},
                     {tm, {2}},
                     {h, {2}}},
                    3);
}

Matrix rc3x_matrix() {
    Matrix h = u3(pi / 2, 0, pi);
    Matrix tp = phase_gate(pi / 4);
    Matrix tm = phase_gate(-pi / 4);
    Matrix cx = controlled(pauli_x(), 1);
    return sequence({{h, {3}},  {tp, {3}}, {cx, {2, 3}}, {tm, {3}}, {h, {3}},  {cx, {0, 3}},
                     {tp, {3}}, {cx, {1, 3}}, {tm, {3}}, {cx, {0, 3}}, {tp, {3}}, {cx, {1, 3}},
                     {tm, {3}}, {h, {3}},  {tp, {3}}, {cx, {2, 3}}, {tm, {3}}, {h, {3}}},
                    4);
}

}  // namespace

const GateInfo &gate_info(GateType type) {
    return kGateTable[static_cast<size_t>(type)];
}

std::optional<GateType> gate_type_from_name(std::string_view name) {
    for (size_t k = 0; k < std::size(kGateTable); k++) {
        auto type = static_cast<GateType>(k);
        if (type == GateType::C1 || type == GateType::C2) {
            continue;
        }
        if (kGateTable[k].name == name) {
            return type;
        }
    }
    return std::nullopt;
}

Gate Gate::named(GateType type, std::initializer_list<double> params) {
    return named(type, std::span<const double>(params.begin(), params.size()));
}

Gate Gate::named(GateType type, std::span<const double> params) {
    const auto &info = gate_info(type);
    if (type == GateType::C1 || type == GateType::C2) {
        throw std::invalid_argument("C1/C2 gates carry a matrix; use Gate::general.");
    }
    if (params.size() != info.num_params) {
        throw std::invalid_argument("Gate '" + std::string(info.name) + "' expects " +
                                    std::to_string(info.num_params) + " parameter(s), got " +
                                    std::to_string(params.size()) + ".");
    }
    Gate g;
    g.type = type;
    size_t k = 0;
    for (double p : params) {
        g.params[k++] = p;
    }
    return g;
}

Gate Gate::general(Matrix u) {
    Gate g;
    if (u.rows() == 2 && u.cols() == 2) {
        g.type = GateType::C1;
    } else if (u.rows() == 4 && u.cols() == 4) {
        g.type = GateType::C2;
    } else {
        throw std::invalid_argument("General gates must be 2x2 (C1) or 4x4 (C2).");
    }
    if (unitarity_error(u) > kPayloadUnitarityTolerance) {
        throw std::invalid_argument("General gate payload is not unitary.");
    }
    auto d = u.data();
    g.matrix.assign(d.begin(), d.end());
    return g;
}

bool Gate::operator==(const Gate &other) const {
    return type == other.type && params == other.params && matrix == other.matrix;
}

Matrix gate_matrix(const Gate &gate) {
    const auto &p = gate.params;
    switch (gate.type) {
        case GateType::U3:
            return u3(p[0], p[1], p[2]);
        case GateType::U2:
            return u3(pi / 2, p[0], p[1]);
        case GateType::U1:
            return phase_gate(p[0]);
        case GateType::CX:
            return controlled(pauli_x(), 1);
        case GateType::ID:
            return Matrix::identity(2);
        case GateType::X:
            return pauli_x();
        case GateType::Y:
            return m2(0, -I, I, 0);
        case GateType::Z:
            return m2(1, 0, 0, -1);
        case GateType::H:
            return hadamard();
        case GateType::S:
            return phase_gate(pi / 2);
        case GateType::SDG:
            return phase_gate(-pi / 2);
        case GateType::T:
            return phase_gate(pi / 4);
        case GateType::TDG:
            return phase_gate(-pi / 4);
        case GateType::RX:
            return rx(p[0]);
        case GateType::RY:
            return ry(p[0]);
        case GateType::RZ:
            return rz(p[0]);
        case GateType::CZ:
            return controlled(m2(1, 0, 0, -1), 1);
        case GateType::CY:
            return controlled(m2(0, -I, I, 0), 1);
        case GateType::SWAP:
            return Matrix::square(4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
        case GateType::CH:
            return controlled(hadamard(), 1);
        case GateType::CCX:
            return controlled(pauli_x(), 2);
        case GateType::CSWAP: {
            Matrix out = Matrix::identity(8);
            // Control is bit 0; exchange bits 1 and 2 when it is set.
            out(3, 3) = 0;
            out(5, 5) = 0;
            out(3, 5) = 1;
            out(5, 3) = 1;
            return out;
        }
        case GateType::CRX:
            return controlled(rx(p[0]), 1);
        case GateType::CRY:
            return controlled(ry(p[0]), 1);
        case GateType::CRZ:
            return controlled(rz(p[0]), 1);
        case GateType::CU1:
            return controlled(phase_gate(p[0]), 1);
        case GateType::CU3:
            return controlled(u3(p[0], p[1], p[2]), 1);
        case GateType::RXX: {
            double c = std::cos(p[0] / 2);
            cplx s = -I * std::sin(p[0] / 2);
            return Matrix::square(4, {c, 0, 0, s, 0, c, s, 0, 0, s, c, 0, s, 0, 0, c});
        }
        case GateType::RZZ: {
            cplx even = std::exp(-I * (p[0] / 2));
            cplx odd = std::exp(I * (p[0] / 2));
            return Matrix::square(4, {even, 0, 0, 0, 0, odd, 0, 0, 0, 0, odd, 0, 0, 0, 0, even});
        }
        case GateType::RCCX:
            return rccx_matrix();
        case GateType::RC3X:
            return rc3x_matrix();
        case GateType::C3X:
            return controlled(pauli_x(), 3);
        case GateType::C3SQRTX:
            return controlled(m2(cplx(0.5, 0.5), cplx(0.5, -0.5), cplx(0.5, -0.5), cplx(0.5, 0.5)), 3);
        case GateType::C4X:
            return controlled(pauli_x(), 4);
        case GateType::C1:
            return Matrix(2, 2, gate.matrix);
        case GateType::C2:
            return Matrix(4, 4, gate.matrix);
    }
    throw std::logic_error("unreachable gate type");
}

U3Angles u3_angles(const Matrix &u) {
    constexpr double tiny = 1e-14;
    double c = std::abs(u(0, 0));
    double s = std::abs(u(1, 0));
    U3Angles out{};
    out.theta = 2 * std::atan2(s, c);
    if (c > tiny) {
        out.phase = std::arg(u(0, 0));
        if (s > tiny) {
            out.phi = std::arg(u(1, 0)) - out.phase;
            out.lambda = std::arg(-u(0, 1)) - out.phase;
        } else {
            out.phi = 0;
            out.lambda = std::arg(u(1, 1)) - out.phase;
        }
    } else {
        // cos(theta/2) vanishes; pin lambda to zero.
        out.lambda = 0;
        out.phase = std::arg(-u(0, 1));
        out.phi = std::arg(u(1, 0)) - out.phase;
    }
    return out;
}

}  // namespace nucsim
