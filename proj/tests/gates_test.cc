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

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "nucsim/circuit.h"
#include "oracle.h"

using namespace nucsim;

namespace {

constexpr double kPi = std::numbers::pi;

Gate with_random_params(GateType type, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    std::vector<double> params(gate_info(type).num_params);
    for (auto &p : params) {
        p = angle(rng);
    }
    return Gate::named(type, params);
}

std::vector<GateType> all_named_types() {
    std::vector<GateType> out;
    for (int k = 0; k <= static_cast<int>(GateType::C4X); k++) {
        out.push_back(static_cast<GateType>(k));
    }
    return out;
}

}  // namespace

TEST(gates, every_named_gate_is_unitary_with_declared_arity) {
    std::mt19937_64 rng(5);
    for (auto type : all_named_types()) {
        Gate g = with_random_params(type, rng);
        Matrix u = gate_matrix(g);
        size_t dim = size_t{1} << gate_info(type).num_qubits;
        ASSERT_EQ(u.rows(), dim) << gate_info(type).name;
        EXPECT_LT(unitarity_error(u), 1e-12) << gate_info(type).name;
    }
}

TEST(gates, names_round_trip) {
    for (auto type : all_named_types()) {
        auto found = gate_type_from_name(gate_info(type).name);
        ASSERT_TRUE(found.has_value()) << gate_info(type).name;
        EXPECT_EQ(*found, type);
    }
    EXPECT_FALSE(gate_type_from_name("c1").has_value());
    EXPECT_FALSE(gate_type_from_name("foo").has_value());
}

TEST(gates, cx_control_is_operand_zero) {
    Matrix cx = gate_matrix(Gate::named(GateType::CX));
    // Index = control + 2·target: |c=1,t=0⟩ (index 1) maps to index 3.
    EXPECT_EQ(cx(3, 1), cplx(1));
    EXPECT_EQ(cx(1, 3), cplx(1));
    EXPECT_EQ(cx(2, 2), cplx(1));
    EXPECT_EQ(cx(0, 0), cplx(1));
}

TEST(gates, ccx_and_c4x_flip_only_when_all_controls_set) {
    Matrix ccx = gate_matrix(Gate::named(GateType::CCX));
    EXPECT_EQ(ccx(7, 3), cplx(1));
    EXPECT_EQ(ccx(5, 5), cplx(1));
    Matrix c4x = gate_matrix(Gate::named(GateType::C4X));
    EXPECT_EQ(c4x(31, 15), cplx(1));
    EXPECT_EQ(c4x(14, 14), cplx(1));
}

TEST(gates, relative_phase_toffolis_match_toffoli_magnitudes) {
    auto check = [](GateType relative, GateType exact) {
        Matrix a = gate_matrix(Gate::named(relative));
        Matrix b = gate_matrix(Gate::named(exact));
        for (size_t k = 0; k < a.data().size(); k++) {
            EXPECT_NEAR(std::abs(a.data()[k]), std::abs(b.data()[k]), 1e-12);
        }
    };
    check(GateType::RCCX, GateType::CCX);
    check(GateType::RC3X, GateType::C3X);
}

TEST(gates, c3sqrtx_squares_to_c3x) {
    Matrix a = gate_matrix(Gate::named(GateType::C3SQRTX));
    EXPECT_LT(max_abs_diff(a * a, gate_matrix(Gate::named(GateType::C3X))), 1e-15);
}

TEST(gates, qelib1_identities) {
    auto m = [](GateType t, std::initializer_list<double> p = {}) { return gate_matrix(Gate::named(t, p)); };
    EXPECT_LT(max_abs_diff(m(GateType::U2, {0, kPi}), m(GateType::H)), 1e-15);
    EXPECT_LT(max_abs_diff(m(GateType::U3, {kPi, 0, kPi}), m(GateType::X)), 1e-15);
    EXPECT_LT(max_abs_diff(m(GateType::S) * m(GateType::S), m(GateType::Z)), 1e-15);
    EXPECT_LT(max_abs_diff(m(GateType::T) * m(GateType::T), m(GateType::S)), 1e-15);
    EXPECT_LT(max_abs_diff(m(GateType::SDG) * m(GateType::S), Matrix::identity(2)), 1e-15);
    EXPECT_LT(max_abs_diff(m(GateType::RZ, {kPi}), m(GateType::Z) * cplx(0, -1)), 1e-15);
    EXPECT_LT(max_abs_diff(m(GateType::RY, {kPi}), m(GateType::Y) * cplx(0, -1)), 1e-15);
    EXPECT_LT(max_abs_diff(m(GateType::RX, {kPi}), m(GateType::X) * cplx(0, -1)), 1e-15);
    // CZ is symmetric in its operands.
    EXPECT_LT(max_abs_diff(swap_operands(m(GateType::CZ)), m(GateType::CZ)), 1e-15);
    // RZZ(θ) = exp(-iθ/2 Z⊗Z) and RXX(θ) = (H⊗H) RZZ(θ) (H⊗H).
    Matrix hh = kron(m(GateType::H), m(GateType::H));
    EXPECT_LT(max_abs_diff(hh * m(GateType::RZZ, {0.7}) * hh, m(GateType::RXX, {0.7})), 1e-15);
}

TEST(gates, controlled_rotation_blocks) {
    Matrix crz = gate_matrix(Gate::named(GateType::CRZ, {0.3}));
    Matrix rz = gate_matrix(Gate::named(GateType::RZ, {0.3}));
    // Control set (bit 0 = 1): indices 1 and 3 carry RZ on the target.
    EXPECT_EQ(crz(1, 1), rz(0, 0));
    EXPECT_EQ(crz(3, 3), rz(1, 1));
    EXPECT_EQ(crz(2, 2), cplx(1));
}

TEST(gates, cswap_exchanges_targets_under_control) {
    Matrix cswap = gate_matrix(Gate::named(GateType::CSWAP));
    // Control bit 0 set, target bits (1,2) = (1,0) → (0,1): 3 → 5.
    EXPECT_EQ(cswap(5, 3), cplx(1));
    EXPECT_EQ(cswap(2, 2), cplx(1));
}

TEST(gates, param_count_is_validated) {
    EXPECT_THROW(Gate::named(GateType::RZ), std::invalid_argument);
    EXPECT_THROW(Gate::named(GateType::H, {1.0}), std::invalid_argument);
}

TEST(gates, general_gates) {
    std::mt19937_64 rng(1);
    Matrix u = oracle::random_unitary(4, rng);
    Gate g = Gate::general(u);
    EXPECT_EQ(g.type, GateType::C2);
    EXPECT_EQ(g.num_qubits(), 2);
    EXPECT_EQ(gate_matrix(g), u);
    EXPECT_THROW(Gate::general(Matrix::square(2, {1, 1, 0, 1})), std::invalid_argument);
    EXPECT_THROW(Gate::general(Matrix::identity(8)), std::invalid_argument);
}

TEST(gates, u3_angles_reconstruct_up_to_phase) {
    std::mt19937_64 rng(2);
    std::vector<Matrix> cases = {Matrix::identity(2), gate_matrix(Gate::named(GateType::X)),
                                 gate_matrix(Gate::named(GateType::Y)), gate_matrix(Gate::named(GateType::T))};
    for (int k = 0; k < 50; k++) {
        cases.push_back(oracle::random_unitary(2, rng));
    }
    for (const auto &u : cases) {
        auto a = u3_angles(u);
        Matrix rebuilt = gate_matrix(Gate::named(GateType::U3, {a.theta, a.phi, a.lambda})) *
                         std::exp(cplx(0, a.phase));
        EXPECT_LT(max_abs_diff(rebuilt, u), 1e-12);
    }
}

TEST(circuit, append_validates_operands) {
    Circuit c(3);
    c.add_classical_register("c", 2);
    c.gate(GateType::CX, {0, 2});
    EXPECT_THROW(c.gate(GateType::CX, {1, 1}), std::invalid_argument);
    EXPECT_THROW(c.gate(GateType::H, {3}), std::out_of_range);
    EXPECT_THROW(c.gate(GateType::H, {0, 1}), std::invalid_argument);
    EXPECT_THROW(c.measure(0, 2), std::out_of_range);
    c.measure(0, 1);
    c.reset(0);
    c.barrier_all();
    EXPECT_EQ(c.size(), 4u);
    EXPECT_EQ(c.gate_count(), 1u);
    EXPECT_EQ(c.two_qubit_gate_count(), 1u);
    EXPECT_THROW(c.add_classical_register("c", 1), std::invalid_argument);
}

TEST(circuit, classical_register_offsets) {
    Circuit c(2);
    EXPECT_EQ(c.add_classical_register("c", 3), 0u);
    EXPECT_EQ(c.add_classical_register("r", 2), 3u);
    EXPECT_EQ(c.num_clbits(), 5u);
    EXPECT_EQ(c.clbit_index("r", 1), 4u);
}
