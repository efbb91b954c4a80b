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
#include <map>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "nucsim/eigensolver.h"
#include "nucsim/pauli.h"

namespace nucsim {

/// Jordan-Wigner creation operator a†_i = ½ Z_0…Z_{i-1} (X_i − iY_i).
PauliHamiltonian jw_creation(uint32_t i, uint32_t num_orbitals);
/// Jordan-Wigner annihilation operator a_i = ½ Z_0…Z_{i-1} (X_i + iY_i).
PauliHamiltonian jw_annihilation(uint32_t i, uint32_t num_orbitals);

/// One- and two-body matrix elements over `num_orbitals` single-particle
/// states of one species.
struct SecondQuantizedInput {
    uint32_t num_orbitals = 0;
    std::map<std::array<uint32_t, 2>, double> t;
    std::map<std::array<uint32_t, 4>, double> v;

    /// Adds the symmetric partner t_ji for every t_ij and the antisymmetric
    /// partners (V_jikl = V_ijlk = −V_ijkl, V_jilk = V_ijkl) for every V_ijkl.
    /// Throws std::invalid_argument when a supplied partner disagrees, when
    /// V_iikl or V_ijkk is nonzero, or when an index is out of range.
    void complete_symmetries(double tolerance = 1e-12);
};

/// H = Σ t_ij a†_i a_j + ½ Σ V_ijkl a†_i a†_j a_l a_k, expanded into Pauli
/// strings and simplified. Throws std::invalid_argument when the result is
/// not Hermitian.
PauliHamiltonian build_hamiltonian(const SecondQuantizedInput &input);

/// Thrown when a spectrum has no second distinct eigenvalue.
class DegenerateSpectrumError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Distinctness tolerance between eigenvalues when locating the gap.
inline constexpr double kGapTolerance = 1e-9;

struct GroundState {
    double energy = 0;
    std::vector<cplx> vector;
    double gap = 0;
    /// All eigenvalues, ascending.
    std::vector<double> spectrum;
};

/// Full eigendecomposition of dense(h). Throws std::invalid_argument if `h`
/// has complex coefficients.
EigenDecomposition diagonalize(const PauliHamiltonian &h);

/// Lowest eigenpair and gap to the next distinct eigenvalue. Throws
/// DegenerateSpectrumError when every eigenvalue equals E0.
GroundState ground_state(const PauliHamiltonian &h);

/// (H − e0·I) / scale. Throws std::invalid_argument when scale ≤ 0.
PauliHamiltonian shift_rescale(const PauliHamiltonian &h, double e0, double scale);

class HamiltonianParseError : public std::runtime_error {
   public:
    HamiltonianParseError(size_t line, const std::string &message);
    size_t line() const { return line_; }

   private:
    size_t line_;
};

/// Pauli form: one term per line, `coefficient letters`, letter k on
/// qubit k. All strings must share one length.
PauliHamiltonian parse_pauli_text(std::string_view text);

/// Second-quantized form: `t i j value` and `v i j k l value` records, plus
/// an optional `orbitals N` record. Partners are completed via
/// complete_symmetries().
SecondQuantizedInput parse_second_quantized_text(std::string_view text);

/// Detects the format from the first record and returns the Pauli
/// Hamiltonian (building it from matrix elements when needed).
PauliHamiltonian parse_hamiltonian_text(std::string_view text);

}  // namespace nucsim
