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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nucsim/linalg.h"

namespace nucsim {

/// Tensor product of single-qubit Paulis on up to 64 qubits.
///
/// Stored as bit masks: X → x bit, Z → z bit, Y → both. Letter q of the
/// string acts on qubit q (so the leftmost letter is qubit 0).
class PauliString {
   public:
    static constexpr uint32_t kMaxQubits = 64;

    PauliString() = default;
    /// Identity on `num_qubits` qubits.
    explicit PauliString(uint32_t num_qubits);
    PauliString(uint32_t num_qubits, uint64_t x_mask, uint64_t z_mask);

    /// Parses letters from {I, X, Y, Z}; letter k acts on qubit k.
    static PauliString from_letters(std::string_view letters);

    uint32_t num_qubits() const { return num_qubits_; }
    uint64_t x_mask() const { return x_; }
    uint64_t z_mask() const { return z_; }

    char letter(uint32_t q) const;
    void set_letter(uint32_t q, char letter);
    std::string letters() const;

    bool is_identity() const { return x_ == 0 && z_ == 0; }
    /// Qubits with a non-identity letter, ascending.
    std::vector<uint32_t> support() const;
    /// Number of Y letters.
    int num_y() const;

    /// P|index⟩ = phase·|index ^ x_mask⟩. Returns the phase.
    cplx basis_phase(uint64_t index) const;

    /// Lexicographic by letters, qubit 0 first, with I < X < Y < Z.
    bool operator<(const PauliString &other) const;
    bool operator==(const PauliString &other) const = default;

   private:
    uint32_t num_qubits_ = 0;
    uint64_t x_ = 0;
    uint64_t z_ = 0;
};

/// Product P·Q of two strings on the same qubit count, returned as
/// (phase, string) with phase in {±1, ±i}.
std::pair<cplx, PauliString> multiply(const PauliString &p, const PauliString &q);

/// Dense 2^n × 2^n matrix of a Pauli string.
Matrix dense(const PauliString &p);

struct PauliTerm {
    cplx coefficient;
    PauliString string;

    bool operator==(const PauliTerm &other) const = default;
};

/// Σ_j h_j P_j over a fixed number of qubits.
class PauliHamiltonian {
   public:
    PauliHamiltonian() = default;
    explicit PauliHamiltonian(uint32_t num_qubits);

    uint32_t num_qubits() const { return num_qubits_; }
    const std::vector<PauliTerm> &terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    /// Appends a term without combining duplicates.
    void add_term(cplx coefficient, const PauliString &string);
    void add_term(cplx coefficient, std::string_view letters);

    /// Sorts terms, merges duplicate strings and drops coefficients with
    /// magnitude below `threshold`.
    PauliHamiltonian &simplify(double threshold = 1e-14);

    /// True when every coefficient has |imag| ≤ `tolerance`. Only meaningful
    /// after simplify().
    bool is_hermitian(double tolerance = 1e-10) const;
    /// Largest |imag| over all coefficients.
    double max_imag() const;
    /// Drops imaginary parts of all coefficients.
    PauliHamiltonian &make_real();

    /// Coefficient of the identity string, summed over matching terms.
    cplx identity_coefficient() const;
    /// Σ |h_j|, an upper bound on the spectral norm.
    double one_norm() const;

    PauliHamiltonian operator+(const PauliHamiltonian &rhs) const;
    PauliHamiltonian operator-(const PauliHamiltonian &rhs) const;
    /// Product expanded term by term and simplified.
    PauliHamiltonian operator*(const PauliHamiltonian &rhs) const;
    PauliHamiltonian operator*(cplx scalar) const;
    PauliHamiltonian adjoint() const;

    /// H·v without materializing H.
    std::vector<cplx> apply(std::span<const cplx> v) const;

    bool operator==(const PauliHamiltonian &other) const = default;

   private:
    void check_width(const PauliString &string) const;

    uint32_t num_qubits_ = 0;
    std::vector<PauliTerm> terms_;
};

/// Largest qubit count accepted by dense().
inline constexpr uint32_t kMaxDenseQubits = 14;

/// Dense matrix Σ h_j P_j. Throws std::length_error above kMaxDenseQubits.
Matrix dense(const PauliHamiltonian &h);

}  // namespace nucsim
