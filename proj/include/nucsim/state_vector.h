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
#include <stdexcept>
#include <vector>

#include "nucsim/linalg.h"
#include "nucsim/parallel.h"

namespace nucsim {

/// Raised when a measurement branch has (numerically) zero probability.
class ProjectionError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Probabilities below this are treated as zero by projections and by the
/// mid-circuit measurement assertion.
inline constexpr double kProjectionThreshold = 1e-12;

/// 2^n double-precision amplitudes; qubit q is bit q of the basis index.
///
/// Gate kernels walk the index formulas directly: a 1-qubit gate on q
/// updates the pair (s, s + 2^q) with s = ⌊i/2^q⌋·2^{q+1} + (i mod 2^q) for
/// i in [0, 2^{n-1}); a 2-qubit gate on p < q updates the quadruple
/// (s, s+2^p, s+2^q, s+2^p+2^q) with s built the same way from both strides.
/// Distinct i touch disjoint amplitudes, so the i-range is split across the
/// attached WorkerPool without synchronization.
class StateVector {
   public:
    /// |0…0⟩ on `num_qubits` qubits.
    explicit StateVector(uint32_t num_qubits);
    /// Takes ownership of `amplitudes`; the length must be a power of two.
    explicit StateVector(std::vector<cplx> amplitudes);

    StateVector(const StateVector &other);
    StateVector(StateVector &&other) noexcept;
    StateVector &operator=(const StateVector &other);
    StateVector &operator=(StateVector &&other) noexcept;
    ~StateVector();

    uint32_t num_qubits() const { return num_qubits_; }
    size_t size() const { return amps_.size(); }
    std::span<const cplx> amplitudes() const { return amps_; }
    std::span<cplx> amplitudes() { return amps_; }
    const cplx &operator[](size_t k) const { return amps_[k]; }

    /// Kernels fan out over `pool` when the state is large enough; nullptr
    /// runs serially. The pool must outlive its use by this state.
    void attach_pool(WorkerPool *pool) { pool_ = pool; }
    WorkerPool *pool() const { return pool_; }

    /// Resets to |0…0⟩ without reallocating.
    void set_zero_state();
    /// Resets to computational basis state |index⟩.
    void set_basis_state(uint64_t index);

    /// `u` is any 2×2 matrix (unitarity is not required).
    void apply_1q(const Matrix &u, uint32_t q);
    /// `u` is any 4×4 matrix on (p, q) with p < q; operand p is the low bit.
    void apply_2q(const Matrix &u, uint32_t p, uint32_t q);
    /// Dense 2^k×2^k matrix on distinct `qubits` (operand j = matrix bit j).
    void apply_multi(const Matrix &u, std::span<const uint32_t> qubits);
    /// Dispatches on operand count; unordered 2-qubit operands are
    /// normalized by conjugating `u` with SWAP.
    void apply_matrix(const Matrix &u, std::span<const uint32_t> qubits);

    /// Σ over basis states with bit q = 0 of |amp|², by fixed pairwise tree.
    double probability_zero(uint32_t q) const;
    double norm_squared() const;

    /// Projects qubit q onto `outcome`, renormalizes, and returns the branch
    /// probability. Throws ProjectionError when it is below
    /// kProjectionThreshold.
    double measure_project(uint32_t q, int outcome);

    /// Draws `shots` basis indices from |amp|² by inverting the cumulative
    /// distribution with binary search. Deterministic given `seed`.
    std::vector<uint64_t> sample(size_t shots, uint64_t seed) const;

    /// Amplitude-buffer accounting across all live StateVectors.
    static size_t live_bytes();
    static size_t peak_bytes();
    static void reset_peak_bytes();

   private:
    void track_alloc();
    void track_free();
    template <typename Body>
    void for_range(size_t n, Body &&body) const;

    uint32_t num_qubits_ = 0;
    std::vector<cplx> amps_;
    size_t tracked_bytes_ = 0;
    WorkerPool *pool_ = nullptr;
};

}  // namespace nucsim
