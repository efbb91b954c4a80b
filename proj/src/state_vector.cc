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

#include "nucsim/state_vector.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <string>

#include "nucsim/rng.h"

namespace nucsim {

namespace {

std::atomic<size_t> g_live_bytes{0};
std::atomic<size_t> g_peak_bytes{0};

// Parallel dispatch only pays off once a kernel touches this many index
// groups.
constexpr size_t kParallelThreshold = size_t{1} << 13;
// Reductions sum fixed-size chunks serially, then combine chunk totals by a
// pairwise tree. The chunk size is independent of the thread count.
constexpr size_t kReduceChunk = 4096;

inline cplx cmul(cplx a, cplx b) {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

inline double cnorm(cplx a) {
    return a.real() * a.real() + a.imag() * a.imag();
}

}  // namespace

StateVector::StateVector(uint32_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits >= 40) {
        throw std::length_error("State vector of " + std::to_string(num_qubits) + " qubits is too large.");
    }
    amps_.assign(size_t{1} << num_qubits, cplx{});
    amps_[0] = 1.0;
    track_alloc();
}

StateVector::StateVector(std::vector<cplx> amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.empty() || !std::has_single_bit(amps_.size())) {
        throw std::invalid_argument("State vector length must be a power of two.");
    }
    num_qubits_ = static_cast<uint32_t>(std::countr_zero(amps_.size()));
    track_alloc();
}

StateVector::StateVector(const StateVector &other)
    : num_qubits_(other.num_qubits_), amps_(other.amps_), pool_(other.pool_) {
    track_alloc();
}

StateVector::StateVector(StateVector &&other) noexcept
    : num_qubits_(other.num_qubits_),
      amps_(std::move(other.amps_)),
      tracked_bytes_(other.tracked_bytes_),
      pool_(other.pool_) {
    other.tracked_bytes_ = 0;
    other.amps_.clear();
}

StateVector &StateVector::operator=(const StateVector &other) {
    if (this != &other) {
        track_free();
        num_qubits_ = other.num_qubits_;
        amps_ = other.amps_;
        pool_ = other.pool_;
        track_alloc();
    }
    return *this;
}

StateVector &StateVector::operator=(StateVector &&other) noexcept {
    if (this != &other) {
        track_free();
        num_qubits_ = other.num_qubits_;
        amps_ = std::move(other.amps_);
        tracked_bytes_ = other.tracked_bytes_;
        pool_ = other.pool_;
        other.tracked_bytes_ = 0;
        other.amps_.clear();
    }
    return *this;
}

StateVector::~StateVector() {
    track_free();
}

void StateVector::track_alloc() {
    tracked_bytes_ = amps_.size() * sizeof(cplx);
    size_t now = g_live_bytes.fetch_add(tracked_bytes_) + tracked_bytes_;
    size_t peak = g_peak_bytes.load();
    while (now > peak && !g_peak_bytes.compare_exchange_weak(peak, now)) {
    }
}

void StateVector::track_free() {
    g_live_bytes.fetch_sub(tracked_bytes_);
    tracked_bytes_ = 0;
}

size_t StateVector::live_bytes() {
    return g_live_bytes.load();
}

size_t StateVector::peak_bytes() {
    return g_peak_bytes.load();
}

void StateVector::reset_peak_bytes() {
    g_peak_bytes.store(g_live_bytes.load());
}

template <typename Body>
void StateVector::for_range(size_t n, Body &&body) const {
    if (pool_ != nullptr && pool_->num_threads() > 1 && n >= kParallelThreshold) {
        pool_->parallel_for(n, body);
    } else {
        body(0, n);
    }
}

void StateVector::set_zero_state() {
    std::fill(amps_.begin(), amps_.end(), cplx{});
    amps_[0] = 1.0;
}

void StateVector::set_basis_state(uint64_t index) {
    if (index >= amps_.size()) {
        throw std::out_of_range("Basis index out of range.");
    }
    std::fill(amps_.begin(), amps_.end(), cplx{});
    amps_[index] = 1.0;
}

void StateVector::apply_1q(const Matrix &u, uint32_t q) {
    if (q >= num_qubits_) {
        throw std::out_of_range("Qubit " + std::to_string(q) + " out of range.");
    }
    if (u.rows() != 2 || u.cols() != 2) {
        throw std::invalid_argument("apply_1q expects a 2x2 matrix.");
    }
    const cplx u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    const size_t stride = size_t{1} << q;
    const size_t low = stride - 1;
    cplx *a = amps_.data();
    for_range(amps_.size() / 2, [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; i++) {
            size_t s = ((i >> q) << (q + 1)) | (i & low);
            cplx x0 = a[s];
            cplx x1 = a[s + stride];
            a[s] = cmul(u00, x0) + cmul(u01, x1);
            a[s + stride] = cmul(u10, x0) + cmul(u11, x1);
        }
    });
}

void StateVector::apply_2q(const Matrix &u, uint32_t p, uint32_t q) {
    if (p >= num_qubits_ || q >= num_qubits_) {
        throw std::out_of_range("Qubit index out of range.");
    }
    if (p >= q) {
        throw std::invalid_argument("apply_2q requires p < q.");
    }
    if (u.rows() != 4 || u.cols() != 4) {
        throw std::invalid_argument("apply_2q expects a 4x4 matrix.");
    }
    cplx m[16];
    for (size_t k = 0; k < 16; k++) {
        m[k] = u.data()[k];
    }
    const size_t sp = size_t{1} << p;
    const size_t sq = size_t{1} << q;
    const size_t low_p = sp - 1;
    const uint32_t gap = q - p - 1;
    const size_t low_gap = (size_t{1} << gap) - 1;
    cplx *a = amps_.data();
    for_range(amps_.size() / 4, [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; i++) {
            size_t hi = i >> p;
            size_t s = ((hi >> gap) << (q + 1)) | ((hi & low_gap) << (p + 1)) | (i & low_p);
            const size_t idx[4] = {s, s + sp, s + sq, s + sp + sq};
            const cplx x[4] = {a[idx[0]], a[idx[1]], a[idx[2]], a[idx[3]]};
            for (size_t r = 0; r < 4; r++) {
                const cplx *row = m + 4 * r;
                a[idx[r]] = cmul(row[0], x[0]) + cmul(row[1], x[1]) + cmul(row[2], x[2]) + cmul(row[3], x[3]);
            }
        }
    });
}

void StateVector::apply_multi(const Matrix &u, std::span<const uint32_t> qubits) {
    const size_t k = qubits.size();
    const size_t dim = size_t{1} << k;
    if (u.rows() != dim || u.cols() != dim) {
        throw std::invalid_argument("apply_multi matrix size does not match operand count.");
    }
    for (size_t j = 0; j < k; j++) {
        if (qubits[j] >= num_qubits_) {
            throw std::out_of_range("Qubit index out of range.");
        }
        for (size_t l = 0; l < j; l++) {
            if (qubits[l] == qubits[j]) {
                throw std::invalid_argument("Repeated qubit operand.");
            }
        }
    }
    std::vector<uint32_t> sorted(qubits.begin(), qubits.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<size_t> offsets(dim, 0);
    for (size_t local = 0; local < dim; local++) {
        for (size_t j = 0; j < k; j++) {
            if ((local >> j) & 1) {
                offsets[local] |= size_t{1} << qubits[j];
            }
        }
    }
    const auto m = u.data();
    cplx *a = amps_.data();
    for_range(amps_.size() >> k, [&](size_t begin, size_t end) {
        std::vector<cplx> x(dim);
        for (size_t i = begin; i < end; i++) {
            size_t base = i;
            for (uint32_t bit : sorted) {
                size_t low = base & ((size_t{1} << bit) - 1);
                base = ((base >> bit) << (bit + 1)) | low;
            }
            for (size_t l = 0; l < dim; l++) {
                x[l] = a[base + offsets[l]];
            }
            for (size_t r = 0; r < dim; r++) {
                cplx acc{};
                for (size_t c = 0; c < dim; c++) {
                    acc += cmul(m[r * dim + c], x[c]);
                }
                a[base + offsets[r]] = acc;
            }
        }
    });
}

void StateVector::apply_matrix(const Matrix &u, std::span<const uint32_t> qubits) {
    if (qubits.size() == 1) {
        apply_1q(u, qubits[0]);
    } else if (qubits.size() == 2) {
        if (qubits[0] < qubits[1]) {
            apply_2q(u, qubits[0], qubits[1]);
        } else {
            apply_2q(swap_operands(u), qubits[1], qubits[0]);
        }
    } else {
        apply_multi(u, qubits);
    }
}

double StateVector::probability_zero(uint32_t q) const {
    if (q >= num_qubits_) {
        throw std::out_of_range("Qubit " + std::to_string(q) + " out of range.");
    }
    const size_t half = amps_.size() / 2;
    const size_t chunks = (half + kReduceChunk - 1) / kReduceChunk;
    const size_t low = (size_t{1} << q) - 1;
    std::vector<double> partial(chunks, 0.0);
    const cplx *a = amps_.data();
    auto body = [&](size_t cb, size_t ce) {
        for (size_t c = cb; c < ce; c++) {
            double acc = 0;
            size_t end = std::min(half, (c + 1) * kReduceChunk);
            for (size_t i = c * kReduceChunk; i < end; i++) {
                acc += cnorm(a[((i >> q) << (q + 1)) | (i & low)]);
            }
            partial[c] = acc;
        }
    };
    if (pool_ != nullptr && pool_->num_threads() > 1 && half >= kParallelThreshold) {
        pool_->parallel_for(chunks, body);
    } else {
        body(0, chunks);
    }
    return pairwise_sum(std::move(partial));
}

double StateVector::norm_squared() const {
    const size_t chunks = (amps_.size() + kReduceChunk - 1) / kReduceChunk;
    std::vector<double> partial(chunks, 0.0);
    for (size_t c = 0; c < chunks; c++) {
        double acc = 0;
        size_t end = std::min(amps_.size(), (c + 1) * kReduceChunk);
        for (size_t i = c * kReduceChunk; i < end; i++) {
            acc += cnorm(amps_[i]);
        }
        partial[c] = acc;
    }
    return pairwise_sum(std::move(partial));
}

double StateVector::measure_project(uint32_t q, int outcome) {
    if (outcome != 0 && outcome != 1) {
        throw std::invalid_argument("Measurement outcome must be 0 or 1.");
    }
    double p0 = probability_zero(q);
    double p = outcome == 0 ? p0 : norm_squared() - p0;
    if (!(p >= kProjectionThreshold)) {
        throw ProjectionError("Cannot project qubit " + std::to_string(q) + " onto |" + std::to_string(outcome) +
                              "⟩: branch probability " + std::to_string(p) + " is below threshold.");
    }
    const double scale = 1.0 / std::sqrt(p);
    const size_t bit = size_t{1} << q;
    const size_t keep = outcome == 0 ? 0 : bit;
    cplx *a = amps_.data();
    for_range(amps_.size(), [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; i++) {
            a[i] = (i & bit) == keep ? a[i] * scale : cplx{};
        }
    });
    return p;
}

std::vector<uint64_t> StateVector::sample(size_t shots, uint64_t seed) const {
    std::vector<double> cumulative(amps_.size());
    double acc = 0;
    for (size_t i = 0; i < amps_.size(); i++) {
        acc += cnorm(amps_[i]);
        cumulative[i] = acc;
    }
    Xoshiro256 rng(seed);
    std::vector<uint64_t> out(shots);
    for (size_t s = 0; s < shots; s++) {
        double target = rng.uniform() * acc;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
        size_t idx = static_cast<size_t>(it - cumulative.begin());
        out[s] = std::min(idx, amps_.size() - 1);
    }
    return out;
}

}  // namespace nucsim
