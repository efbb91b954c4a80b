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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace nucsim {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Small (gate payloads) and medium (dense
/// Hamiltonian oracles, up to a few thousand rows) sizes only.
class Matrix {
   public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols);
    Matrix(size_t rows, size_t cols, std::vector<cplx> data);

    static Matrix identity(size_t n);
    static Matrix square(size_t n, std::initializer_list<cplx> values);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    cplx &operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const cplx &operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    std::span<cplx> data() { return data_; }
    std::span<const cplx> data() const { return data_; }

    Matrix adjoint() const;
    Matrix operator*(const Matrix &rhs) const;
    Matrix operator+(const Matrix &rhs) const;
    Matrix operator-(const Matrix &rhs) const;
    Matrix operator*(cplx scalar) const;
    Matrix &operator+=(const Matrix &rhs);

    /// Matrix-vector product.
    std::vector<cplx> apply(std::span<const cplx> v) const;

    bool operator==(const Matrix &rhs) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<cplx> data_;
};

/// Kronecker product a ⊗ b (b occupies the low-order index bits).
Matrix kron(const Matrix &a, const Matrix &b);

/// max_ij |a_ij - b_ij|. Shapes must agree.
double max_abs_diff(const Matrix &a, const Matrix &b);

/// max_ij |(U†U - I)_ij|.
double unitarity_error(const Matrix &u);

/// max_ij |A - A†|_ij.
double hermiticity_error(const Matrix &a);

/// <a|b> with conjugation on the left argument.
cplx inner_product(std::span<const cplx> a, std::span<const cplx> b);

double norm_squared(std::span<const cplx> v);

/// |<a|b>| for normalized inputs; the global-phase-insensitive overlap.
double overlap_magnitude(std::span<const cplx> a, std::span<const cplx> b);

/// Reindexes a 4×4 two-qubit matrix so its two operand slots are exchanged,
/// i.e. returns SWAP·U·SWAP.
Matrix swap_operands(const Matrix &u);

}  // namespace nucsim
