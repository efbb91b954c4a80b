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

#include "nucsim/linalg.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nucsim {

Matrix::Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(size_t rows, size_t cols, std::vector<cplx> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) {
        throw std::invalid_argument("Matrix data size does not match its shape.");
    }
}

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m(k, k) = 1.0;
    }
    return m;
}

Matrix Matrix::square(size_t n, std::initializer_list<cplx> values) {
    return Matrix(n, n, std::vector<cplx>(values));
}

Matrix Matrix::adjoint() const {
    Matrix out(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Matrix Matrix::operator*(const Matrix &rhs) const {
    if (cols_ != rhs.rows_) {
        throw std::invalid_argument("Matrix product shape mismatch.");
    }
    Matrix out(rows_, rhs.cols_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t k = 0; k < cols_; k++) {
            cplx a = (*this)(r, k);
            if (a == cplx{}) {
                continue;
            }
            const cplx *src = &rhs.data_[k * rhs.cols_];
            cplx *dst = &out.data_[r * rhs.cols_];
            for (size_t c = 0; c < rhs.cols_; c++) {
                dst[c] += a * src[c];
            }
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix &rhs) const {
    Matrix out = *this;
    out += rhs;
    return out;
}

Matrix Matrix::operator-(const Matrix &rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw std::invalid_argument("Matrix difference shape mismatch.");
    }
    Matrix out = *this;
    for (size_t k = 0; k < data_.size(); k++) {
        out.data_[k] -= rhs.data_[k];
    }
    return out;
}

Matrix Matrix::operator*(cplx scalar) const {
    Matrix out = *this;
    for (auto &x : out.data_) {
        x *= scalar;
    }
    return out;
}

Matrix &Matrix::operator+=(const Matrix &rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw std::invalid_argument("Matrix sum shape mismatch.");
    }
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] += rhs.data_[k];
    }
    return *this;
}

std::vector<cplx> Matrix::apply(std::span<const cplx> v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("Matrix-vector shape mismatch.");
    }
    std::vector<cplx> out(rows_);
    for (size_t r = 0; r < rows_; r++) {
        cplx acc{};
        const cplx *row = &data_[r * cols_];
        for (size_t c = 0; c < cols_; c++) {
            acc += row[c] * v[c];
        }
        out[r] = acc;
    }
    return out;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t ar = 0; ar < a.rows(); ar++) {
        for (size_t ac = 0; ac < a.cols(); ac++) {
            cplx x = a(ar, ac);
            for (size_t br = 0; br < b.rows(); br++) {
                for (size_t bc = 0; bc < b.cols(); bc++) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = x * b(br, bc);
                }
            }
        }
    }
    return out;
}

double max_abs_diff(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff shape mismatch.");
    }
    double worst = 0;
    auto da = a.data();
    auto db = b.data();
    for (size_t k = 0; k < da.size(); k++) {
        worst = std::max(worst, std::abs(da[k] - db[k]));
    }
    return worst;
}

double unitarity_error(const Matrix &u) {
    return max_abs_diff(u.adjoint() * u, Matrix::identity(u.cols()));
}

double hermiticity_error(const Matrix &a) {
    return max_abs_diff(a, a.adjoint());
}

cplx inner_product(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("inner_product size mismatch.");
    }
    cplx acc{};
    for (size_t k = 0; k < a.size(); k++) {
        acc += std::conj(a[k]) * b[k];
    }
    return acc;
}

double norm_squared(std::span<const cplx> v) {
    double acc = 0;
    for (const auto &x : v) {
        acc += std::norm(x);
    }
    return acc;
}

double overlap_magnitude(std::span<const cplx> a, std::span<const cplx> b) {
    return std::abs(inner_product(a, b)) / std::sqrt(norm_squared(a) * norm_squared(b));
}

Matrix swap_operands(const Matrix &u) {
    if (u.rows() != 4 || u.cols() != 4) {
        throw std::invalid_argument("swap_operands expects a 4x4 matrix.");
    }
    static constexpr size_t perm[4] = {0, 2, 1, 3};
    Matrix out(4, 4);
    for (size_t r = 0; r < 4; r++) {
        for (size_t c = 0; c < 4; c++) {
            out(r, c) = u(perm[r], perm[c]);
        }
    }
    return out;
}

}  // namespace nucsim
