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

#include <vector>

#include "nucsim/linalg.h"

namespace nucsim {

struct EigenDecomposition {
    /// Ascending.
    std::vector<double> values;
    /// Column k is the unit eigenvector for values[k].
    Matrix vectors;
};

/// Full eigendecomposition of a Hermitian matrix.
///
/// Method: Householder reduction of the complex Hermitian input to a real
/// symmetric tridiagonal matrix (the complex off-diagonal phases are
/// absorbed into a diagonal unitary), followed by the implicit-shift QL
/// iteration on the tridiagonal form with eigenvector accumulation. Cost is
/// O(n^3); only the lower triangle of the input is read.
///
/// Throws std::invalid_argument if the input is not square, and
/// std::runtime_error if the QL iteration fails to converge.
EigenDecomposition hermitian_eigensolve(const Matrix &a);

}  // namespace nucsim
