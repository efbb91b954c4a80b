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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "nucsim/pauli.h"

namespace nucsim {

/// cos^{2m}(H) = Σ_{k=-m}^{m} α_k e^{-2iHk} with α_k = C(2m, m+k) / 4^m,
/// truncated to |k| ≤ m0.
struct LcuExpansion {
    uint32_t m = 0;
    uint32_t m0 = 0;
    /// α_k for k = -m0..m0.
    std::vector<double> coeffs;
    /// Σ_{|k|>m0} α_k.
    double tail_mass = 0;

    double alpha(int k) const;
    /// Σ |α_k| over the truncated window.
    double one_norm() const;
};

/// C(2m, j) for j = 0..2m, exactly.
std::vector<boost::multiprecision::cpp_int> binomial_row(uint32_t two_m);

/// Expansion with the smallest m0 whose tail mass is at most `tail_tol`.
/// Throws std::invalid_argument unless m ≥ 1 and 0 < tail_tol < 1.
LcuExpansion lcu_coefficients(uint32_t m, double tail_tol = 1e-8);

/// Expansion truncated at an explicit radius m0 ≤ m.
LcuExpansion lcu_coefficients_at_radius(uint32_t m, uint32_t m0);

/// The spectrum of H′ left the open interval (−π/2, π/2).
class SpectrumGuardError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// cos^{2m}(H′)ψ / ‖cos^{2m}(H′)ψ‖ via the eigendecomposition of H′.
std::vector<cplx> apply_cos_filter(const PauliHamiltonian &h, uint32_t m, std::span<const cplx> state);

/// Unnormalized Σ_{|k|≤m0} α_k e^{-2iH′k} ψ.
std::vector<cplx> lcu_reference(const PauliHamiltonian &h, const LcuExpansion &expansion,
                                std::span<const cplx> state);

/// ⟨Φ|O²|Φ⟩ / (Σ|α_k|)² for the truncated operator O.
double lcu_success_probability(const PauliHamiltonian &h, const LcuExpansion &expansion,
                               std::span<const cplx> state);

}  // namespace nucsim
