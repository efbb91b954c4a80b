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

#include "nucsim/lcu.h"

#include <cmath>
#include <numbers>
#include <string>

#include "nucsim/hamiltonian.h"

namespace nucsim {

namespace {

using boost::multiprecision::cpp_int;

// num / 2^exponent as a double, without overflowing for large operands.
double ratio_to_double(const cpp_int &num, uint32_t exponent) {
    if (num == 0) {
        return 0.0;
    }
    long shift = static_cast<long>(boost::multiprecision::msb(num)) - 62;
    if (shift < 0) {
        shift = 0;
    }
    cpp_int top = num >> shift;
    return std::ldexp(top.convert_to<double>(), static_cast<int>(shift) - static_cast<int>(exponent));
}

LcuExpansion expansion_from_row(uint32_t m, uint32_t m0, const std::vector<cpp_int> &row) {
    LcuExpansion e;
    e.m = m;
    e.m0 = m0;
    cpp_int tail = 0;
    for (uint32_t j = 0; j <= 2 * m; j++) {
        long k = static_cast<long>(j) - static_cast<long>(m);
        if (std::labs(k) > static_cast<long>(m0)) {
            tail += row[j];
        } else {
            e.coeffs.push_back(ratio_to_double(row[j], 2 * m));
        }
    }
    e.tail_mass = ratio_to_double(tail, 2 * m);
    return e;
}

struct Spectrum {
    EigenDecomposition eig;
    std::vector<cplx> coords;  // ⟨α|ψ⟩
};

Spectrum guarded_spectrum(const PauliHamiltonian &h, std::span<const cplx> state) {
    if (state.size() != (size_t{1} << h.num_qubits())) {
        throw std::invalid_argument("State length does not match the Hamiltonian width.");
    }
    Spectrum s{diagonalize(h), {}};
    const double limit = std::numbers::pi / 2;
    if (!(s.eig.values.front() > -limit) || !(s.eig.values.back() < limit)) {
        throw SpectrumGuardError("Spectrum [" + std::to_string(s.eig.values.front()) + ", " +
                                 std::to_string(s.eig.values.back()) + "] leaves (-pi/2, pi/2).");
    }
    const size_t dim = state.size();
    s.coords.resize(dim);
    for (size_t a = 0; a < dim; a++) {
        cplx c = 0;
        for (size_t r = 0; r < dim; r++) {
            c += std::conj(s.eig.vectors(r, a)) * state[r];
        }
        s.coords[a] = c;
    }
    return s;
}

// Σ_a f(E_a)·⟨α|ψ⟩·|α⟩.
template <typename Fn>
std::vector<cplx> apply_function(const Spectrum &s, Fn &&f) {
    const size_t dim = s.coords.size();
    std::vector<cplx> out(dim);
    for (size_t a = 0; a < dim; a++) {
        cplx w = f(s.eig.values[a]) * s.coords[a];
        for (size_t r = 0; r < dim; r++) {
            out[r] += w * s.eig.vectors(r, a);
        }
    }
    return out;
}

double lcu_eigenvalue(const LcuExpansion &e, double energy) {
    // Σ α_k e^{-2iEk} is real for symmetric α.
    double v = 0;
    for (size_t j = 0; j < e.coeffs.size(); j++) {
        double k = static_cast<double>(j) - static_cast<double>(e.m0);
        v += e.coeffs[j] * std::cos(2 * energy * k);
    }
    return v;
}

}  // namespace

double LcuExpansion::alpha(int k) const {
    if (std::abs(k) > static_cast<int>(m0)) {
        return 0.0;
    }
    return coeffs[static_cast<size_t>(k + static_cast<int>(m0))];
}

double LcuExpansion::one_norm() const {
    double s = 0;
    for (double c : coeffs) {
        s += std::abs(c);
    }
    return s;
}

std::vector<cpp_int> binomial_row(uint32_t two_m) {
    std::vector<cpp_int> row(two_m + 1);
    row[0] = 1;
    for (uint32_t j = 1; j <= two_m; j++) {
        row[j] = row[j - 1] * (two_m - j + 1) / j;
    }
    return row;
}

LcuExpansion lcu_coefficients(uint32_t m, double tail_tol) {
    if (m < 1) {
        throw std::invalid_argument("lcu_coefficients requires m >= 1.");
    }
    if (!(tail_tol > 0 && tail_tol < 1)) {
        throw std::invalid_argument("tail_tol must lie in (0, 1).");
    }
    auto row = binomial_row(2 * m);
    // Tail mass at radius r is the sum of the 2(m - r) outermost entries.
    cpp_int tail = 0;
    uint32_t m0 = m;
    for (uint32_t r = m; r-- > 0;) {
        cpp_int next = tail + row[m - r - 1] + row[m + r + 1];
        if (ratio_to_double(next, 2 * m) > tail_tol) {
            break;
        }
        tail = next;
        m0 = r;
    }
    return expansion_from_row(m, m0, row);
}

LcuExpansion lcu_coefficients_at_radius(uint32_t m, uint32_t m0) {
    if (m0 > m) {
        throw std::invalid_argument("Truncation radius exceeds m.");
    }
    return expansion_from_row(m, m0, binomial_row(2 * m));
}

std::vector<cplx> apply_cos_filter(const PauliHamiltonian &h, uint32_t m, std::span<const cplx> state) {
    Spectrum s = guarded_spectrum(h, state);
    auto out = apply_function(s, [m](double e) { return std::pow(std::cos(e), 2.0 * m); });
    double norm = norm_squared(out);
    if (!(norm > 0)) {
        throw std::runtime_error("The cos filter annihilates the state.");
    }
    for (auto &a : out) {
        a /= std::sqrt(norm);
    }
    return out;
}

std::vector<cplx> lcu_reference(const PauliHamiltonian &h, const LcuExpansion &expansion,
                                std::span<const cplx> state) {
    Spectrum s = guarded_spectrum(h, state);
    return apply_function(s, [&](double e) { return lcu_eigenvalue(expansion, e); });
}

double lcu_success_probability(const PauliHamiltonian &h, const LcuExpansion &expansion,
                               std::span<const cplx> state) {
    Spectrum s = guarded_spectrum(h, state);
    double eta2 = 0;
    for (size_t a = 0; a < s.coords.size(); a++) {
        double o = lcu_eigenvalue(expansion, s.eig.values[a]);
        eta2 += o * o * std::norm(s.coords[a]);
    }
    double alpha = expansion.one_norm();
    return eta2 / (alpha * alpha);
}

}  // namespace nucsim
