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

#include "nucsim/pauli.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace nucsim {

namespace {

constexpr cplx kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

uint64_t width_mask(uint32_t n) {
    return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

// Letter rank used for ordering: I=0, X=1, Y=2, Z=3.
int rank(bool x, bool z) {
    if (x) {
        return z ? 2 : 1;
    }
    return z ? 3 : 0;
}

}  // namespace

PauliString::PauliString(uint32_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits > kMaxQubits) {
        throw std::invalid_argument("Pauli strings support at most 64 qubits.");
    }
}

PauliString::PauliString(uint32_t num_qubits, uint64_t x_mask, uint64_t z_mask)
    : num_qubits_(num_qubits), x_(x_mask), z_(z_mask) {
    if (num_qubits > kMaxQubits) {
        throw std::invalid_argument("Pauli strings support at most 64 qubits.");
    }
    if (((x_mask | z_mask) & ~width_mask(num_qubits)) != 0) {
        throw std::invalid_argument("Pauli mask has bits beyond the qubit count.");
    }
}

PauliString PauliString::from_letters(std::string_view letters) {
    PauliString p(static_cast<uint32_t>(letters.size()));
    for (size_t q = 0; q < letters.size(); q++) {
        p.set_letter(static_cast<uint32_t>(q), letters[q]);
    }
    return p;
}

char PauliString::letter(uint32_t q) const {
    bool x = (x_ >> q) & 1;
    bool z = (z_ >> q) & 1;
    return "IXYZ"[rank(x, z)];
}

void PauliString::set_letter(uint32_t q, char letter) {
    if (q >= num_qubits_) {
        throw std::out_of_range("Pauli letter index out of range.");
    }
    uint64_t bit = uint64_t{1} << q;
    x_ &= ~bit;
    z_ &= ~bit;
    switch (letter) {
        case 'I':
            break;
        case 'X':
            x_ |= bit;
            break;
        case 'Y':
            x_ |= bit;
            z_ |= bit;
            break;
        case 'Z':
            z_ |= bit;
            break;
        default:
            throw std::invalid_argument(std::string("Unknown Pauli letter '") + letter + "'.");
    }
}

std::string PauliString::letters() const {
    std::string out(num_qubits_, 'I');
    for (uint32_t q = 0; q < num_qubits_; q++) {
        out[q] = letter(q);
    }
    return out;
}

std::vector<uint32_t> PauliString::support() const {
    std::vector<uint32_t> out;
    uint64_t m = x_ | z_;
    while (m != 0) {
        out.push_back(static_cast<uint32_t>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

int PauliString::num_y() const {
    return std::popcount(x_ & z_);
}

cplx PauliString::basis_phase(uint64_t index) const {
    int power = num_y() + 2 * (std::popcount(index & z_) & 1);
    return kIPowers[power & 3];
}

bool PauliString::operator<(const PauliString &other) const {
    if (num_qubits_ != other.num_qubits_) {
        return num_qubits_ < other.num_qubits_;
    }
    uint64_t diff = (x_ ^ other.x_) | (z_ ^ other.z_);
    if (diff == 0) {
        return false;
    }
    uint32_t q = static_cast<uint32_t>(std::countr_zero(diff));
    return rank((x_ >> q) & 1, (z_ >> q) & 1) < rank((other.x_ >> q) & 1, (other.z_ >> q) & 1);
}

std::pair<cplx, PauliString> multiply(const PauliString &p, const PauliString &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument("Pauli product of strings with different qubit counts.");
    }
    // Write each letter as i^{xz} X^x Z^z. Then P·Q picks up (-1) from moving
    // Z^{z_p} past X^{x_q}, and the result is renormalized to the same form.
    int power = p.num_y() + q.num_y();
    power += 2 * (std::popcount(p.z_mask() & q.x_mask()) & 1);
    uint64_t x = p.x_mask() ^ q.x_mask();
    uint64_t z = p.z_mask() ^ q.z_mask();
    power -= std::popcount(x & z);
    return {kIPowers[((power % 4) + 4) % 4], PauliString(p.num_qubits(), x, z)};
}

Matrix dense(const PauliString &p) {
    if (p.num_qubits() > kMaxDenseQubits) {
        throw std::length_error("Dense Pauli matrix above " + std::to_string(kMaxDenseQubits) + " qubits.");
    }
    size_t dim = size_t{1} << p.num_qubits();
    Matrix out(dim, dim);
    for (size_t col = 0; col < dim; col++) {
        out(col ^ p.x_mask(), col) = p.basis_phase(col);
    }
    return out;
}

PauliHamiltonian::PauliHamiltonian(uint32_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits > PauliString::kMaxQubits) {
        throw std::invalid_argument("Pauli Hamiltonians support at most 64 qubits.");
    }
}

void PauliHamiltonian::check_width(const PauliString &string) const {
    if (string.num_qubits() != num_qubits_) {
        throw std::invalid_argument("Pauli string on " + std::to_string(string.num_qubits()) +
                                    " qubits added to a Hamiltonian on " + std::to_string(num_qubits_) + ".");
    }
}

void PauliHamiltonian::add_term(cplx coefficient, const PauliString &string) {
    check_width(string);
    terms_.push_back({coefficient, string});
}

void PauliHamiltonian::add_term(cplx coefficient, std::string_view letters) {
    add_term(coefficient, PauliString::from_letters(letters));
}

PauliHamiltonian &PauliHamiltonian::simplify(double threshold) {
    std::stable_sort(terms_.begin(), terms_.end(),
                     [](const PauliTerm &a, const PauliTerm &b) { return a.string < b.string; });
    std::vector<PauliTerm> merged;
    merged.reserve(terms_.size());
    for (const auto &t : terms_) {
        if (!merged.empty() && merged.back().string == t.string) {
            merged.back().coefficient += t.coefficient;
        } else {
            merged.push_back(t);
        }
    }
    std::erase_if(merged, [&](const PauliTerm &t) { return std::abs(t.coefficient) < threshold; });
    terms_ = std::move(merged);
    return *this;
}

double PauliHamiltonian::max_imag() const {
    double m = 0;
    for (const auto &t : terms_) {
        m = std::max(m, std::abs(t.coefficient.imag()));
    }
    return m;
}

bool PauliHamiltonian::is_hermitian(double tolerance) const {
    return max_imag() <= tolerance;
}

PauliHamiltonian &PauliHamiltonian::make_real() {
    for (auto &t : terms_) {
        t.coefficient = t.coefficient.real();
    }
    return *this;
}

cplx PauliHamiltonian::identity_coefficient() const {
    cplx c = 0;
    for (const auto &t : terms_) {
        if (t.string.is_identity()) {
            c += t.coefficient;
        }
    }
    return c;
}

double PauliHamiltonian::one_norm() const {
    double s = 0;
    for (const auto &t : terms_) {
        s += std::abs(t.coefficient);
    }
    return s;
}

PauliHamiltonian PauliHamiltonian::operator+(const PauliHamiltonian &rhs) const {
    if (rhs.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("Sum of Hamiltonians on different qubit counts.");
    }
    PauliHamiltonian out = *this;
    out.terms_.insert(out.terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
    out.simplify();
    return out;
}

PauliHamiltonian PauliHamiltonian::operator-(const PauliHamiltonian &rhs) const {
    return *this + rhs * cplx{-1.0};
}

PauliHamiltonian PauliHamiltonian::operator*(const PauliHamiltonian &rhs) const {
    if (rhs.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("Product of Hamiltonians on different qubit counts.");
    }
    PauliHamiltonian out(num_qubits_);
    out.terms_.reserve(terms_.size() * rhs.terms_.size());
    for (const auto &a : terms_) {
        for (const auto &b : rhs.terms_) {
            auto [phase, s] = multiply(a.string, b.string);
            out.terms_.push_back({phase * a.coefficient * b.coefficient, s});
        }
    }
    out.simplify();
    return out;
}

PauliHamiltonian PauliHamiltonian::operator*(cplx scalar) const {
    PauliHamiltonian out = *this;
    for (auto &t : out.terms_) {
        t.coefficient *= scalar;
    }
    return out;
}

PauliHamiltonian PauliHamiltonian::adjoint() const {
    PauliHamiltonian out = *this;
    for (auto &t : out.terms_) {
        t.coefficient = std::conj(t.coefficient);
    }
    return out;
}

std::vector<cplx> PauliHamiltonian::apply(std::span<const cplx> v) const {
    if (v.size() != (size_t{1} << num_qubits_)) {
        throw std::invalid_argument("Vector length does not match the Hamiltonian width.");
    }
    std::vector<cplx> out(v.size());
    for (const auto &t : terms_) {
        const uint64_t x = t.string.x_mask();
        for (size_t i = 0; i < v.size(); i++) {
            out[i ^ x] += t.coefficient * t.string.basis_phase(i) * v[i];
        }
    }
    return out;
}

Matrix dense(const PauliHamiltonian &h) {
    if (h.num_qubits() > kMaxDenseQubits) {
        throw std::length_error("Dense Hamiltonian above " + std::to_string(kMaxDenseQubits) + " qubits.");
    }
    size_t dim = size_t{1} << h.num_qubits();
    Matrix out(dim, dim);
    for (const auto &t : h.terms()) {
        for (size_t col = 0; col < dim; col++) {
            out(col ^ t.string.x_mask(), col) += t.coefficient * t.string.basis_phase(col);
        }
    }
    return out;
}

}  // namespace nucsim
