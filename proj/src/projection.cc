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

#include "nucsim/projection.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "nucsim/hamiltonian.h"

namespace nucsim {

namespace {

// Appends exp(-i·theta·P⊗Y_a).
void append_rotation(Circuit &c, const PauliString &p, double theta, uint32_t ancilla) {
    if (p.is_identity()) {
        c.gate(GateType::RY, {ancilla}, {2 * theta});
        return;
    }
    auto support = p.support();
    for (uint32_t q : support) {
        char letter = p.letter(q);
        if (letter == 'X') {
            c.gate(GateType::H, {q});
        } else if (letter == 'Y') {
            c.gate(GateType::SDG, {q});
            c.gate(GateType::H, {q});
        }
    }
    c.gate(GateType::SDG, {ancilla});
    c.gate(GateType::H, {ancilla});
    for (uint32_t q : support) {
        c.gate(GateType::CX, {q, ancilla});
    }
    c.gate(GateType::RZ, {ancilla}, {2 * theta});
    for (auto it = support.rbegin(); it != support.rend(); ++it) {
        c.gate(GateType::CX, {*it, ancilla});
    }
    c.gate(GateType::H, {ancilla});
    c.gate(GateType::S, {ancilla});
    for (uint32_t q : support) {
        char letter = p.letter(q);
        if (letter == 'X') {
            c.gate(GateType::H, {q});
        } else if (letter == 'Y') {
            c.gate(GateType::H, {q});
            c.gate(GateType::S, {q});
        }
    }
}

}  // namespace

void FilterSchedule::validate() const {
    for (size_t k = 0; k < steps.size(); k++) {
        if (!(steps[k].t > 0) || !std::isfinite(steps[k].t) || !std::isfinite(steps[k].delta)) {
            throw std::invalid_argument("Schedule step " + std::to_string(k + 1) +
                                        " needs a finite time t > 0 and a finite phase.");
        }
    }
}

FilterSchedule default_schedule(double gap, size_t num_steps) {
    if (!(gap > 0) || !std::isfinite(gap)) {
        throw std::invalid_argument("default_schedule requires a gap > 0.");
    }
    if (num_steps == 0) {
        throw std::invalid_argument("default_schedule requires at least one step.");
    }
    FilterSchedule s;
    double t = std::numbers::pi / (2 * gap);
    for (size_t k = 0; k < num_steps; k++) {
        s.steps.push_back({t, 0.0});
        t /= 2;
    }
    return s;
}

double predicted_amplitude(double energy, const FilterSchedule &schedule) {
    double a = 1.0;
    for (const auto &step : schedule.steps) {
        a *= std::cos(energy * step.t + step.delta);
    }
    return a;
}

double phase_penalty(const FilterSchedule &schedule) {
    double p = 1.0;
    for (const auto &step : schedule.steps) {
        double c = std::cos(step.delta);
        p *= c * c;
    }
    return p;
}

double rodeo_probability(double energy, double target, std::span<const double> times) {
    double p = 1.0;
    for (double t : times) {
        double c = std::cos((target - energy) * t / 2);
        p *= c * c;
    }
    return p;
}

TrialState TrialState::basis(uint64_t index) {
    TrialState s;
    s.basis_ = index;
    return s;
}

TrialState TrialState::from_bitstring(std::string_view bits) {
    if (bits.size() > 64) {
        throw std::invalid_argument("Trial bitstring longer than 64 qubits.");
    }
    uint64_t index = 0;
    for (size_t k = 0; k < bits.size(); k++) {
        if (bits[k] == '1') {
            index |= uint64_t{1} << k;
        } else if (bits[k] != '0') {
            throw std::invalid_argument("Trial bitstring may only contain '0' and '1'.");
        }
    }
    return basis(index);
}

TrialState TrialState::amplitudes(std::vector<cplx> amplitudes) {
    double norm = norm_squared(amplitudes);
    if (std::abs(norm - 1.0) > 1e-9) {
        throw std::invalid_argument("Explicit trial state has squared norm " + std::to_string(norm) + ", not 1.");
    }
    TrialState s;
    s.amplitudes_ = std::move(amplitudes);
    return s;
}

std::vector<cplx> TrialState::system_vector(uint32_t num_qubits) const {
    size_t dim = size_t{1} << num_qubits;
    if (basis_.has_value()) {
        if (*basis_ >= dim) {
            throw std::invalid_argument("Trial basis state does not fit in " + std::to_string(num_qubits) +
                                        " qubits.");
        }
        std::vector<cplx> v(dim);
        v[*basis_] = 1;
        return v;
    }
    if (amplitudes_.size() != dim) {
        throw std::invalid_argument("Explicit trial state has " + std::to_string(amplitudes_.size()) +
                                    " amplitudes; expected " + std::to_string(dim) + ".");
    }
    return amplitudes_;
}

std::vector<cplx> TrialState::with_ancilla(uint32_t num_qubits) const {
    auto v = system_vector(num_qubits);
    v.resize(v.size() * 2);
    return v;
}

Circuit build_filter_circuit(const PauliHamiltonian &h, const FilterSchedule &schedule, size_t trotter_steps,
                             const TrialState &trial) {
    if (trotter_steps < 1) {
        throw std::invalid_argument("trotter_steps must be at least 1.");
    }
    if (!h.is_hermitian(0.0)) {
        throw std::invalid_argument("Filter Hamiltonian must have real coefficients.");
    }
    schedule.validate();
    if (schedule.steps.empty()) {
        throw std::invalid_argument("The filter schedule has no steps.");
    }
    const uint32_t n = h.num_qubits();
    const uint32_t ancilla = n;
    Circuit c(n + 1);
    const uint32_t c_offset = c.add_classical_register("c", static_cast<uint32_t>(schedule.size()));
    const uint32_t r_offset = c.add_classical_register("r", n + 1);

    trial.system_vector(n);
    if (trial.is_basis()) {
        for (uint32_t q = 0; q < n; q++) {
            if ((trial.basis_index() >> q) & 1) {
                c.gate(GateType::X, {q});
            }
        }
    }

    PauliHamiltonian sorted = h;
    sorted.simplify(0.0);
    for (size_t i = 0; i < schedule.size(); i++) {
        const auto &step = schedule.steps[i];
        c.gate(GateType::RY, {ancilla}, {2 * step.delta});
        const double dt = step.t / static_cast<double>(trotter_steps);
        for (size_t slice = 0; slice < trotter_steps; slice++) {
            for (const auto &term : sorted.terms()) {
                append_rotation(c, term.string, term.coefficient.real() * dt, ancilla);
            }
        }
        c.measure(ancilla, c_offset + static_cast<uint32_t>(i));
        c.barrier_all();
        c.reset(ancilla);
        c.barrier_all();
    }
    for (uint32_t q = 0; q <= n; q++) {
        c.measure(q, r_offset + q);
    }
    return c;
}

FilterPrediction predict_success(const PauliHamiltonian &h, const TrialState &trial,
                                 const FilterSchedule &schedule) {
    schedule.validate();
    EigenDecomposition eig = diagonalize(h);
    auto psi = trial.system_vector(h.num_qubits());
    const size_t dim = psi.size();
    double success = 0;
    double weighted = 0;
    for (size_t a = 0; a < dim; a++) {
        cplx overlap = 0;
        for (size_t r = 0; r < dim; r++) {
            overlap += std::conj(eig.vectors(r, a)) * psi[r];
        }
        double w = std::norm(overlap * predicted_amplitude(eig.values[a], schedule));
        success += w;
        weighted += w * eig.values[a];
    }
    // A cosine evaluated at an exact zero leaves ~1e-33 of rounding residue.
    if (!(success > 1e-28)) {
        throw std::runtime_error("The filter schedule annihilates the trial state.");
    }
    return {success, weighted / success};
}

}  // namespace nucsim
