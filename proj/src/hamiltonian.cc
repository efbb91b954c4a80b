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

#include "nucsim/hamiltonian.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <string>

namespace nucsim {

namespace {

PauliHamiltonian jw_ladder(uint32_t i, uint32_t num_orbitals, double y_sign) {
    if (i >= num_orbitals) {
        throw std::out_of_range("Orbital " + std::to_string(i) + " out of range for " +
                                std::to_string(num_orbitals) + " orbitals.");
    }
    uint64_t parity = (uint64_t{1} << i) - 1;
    uint64_t bit = uint64_t{1} << i;
    PauliHamiltonian out(num_orbitals);
    out.add_term(0.5, PauliString(num_orbitals, bit, parity));
    out.add_term(cplx{0, 0.5 * y_sign}, PauliString(num_orbitals, bit, parity | bit));
    return out;
}

void check_index(uint32_t index, uint32_t num_orbitals) {
    if (index >= num_orbitals) {
        throw std::invalid_argument("Orbital index " + std::to_string(index) + " out of range for " +
                                    std::to_string(num_orbitals) + " orbitals.");
    }
}

template <typename Key>
void set_partner(std::map<Key, double> &table, const Key &key, double value, double tolerance) {
    auto [it, inserted] = table.emplace(key, value);
    if (!inserted && std::abs(it->second - value) > tolerance) {
        std::string idx;
        for (auto k : key) {
            idx += " " + std::to_string(k);
        }
        throw std::invalid_argument("Matrix element (" + idx.substr(1) + ") = " + std::to_string(it->second) +
                                    " conflicts with the required symmetry value " + std::to_string(value) + ".");
    }
}

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) {
            k++;
        }
        size_t start = k;
        while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) {
            k++;
        }
        if (k > start) {
            out.push_back(line.substr(start, k - start));
        }
    }
    return out;
}

// Calls `fn(line_number, tokens)` for every non-blank line with comments
// stripped.
template <typename Fn>
void for_each_record(std::string_view text, Fn &&fn) {
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        line_no++;
        if (size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tokens = split_tokens(line);
        if (!tokens.empty()) {
            fn(line_no, tokens);
        }
        pos = end + 1;
    }
}

double parse_double(std::string_view token, size_t line) {
    double value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value)) {
        throw HamiltonianParseError(line, "expected a number, got '" + std::string(token) + "'");
    }
    return value;
}

uint32_t parse_index(std::string_view token, size_t line) {
    uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw HamiltonianParseError(line, "expected an orbital index, got '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

PauliHamiltonian jw_creation(uint32_t i, uint32_t num_orbitals) {
    return jw_ladder(i, num_orbitals, -1.0);
}

PauliHamiltonian jw_annihilation(uint32_t i, uint32_t num_orbitals) {
    return jw_ladder(i, num_orbitals, +1.0);
}

void SecondQuantizedInput::complete_symmetries(double tolerance) {
    auto t_copy = t;
    for (const auto &[key, value] : t_copy) {
        check_index(key[0], num_orbitals);
        check_index(key[1], num_orbitals);
        set_partner(t, {key[1], key[0]}, value, tolerance);
    }
    auto v_copy = v;
    for (const auto &[key, value] : v_copy) {
        auto [i, j, k, l] = key;
        for (auto idx : key) {
            check_index(idx, num_orbitals);
        }
        if ((i == j || k == l) && std::abs(value) > tolerance) {
            throw std::invalid_argument("V(" + std::to_string(i) + " " + std::to_string(j) + " " +
                                        std::to_string(k) + " " + std::to_string(l) +
                                        ") must vanish by antisymmetry.");
        }
        set_partner(v, {j, i, k, l}, -value, tolerance);
        set_partner(v, {i, j, l, k}, -value, tolerance);
        set_partner(v, {j, i, l, k}, value, tolerance);
    }
}

PauliHamiltonian build_hamiltonian(const SecondQuantizedInput &input) {
    const uint32_t n = input.num_orbitals;
    PauliHamiltonian h(n);
    if (input.t.empty() && input.v.empty()) {
        return h;
    }
    std::vector<PauliHamiltonian> create;
    std::vector<PauliHamiltonian> annihilate;
    for (uint32_t i = 0; i < n; i++) {
        create.push_back(jw_creation(i, n));
        annihilate.push_back(jw_annihilation(i, n));
    }
    std::vector<PauliTerm> terms;
    auto accumulate = [&](const PauliHamiltonian &op, double scale) {
        for (const auto &term : op.terms()) {
            terms.push_back({term.coefficient * scale, term.string});
        }
    };
    for (const auto &[key, value] : input.t) {
        check_index(key[0], n);
        check_index(key[1], n);
        accumulate(create[key[0]] * annihilate[key[1]], value);
    }
    for (const auto &[key, value] : input.v) {
        auto [i, j, k, l] = key;
        for (auto idx : key) {
            check_index(idx, n);
        }
        if (value == 0.0) {
            continue;
        }
        accumulate(create[i] * create[j] * annihilate[l] * annihilate[k], 0.5 * value);
    }
    for (const auto &term : terms) {
        h.add_term(term.coefficient, term.string);
    }
    h.simplify();
    double scale = 1.0;
    for (const auto &term : h.terms()) {
        scale = std::max(scale, std::abs(term.coefficient));
    }
    if (!h.is_hermitian(1e-10 * scale)) {
        throw std::invalid_argument("Second-quantized input produces a non-Hermitian Hamiltonian (largest imaginary "
                                    "coefficient " +
                                    std::to_string(h.max_imag()) + "); check t and V symmetries.");
    }
    h.make_real();
    return h;
}

EigenDecomposition diagonalize(const PauliHamiltonian &h) {
    if (!h.is_hermitian(0.0)) {
        throw std::invalid_argument("Hamiltonian has complex coefficients.");
    }
    return hermitian_eigensolve(dense(h));
}

GroundState ground_state(const PauliHamiltonian &h) {
    EigenDecomposition eig = diagonalize(h);
    GroundState out;
    out.energy = eig.values[0];
    out.spectrum = eig.values;
    size_t dim = eig.vectors.rows();
    out.vector.resize(dim);
    for (size_t r = 0; r < dim; r++) {
        out.vector[r] = eig.vectors(r, 0);
    }
    auto next = std::find_if(eig.values.begin(), eig.values.end(),
                             [&](double e) { return e > out.energy + kGapTolerance; });
    if (next == eig.values.end()) {
        throw DegenerateSpectrumError("Spectrum is fully degenerate at E0 = " + std::to_string(out.energy) +
                                      "; the gap is undefined.");
    }
    out.gap = *next - out.energy;
    return out;
}

PauliHamiltonian shift_rescale(const PauliHamiltonian &h, double e0, double scale) {
    if (!(scale > 0)) {
        throw std::invalid_argument("shift_rescale requires scale > 0.");
    }
    PauliHamiltonian out = h;
    out.add_term(-e0, PauliString(h.num_qubits()));
    out.simplify();
    return out * cplx{1.0 / scale};
}

HamiltonianParseError::HamiltonianParseError(size_t line, const std::string &message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

PauliHamiltonian parse_pauli_text(std::string_view text) {
    std::vector<std::pair<double, PauliString>> terms;
    std::optional<uint32_t> width;
    for_each_record(text, [&](size_t line, const std::vector<std::string_view> &tokens) {
        if (tokens.size() != 2) {
            throw HamiltonianParseError(line, "expected 'coefficient letters'");
        }
        double c = parse_double(tokens[0], line);
        PauliString p;
        try {
            if (tokens[1].size() > PauliString::kMaxQubits) {
                throw std::invalid_argument("more than 64 qubits");
            }
            p = PauliString::from_letters(tokens[1]);
        } catch (const std::invalid_argument &e) {
            throw HamiltonianParseError(line, "bad Pauli string '" + std::string(tokens[1]) + "': " + e.what());
        }
        if (width.has_value() && *width != p.num_qubits()) {
            throw HamiltonianParseError(line, "Pauli string length " + std::to_string(p.num_qubits()) +
                                                  " differs from earlier terms (" + std::to_string(*width) + ")");
        }
        width = p.num_qubits();
        terms.emplace_back(c, p);
    });
    PauliHamiltonian h(width.value_or(0));
    for (const auto &[c, p] : terms) {
        h.add_term(c, p);
    }
    h.simplify();
    return h;
}

SecondQuantizedInput parse_second_quantized_text(std::string_view text) {
    SecondQuantizedInput input;
    std::optional<uint32_t> declared;
    uint32_t max_index = 0;
    bool any = false;
    for_each_record(text, [&](size_t line, const std::vector<std::string_view> &tokens) {
        auto kind = tokens[0];
        if (kind == "orbitals") {
            if (tokens.size() != 2) {
                throw HamiltonianParseError(line, "expected 'orbitals N'");
            }
            declared = parse_index(tokens[1], line);
            return;
        }
        size_t arity = kind == "t" ? 2 : kind == "v" ? 4 : 0;
        if (arity == 0) {
            throw HamiltonianParseError(line, "unknown record '" + std::string(kind) + "'");
        }
        if (tokens.size() != arity + 2) {
            throw HamiltonianParseError(line, "record '" + std::string(kind) + "' expects " + std::to_string(arity) +
                                                  " indices and a value");
        }
        std::array<uint32_t, 4> idx{};
        for (size_t k = 0; k < arity; k++) {
            idx[k] = parse_index(tokens[1 + k], line);
            max_index = std::max(max_index, idx[k]);
        }
        any = true;
        double value = parse_double(tokens[arity + 1], line);
        bool inserted = arity == 2 ? input.t.emplace(std::array<uint32_t, 2>{idx[0], idx[1]}, value).second
                                   : input.v.emplace(idx, value).second;
        if (!inserted) {
            throw HamiltonianParseError(line, "duplicate matrix element");
        }
    });
    uint32_t inferred = any ? max_index + 1 : 0;
    if (declared.has_value()) {
        if (*declared < inferred) {
            throw HamiltonianParseError(0, "declared orbital count " + std::to_string(*declared) +
                                               " is smaller than the largest index used");
        }
        inferred = *declared;
    }
    input.num_orbitals = inferred;
    try {
        input.complete_symmetries();
    } catch (const std::invalid_argument &e) {
        throw HamiltonianParseError(0, e.what());
    }
    return input;
}

PauliHamiltonian parse_hamiltonian_text(std::string_view text) {
    bool second_quantized = false;
    bool decided = false;
    for_each_record(text, [&](size_t, const std::vector<std::string_view> &tokens) {
        if (!decided) {
            decided = true;
            second_quantized = tokens[0] == "t" || tokens[0] == "v" || tokens[0] == "orbitals";
        }
    });
    if (second_quantized) {
        return build_hamiltonian(parse_second_quantized_text(text));
    }
    return parse_pauli_text(text);
}

}  // namespace nucsim
