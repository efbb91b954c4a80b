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


// Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero when any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "nucsim/cli.h"
#include "nucsim/fusion.h"
#include "nucsim/hamiltonian.h"
#include "nucsim/lcu.h"
#include "nucsim/projection.h"
#include "nucsim/qasm.h"
#include "nucsim/simulator.h"
#include "oracle.h"
#include "random_circuits.h"
#include "random_hamiltonian.h"

using namespace nucsim;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Collects failures and a summary line for one criterion.
class Check {
   public:
    void expect(bool ok, const std::string &what) {
        if (!ok && outcome_.pass) {
            outcome_.pass = false;
            first_failure_ = what;
        }
    }
    void note(const std::string &text) { notes_ += (notes_.empty() ? "" : "; ") + text; }
    Outcome done() {
        outcome_.detail = outcome_.pass ? notes_ : first_failure_ + " | " + notes_;
        return outcome_;
    }

   private:
    Outcome outcome_;
    std::string notes_;
    std::string first_failure_;
};

std::string fmt(const char *format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome success_product_criterion() {
    Check c;
    const double probs[] = {0.29602, 0.48617, 0.69349, 0.74823, 0.73060, 0.77238, 0.93470, 0.95811};
    auto start = std::chrono::steady_clock::now();
    double p = success_product(probs);
    double elapsed = seconds_since(start);
    c.expect(std::abs(p - 0.037738) <= 5e-6, "product off by more than 5e-6");
    c.expect(elapsed < 1e-3, "runtime over 1 ms");
    c.note("overall_success=" + fmt("%.9f", p) + " |diff|=" + fmt("%.2e", std::abs(p - 0.037738)));
    c.note("runtime " + fmt("%.2e", elapsed) + " s");
    return c.done();
}

Outcome mma_post_selection_criterion() {
    Check c;
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(2026);
    double worst_fidelity = 1;
    double worst_prob = 0;
    double worst_sigma = 0;
    int circuits = 0;
    for (int k = 0; k < 24; k++) {
        uint32_t n = 3 + static_cast<uint32_t>(k % 6);
        size_t blocks = 1 + static_cast<size_t>(k % 4);
        Circuit circuit;
        if (k % 6 == 5) {
            // A filter circuit on 3 to 5 system qubits with a basis trial.
            n = 4 + static_cast<uint32_t>(k % 3);
            auto h = testing_hamiltonians::random_pauli_hamiltonian(n - 1, n + 2, rng, 0.4);
            circuit = build_filter_circuit(h, default_schedule(0.7, blocks), 2, TrialState::basis(rng() % (1u << (n - 1))));
        } else {
            circuit = testing_circuits::random_block_circuit(n, blocks, 8 * n, rng);
        }
        std::vector<cplx> zero(size_t{1} << n);
        zero[0] = 1;
        auto expected = oracle::post_select(circuit, zero);
        if (expected.probability < 1e-6) {
            continue;
        }
        RunOptions opts;
        opts.shots = 256;
        opts.seed = static_cast<uint64_t>(k);
        RunReport mma = run(circuit, opts, true);
        double f = overlap_magnitude(mma.final_state, expected.state);
        worst_fidelity = std::min(worst_fidelity, f * f);
        worst_prob = std::max(worst_prob, std::abs(mma.overall_success - expected.probability));
        opts.mode = RunMode::kRejection;
        opts.shots = 10000;
        RunReport rej = run(circuit, opts);
        double p = mma.overall_success;
        double sigma = std::sqrt(p * (1 - p) / 10000.0);
        double z = sigma > 0 ? std::abs(rej.overall_success - p) / sigma : 0.0;
        worst_sigma = std::max(worst_sigma, z);
        circuits++;
    }
    double elapsed = seconds_since(start);
    c.expect(circuits >= 20, "fewer than 20 usable circuits");
    c.expect(worst_fidelity >= 1 - 1e-9, "final-state fidelity below 1 - 1e-9");
    c.expect(worst_prob <= 1e-9, "success probability differs from oracle by more than 1e-9");
    c.expect(worst_sigma <= 4, "rejection acceptance outside 4 sigma");
    c.expect(elapsed < 60, "runtime over 60 s");
    c.note(std::to_string(circuits) + " circuits");
    c.note("min fidelity 1-" + fmt("%.1e", 1 - worst_fidelity));
    c.note("max |dP| " + fmt("%.1e", worst_prob));
    c.note("max rejection deviation " + fmt("%.2f", worst_sigma) + " sigma");
    c.note("runtime " + fmt("%.1f", elapsed) + " s");
    return c.done();
}

Outcome kernel_criterion() {
    Check c;
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(3);
    double worst = 0;
    double moved = 0;
    int cases = 0;
    for (uint32_t n = 1; n <= 5; n++) {
        for (int k = 0; k < 40; k++) {
            auto psi = oracle::random_state(size_t{1} << n, rng);
            StateVector s(psi);
            Matrix lifted;
            if (n == 1 || k % 2 == 0) {
                uint32_t q = static_cast<uint32_t>(rng() % n);
                Matrix u = oracle::random_unitary(2, rng);
                s.apply_1q(u, q);
                lifted = oracle::lift(u, {q}, n);
            } else {
                uint32_t p = static_cast<uint32_t>(rng() % n);
                uint32_t q = static_cast<uint32_t>(rng() % (n - 1));
                q += q >= p;
                if (p > q) {
                    std::swap(p, q);
                }
                Matrix u = oracle::random_unitary(4, rng);
                s.apply_2q(u, p, q);
                lifted = oracle::lift(u, {p, q}, n);
            }
            auto expected = lifted.apply(psi);
            for (size_t i = 0; i < expected.size(); i++) {
                worst = std::max(worst, std::abs(expected[i] - s[i]));
                moved = std::max(moved, std::abs(expected[i] - psi[i]));
            }
            cases++;
        }
    }
    double elapsed = seconds_since(start);
    c.expect(cases >= 200, "fewer than 200 cases");
    c.expect(moved > 0.1, "random unitaries left every state unchanged");
    c.expect(worst <= 1e-12, "kernel deviation above 1e-12");
    c.expect(elapsed < 10, "runtime over 10 s");
    c.note(std::to_string(cases) + " cases, max deviation " + fmt("%.1e", worst) +
           " (largest amplitude change " + fmt("%.2f", moved) + ")");
    c.note("runtime " + fmt("%.2f", elapsed) + " s");
    return c.done();
}

Outcome fusion_criterion() {
    Check c;
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(4);
    double worst_overlap = 1;
    for (int k = 0; k < 45; k++) {
        uint32_t n = 2 + static_cast<uint32_t>(k % 9);
        Circuit circuit = testing_circuits::random_unitary_circuit(n, 40 + 10 * n, rng);
        auto [fused, stats] = fuse_pipeline(circuit);
        StateVector a(n), b(n);
        for (const auto &inst : circuit.instructions()) {
            if (inst.is_gate()) {
                a.apply_matrix(gate_matrix(inst.gate), inst.qubits);
            }
        }
        for (const auto &inst : fused.instructions()) {
            if (inst.is_gate()) {
                b.apply_matrix(gate_matrix(inst.gate), inst.qubits);
            }
        }
        worst_overlap = std::min(worst_overlap, overlap_magnitude(a.amplitudes(), b.amplitudes()));
    }
    double min_factor = INFINITY;
    size_t min_gates = SIZE_MAX;
    for (int k = 0; k < 3; k++) {
        PauliHamiltonian h = k == 0 ? testing_hamiltonians::random_pauli_hamiltonian(5, 24, rng)
                                    : testing_hamiltonians::unit_spectrum(
                                          testing_hamiltonians::random_second_quantized(3 + k, 0.3, rng));
        Circuit circuit = build_filter_circuit(h, default_schedule(0.5, 4), 8, TrialState::basis(1));
        auto [fused, stats] = fuse_pipeline(circuit);
        min_gates = std::min(min_gates, circuit.gate_count());
        min_factor = std::min(min_factor, stats.reduction_factor);
        RunOptions opts;
        opts.shots = 1;
        auto ra = run(circuit, opts, true);
        auto rb = run(fused, opts, true);
        worst_overlap = std::min(worst_overlap, overlap_magnitude(ra.final_state, rb.final_state));
    }
    double elapsed = seconds_since(start);
    c.expect(worst_overlap >= 1 - 1e-9, "fused overlap below 1 - 1e-9");
    c.expect(min_gates >= 10000, "projection circuits smaller than 10^4 gates");
    c.expect(min_factor >= 1.5, "reduction factor below 1.5");
    c.expect(elapsed < 60, "runtime over 60 s");
    c.note("min overlap 1-" + fmt("%.1e", 1 - worst_overlap));
    c.note("min reduction " + fmt("%.3f", min_factor) + "x on circuits of >= " + std::to_string(min_gates) + " gates");
    c.note("runtime " + fmt("%.1f", elapsed) + " s");
    return c.done();
}

Outcome gap_removal_criterion() {
    Check c;
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(5);
    auto h = testing_hamiltonians::unit_spectrum(testing_hamiltonians::random_second_quantized(3, 0.3, rng));
    auto eig = diagonalize(h);
    auto gs = ground_state(h);
    const double gap = gs.gap;
    // First eigenvector at the gap.
    size_t excited = 1;
    while (eig.values[excited] - eig.values[0] <= kGapTolerance) {
        excited++;
    }
    const size_t dim = eig.values.size();
    std::vector<cplx> trial(dim);
    for (size_t r = 0; r < dim; r++) {
        trial[r] = (eig.vectors(r, 0) + eig.vectors(r, excited)) / std::sqrt(2.0);
    }
    FilterSchedule schedule = default_schedule(gap, 1);
    double amp = predicted_amplitude(gap, schedule);
    Circuit circuit = build_filter_circuit(h, schedule, 2048, TrialState::amplitudes(trial));
    RunOptions opts;
    opts.shots = 1;
    opts.initial_state = TrialState::amplitudes(trial).with_ancilla(h.num_qubits());
    auto report = run(circuit, opts, true);
    cplx overlap = 0;
    for (size_t r = 0; r < dim; r++) {
        overlap += std::conj(eig.vectors(r, excited)) * report.final_state[r];
    }
    double population = std::norm(overlap);
    double elapsed = seconds_since(start);
    c.expect(std::abs(amp) <= 1e-12, "predicted amplitude at the gap is not zero");
    c.expect(population < 1e-6, "gap eigenstate population not below 1e-6");
    c.expect(elapsed < 30, "runtime over 30 s");
    c.note("gap " + fmt("%.4f", gap) + ", predicted amplitude " + fmt("%.1e", amp));
    c.note("gap-state population " + fmt("%.2e", population) + " at r=2048");
    c.note("runtime " + fmt("%.1f", elapsed) + " s");
    return c.done();
}

Outcome filter_convergence_criterion() {
    Check c;
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(6);
    // First random instance meeting the gap and overlap conditions.
    PauliHamiltonian h, scaled;
    GroundState gs;
    uint64_t trial_index = 0;
    double gap = 0, overlap = 0, width = 0;
    int attempts = 0;
    for (;; attempts++) {
        h = testing_hamiltonians::random_second_quantized(4, 0.3, rng);
        gs = ground_state(h);
        width = gs.spectrum.back() - gs.spectrum.front();
        scaled = shift_rescale(h, gs.energy, width);
        trial_index = testing_hamiltonians::dominant_basis_state(h);
        overlap = std::norm(gs.vector[trial_index]);
        gap = testing_hamiltonians::effective_gap(scaled, TrialState::basis(trial_index).system_vector(4));
        if (gap >= 0.2 && overlap >= 0.3) {
            break;
        }
    }
    double h_norm = std::max(std::abs(gs.spectrum.front()), std::abs(gs.spectrum.back()));
    FilterSchedule base = default_schedule(gap, 4);
    FilterSchedule schedule = base;
    schedule.steps.insert(schedule.steps.end(), base.steps.begin(), base.steps.end());
    std::vector<double> errors;
    std::string trace;
    for (size_t r = 4; r <= 64; r *= 2) {
        Circuit circuit = build_filter_circuit(scaled, schedule, r, TrialState::basis(trial_index));
        RunOptions opts;
        opts.shots = 1;
        opts.observable = &h;
        auto report = run(circuit, opts);
        errors.push_back(std::abs(*report.energy - gs.energy));
        trace += (trace.empty() ? "" : ", ") + std::string("r=") + std::to_string(r) + ":" + fmt("%.2e", errors.back());
    }
    bool monotone = true;
    for (size_t k = 1; k < errors.size(); k++) {
        monotone = monotone && errors[k] < errors[k - 1];
    }
    double elapsed = seconds_since(start);
    c.expect(monotone, "energy error does not decrease with every doubling");
    c.expect(errors.back() <= 1e-3 * h_norm, "r=64 error above 1e-3 |H|");
    c.expect(elapsed < 300, "runtime over 5 min");
    c.note("instance after " + std::to_string(attempts + 1) + " draws: gap " + fmt("%.3f", gap * width) +
           " (scaled " + fmt("%.3f", gap) + "), overlap " + fmt("%.3f", overlap) + ", |H| " + fmt("%.3f", h_norm));
    c.note("|E-E0| " + trace);
    c.note("runtime " + fmt("%.1f", elapsed) + " s");
    return c.done();
}

Outcome jw_criterion() {
    Check c;
    auto start = std::chrono::steady_clock::now();
    const uint32_t n = 6;
    std::vector<Matrix> a, ad;
    for (uint32_t i = 0; i < n; i++) {
        a.push_back(dense(jw_annihilation(i, n)));
        ad.push_back(dense(jw_creation(i, n)));
    }
    const Matrix id = Matrix::identity(size_t{1} << n);
    const Matrix zero(id.rows(), id.cols());
    double worst = 0;
    for (uint32_t i = 0; i < n; i++) {
        worst = std::max(worst, max_abs_diff(a[i] * a[i], zero));
        for (uint32_t j = 0; j < n; j++) {
            Matrix anti = a[i] * ad[j] + ad[j] * a[i];
            worst = std::max(worst, max_abs_diff(anti, i == j ? id : zero));
            worst = std::max(worst, max_abs_diff(a[i] * a[j] + a[j] * a[i], zero));
        }
    }
    double elapsed = seconds_since(start);
    c.expect(worst <= 1e-12, "anticommutation deviation above 1e-12");
    c.expect(elapsed < 5, "runtime over 5 s");
    c.note("max deviation " + fmt("%.1e", worst) + " over i,j < 6");
    c.note("runtime " + fmt("%.2f", elapsed) + " s");
    return c.done();
}

Outcome lcu_criterion() {
    Check c;
    auto start = std::chrono::steady_clock::now();
    using boost::multiprecision::cpp_int;
    bool exact = true;
    for (uint32_t m = 1; m <= 200; m++) {
        auto row = binomial_row(2 * m);
        cpp_int sum = 0;
        for (uint32_t j = 0; j <= 2 * m; j++) {
            exact = exact && row[j] == row[2 * m - j] && row[j] > 0;
            sum += row[j];
        }
        exact = exact && sum == (cpp_int(1) << (2 * m));
    }
    c.expect(exact, "binomial symmetry or normalization fails");

    std::mt19937_64 rng(8);
    double worst = 0;
    for (uint32_t n = 1; n <= 4; n++) {
        for (uint32_t m = 1; m <= 4; m++) {
            auto h = testing_hamiltonians::random_pauli_hamiltonian(n, 3 * n + 2, rng);
            auto gs = ground_state(h);
            double radius = std::max(std::abs(gs.spectrum.front()), std::abs(gs.spectrum.back()));
            h = shift_rescale(h, 0.0, radius / 1.3);
            auto psi = oracle::random_state(size_t{1} << n, rng);
            auto o_psi = lcu_reference(h, lcu_coefficients_at_radius(m, m), psi);
            // cos^{2m}(H)ψ from a dense matrix power.
            Matrix hd = dense(h);
            Matrix cosh_m = (oracle::expm_hermitian(hd, 1.0) + oracle::expm_hermitian(hd, -1.0)) * cplx{0.5};
            std::vector<cplx> expected = psi;
            for (uint32_t k = 0; k < 2 * m; k++) {
                expected = cosh_m.apply(expected);
            }
            auto filtered = apply_cos_filter(h, m, psi);
            double norm = std::sqrt(norm_squared(expected));
            for (size_t i = 0; i < psi.size(); i++) {
                worst = std::max(worst, std::abs(o_psi[i] - expected[i]));
                worst = std::max(worst, std::abs(filtered[i] - expected[i] / norm));
            }
        }
    }
    c.expect(worst <= 1e-10, "untruncated LCU differs from the cos filter by more than 1e-10");

    auto h = testing_hamiltonians::unit_spectrum(testing_hamiltonians::random_second_quantized(4, 0.3, rng));
    auto gs = ground_state(h);
    double worst_ps = 0;
    for (double tol : {1e-4, 1e-8, 1e-12}) {
        auto e = lcu_coefficients(60, tol);
        double ps = lcu_success_probability(h, e, gs.vector);
        c.expect(std::abs(1 - ps) <= tol, "ground-state P_s differs from 1 by more than the tail tolerance");
        worst_ps = std::max(worst_ps, std::abs(1 - ps));
    }
    double elapsed = seconds_since(start);
    c.expect(elapsed < 30, "runtime over 30 s");
    c.note("exact identities for m <= 200");
    c.note("max LCU/cos deviation " + fmt("%.1e", worst));
    c.note("max |1-P_s| " + fmt("%.1e", worst_ps));
    c.note("runtime " + fmt("%.2f", elapsed) + " s");
    return c.done();
}

Outcome scale_criterion() {
    Check c;
    auto start = std::chrono::steady_clock::now();
    // Nearest-neighbour chain on 15 orbitals plus the ancilla.
    const uint32_t n = 15;
    SecondQuantizedInput in;
    in.num_orbitals = n;
    std::mt19937_64 rng(9);
    std::normal_distribution<double> g;
    for (uint32_t i = 0; i < n; i++) {
        in.t[{i, i}] = 0.1 * i + 0.05 * g(rng);
        if (i + 1 < n) {
            in.t[{i, i + 1}] = 0.2 * g(rng);
            double v = 0.1 * g(rng);
            in.v[{i, i + 1, i, i + 1}] = v;
        }
    }
    in.complete_symmetries();
    PauliHamiltonian h = build_hamiltonian(in);
    const size_t trotter = 420;
    Circuit circuit = build_filter_circuit(h, default_schedule(0.5, 4), trotter, TrialState::basis(0x1555));
    const size_t gates = circuit.gate_count();
    auto built = seconds_since(start);
    auto [fused, stats] = fuse_pipeline(circuit);
    circuit = Circuit();
    StateVector::reset_peak_bytes();
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    WorkerPool pool(hw);
    RunOptions opts;
    opts.pool = &pool;
    opts.shots = 1024;
    RunReport report = run(fused, opts);
    const double state_bytes = 16.0 * std::ldexp(1.0, 16);
    const double peak = static_cast<double>(StateVector::peak_bytes());
    double elapsed = seconds_since(start);
    c.expect(gates >= 1000000, "circuit below 10^6 gates");
    c.expect(report.assert_probs.size() == 4, "missing assertion records");
    c.expect(peak < 1.5 * state_bytes, "peak state memory above 1.5x the state");
    c.expect(elapsed < 600, "runtime over 10 min");
    c.note(std::to_string(gates) + " gates (" + std::to_string(stats.gates_after) + " after fusion, " +
           fmt("%.2f", stats.reduction_factor) + "x)");
    c.note("peak state memory " + fmt("%.2f", peak / state_bytes) + "x of 16*2^16 bytes");
    c.note("overall_success " + fmt("%.3e", report.overall_success));
    c.note(std::to_string(hw) + " threads, build " + fmt("%.1f", built) + " s, total " + fmt("%.1f", elapsed) + " s");
    return c.done();
}

Outcome determinism_criterion() {
    Check c;
    auto start = std::chrono::steady_clock::now();
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / ("nucsim_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    std::mt19937_64 rng(10);
    auto h = testing_hamiltonians::random_pauli_hamiltonian(14, 10, rng, 0.3);
    {
        std::ofstream out(dir / "h.txt");
        out.precision(17);
        for (const auto &term : h.terms()) {
            out << term.coefficient.real() << " " << term.string.letters() << "\n";
        }
    }
    auto cli = [](const std::vector<std::string> &args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return std::make_pair(code, out.str());
    };
    std::string hp = (dir / "h.txt").string();
    std::string qp = (dir / "p.qasm").string();
    auto prep = cli({"prepare", "--hamiltonian", hp, "--e0", "0", "--gap", "0.6", "--steps", "3", "--trotter", "2",
                     "--trial", "10110010011010", "--output", qp});
    c.expect(prep.first == kExitOk, "prepare failed");
    int compared = 0;
    for (const std::vector<std::string> &extra :
         {std::vector<std::string>{"--mode", "mma"}, std::vector<std::string>{"--mode", "mma", "--no-fuse"},
          std::vector<std::string>{"--mode", "rejection", "--shots", "40"}}) {
        std::vector<std::string> base{"simulate", "--input", qp, "--hamiltonian", hp, "--seed", "77"};
        base.insert(base.end(), extra.begin(), extra.end());
        std::string reference;
        for (const char *threads : {"1", "2", "4"}) {
            auto args = base;
            args.push_back("--threads");
            args.push_back(threads);
            auto [code, out] = cli(args);
            c.expect(code == kExitOk, "simulate failed");
            auto j = nlohmann::json::parse(out);
            j.erase("wall_time_s");
            if (reference.empty()) {
                reference = j.dump();
            } else {
                c.expect(j.dump() == reference, "report differs between thread counts");
                compared++;
            }
        }
    }
    fs::remove_all(dir);
    c.note(std::to_string(compared) + " report pairs byte-identical (threads 1 vs 2, 4; 15 qubits)");
    c.note("runtime " + fmt("%.1f", seconds_since(start)) + " s");
    return c.done();
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char *name;
        std::function<Outcome()> fn;
    };
    const Criterion criteria[] = {
        {1, "success-probability product", success_product_criterion},
        {2, "mma equals post-selection", mma_post_selection_criterion},
        {3, "kernel correctness", kernel_criterion},
        {4, "fusion soundness and payoff", fusion_criterion},
        {5, "exact gap removal", gap_removal_criterion},
        {6, "filter convergence trend", filter_convergence_criterion},
        {7, "Jordan-Wigner algebra", jw_criterion},
        {8, "LCU identities", lcu_criterion},
        {9, "scale smoke test", scale_criterion},
        {10, "thread determinism", determinism_criterion},
    };
    int failures = 0;
    for (const auto &crit : criteria) {
        Outcome o;
        try {
            o = crit.fn();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::printf("[%s] criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", crit.id, crit.name, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
