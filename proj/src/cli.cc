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


#include "nucsim/cli.h"

#include <unistd.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <sstream>

#include "nucsim/fusion.h"
#include "nucsim/hamiltonian.h"
#include "nucsim/lcu.h"
#include "nucsim/projection.h"
#include "nucsim/qasm.h"
#include "nucsim/simulator.h"

namespace nucsim {

namespace {

using nlohmann::json;

// Bad input or configuration; exit code 2.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Work that would exceed the machine; exit code 4.
class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input;
    std::string hamiltonian;
    std::string output;
    std::string schedule;
    std::string mode = "mma";
    size_t shots = 1024;
    uint64_t seed = 0;
    std::optional<uint32_t> ancilla;
    size_t trotter = 1;
    std::optional<double> gap;
    size_t steps = 1;
    std::optional<size_t> threads;
    bool no_fuse = false;
    bool decompose = false;
    std::optional<double> e0;
    double scale = 1.0;
    std::string trial;
    std::string lcu_trial = "ground";
    uint32_t m = 1;
    double tail_tol = 1e-8;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw ConfigError("cannot write '" + path + "'");
    }
}

// Writes `text` to --output when given, otherwise to `out`.
void emit(const Options &o, std::ostream &out, const std::string &text) {
    if (o.output.empty()) {
        out << text;
    } else {
        write_file(o.output, text);
    }
}

size_t thread_count(const Options &o) {
    if (o.threads.has_value()) {
        if (*o.threads < 1) {
            throw ConfigError("--threads must be at least 1");
        }
        return *o.threads;
    }
    if (const char *env = std::getenv("NUCSIM_THREADS")) {
        char *end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1) {
            throw ConfigError(std::string("NUCSIM_THREADS must be a positive integer, got '") + env + "'");
        }
        return static_cast<size_t>(v);
    }
    return 1;
}

// Refuses state vectors that cannot fit in physical memory.
void check_memory(uint32_t num_qubits, size_t vectors) {
    const long pages = sysconf(_SC_PHYS_PAGES);
    const long page_size = sysconf(_SC_PAGE_SIZE);
    if (num_qubits >= 40) {
        throw ResourceError(std::to_string(num_qubits) + " qubits exceed the state-vector limit");
    }
    if (pages <= 0 || page_size <= 0) {
        return;
    }
    const double needed = static_cast<double>(vectors) * 16.0 * std::ldexp(1.0, static_cast<int>(num_qubits));
    const double available = static_cast<double>(pages) * static_cast<double>(page_size);
    if (needed > available) {
        throw ResourceError("a " + std::to_string(num_qubits) + "-qubit simulation needs " +
                            std::to_string(needed / (1 << 30)) + " GiB but the machine has " +
                            std::to_string(available / (1 << 30)) + " GiB");
    }
}

PauliHamiltonian load_hamiltonian(const std::string &path) {
    if (path.empty()) {
        throw ConfigError("--hamiltonian is required");
    }
    try {
        return parse_hamiltonian_text(read_file(path));
    } catch (const HamiltonianParseError &e) {
        throw ConfigError(path + ": " + e.what());
    }
}

FilterSchedule load_schedule(const std::string &path) {
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const json::parse_error &e) {
        throw ConfigError(path + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("steps") || !doc["steps"].is_array()) {
        throw ConfigError(path + ": schedule must be an object with a \"steps\" array");
    }
    FilterSchedule s;
    for (const auto &step : doc["steps"]) {
        if (!step.is_object() || !step.contains("t") || !step["t"].is_number()) {
            throw ConfigError(path + ": every step needs a numeric \"t\"");
        }
        FilterStep fs;
        fs.t = step["t"].get<double>();
        if (step.contains("delta")) {
            if (!step["delta"].is_number()) {
                throw ConfigError(path + ": \"delta\" must be a number");
            }
            fs.delta = step["delta"].get<double>();
        }
        s.steps.push_back(fs);
    }
    if (s.steps.empty()) {
        throw ConfigError(path + ": schedule has no steps");
    }
    return s;
}

TrialState parse_trial(const std::string &bits, uint32_t num_qubits) {
    if (bits.empty()) {
        return TrialState::basis(0);
    }
    if (bits.size() != num_qubits) {
        throw ConfigError("--trial has " + std::to_string(bits.size()) + " characters; the Hamiltonian has " +
                          std::to_string(num_qubits) + " qubits");
    }
    return TrialState::from_bitstring(bits);
}

json fusion_json(const FusionStats &s) {
    json passes = json::array();
    for (const auto &p : s.per_pass) {
        passes.push_back({{"name", p.name}, {"gates", p.gates}});
    }
    return {{"gates_before", s.gates_before},
            {"gates_after", s.gates_after},
            {"reduction_factor", s.reduction_factor},
            {"per_pass", passes}};
}

json report_json(const RunReport &r, uint32_t num_qubits) {
    json j;
    j["mode"] = std::string(run_mode_name(r.mode));
    j["num_qubits"] = num_qubits;
    j["shots"] = r.shots;
    j["seed"] = r.seed;
    if (r.ancilla.has_value()) {
        j["ancilla"] = {{"index", *r.ancilla},
                        {"convention", "highest-index"},
                        {"index_from_top", num_qubits - 1 - *r.ancilla}};
    } else {
        j["ancilla"] = nullptr;
    }
    j["assert_probs"] = r.assert_probs;
    j["overall_success"] = r.overall_success;
    j["accepted"] = r.accepted;
    j["rejected_per_step"] = r.rejected_per_step;
    json samples = json::object();
    for (const auto &[key, count] : r.samples) {
        samples[key] = count;
    }
    j["samples"] = samples;
    j["energy"] = r.energy.has_value() ? json(*r.energy) : json(nullptr);
    j["fusion_stats"] = r.fusion_stats.has_value() ? fusion_json(*r.fusion_stats) : json(nullptr);
    j["wall_time_s"] = r.wall_time_s;
    return j;
}

Circuit load_circuit(const std::string &path) {
    if (path.empty()) {
        throw ConfigError("--input is required");
    }
    std::string text = read_file(path);
    try {
        return parse_qasm(text);
    } catch (const QasmError &e) {
        throw ConfigError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
                          e.what());
    }
}

void cmd_simulate(const Options &o, std::ostream &out) {
    auto mode = run_mode_from_name(o.mode);
    if (!mode.has_value()) {
        throw ConfigError("--mode must be 'mma' or 'rejection'");
    }
    if (o.shots < 1) {
        throw ConfigError("--shots must be at least 1");
    }
    Circuit circuit = load_circuit(o.input);
    check_memory(circuit.num_qubits(), 2);
    std::optional<PauliHamiltonian> observable;
    if (!o.hamiltonian.empty()) {
        observable = load_hamiltonian(o.hamiltonian);
        if (observable->num_qubits() > circuit.num_qubits()) {
            throw ConfigError("the Hamiltonian acts on more qubits than the circuit has");
        }
    }
    const size_t threads = thread_count(o);
    std::optional<FusionStats> stats;
    if (!o.no_fuse) {
        auto [fused, s] = fuse_pipeline(circuit);
        circuit = std::move(fused);
        stats = s;
    }
    std::unique_ptr<WorkerPool> pool;
    if (threads > 1) {
        pool = std::make_unique<WorkerPool>(threads);
    }
    RunOptions opts;
    opts.mode = *mode;
    opts.shots = o.shots;
    opts.seed = o.seed;
    opts.ancilla = o.ancilla;
    opts.pool = pool.get();
    opts.observable = observable.has_value() ? &*observable : nullptr;
    RunReport report = run(circuit, opts);
    report.fusion_stats = stats;
    emit(o, out, report_json(report, circuit.num_qubits()).dump(2) + "\n");
}

void cmd_fuse(const Options &o, std::ostream &out) {
    Circuit circuit = load_circuit(o.input);
    auto [fused, stats] = fuse_pipeline(circuit);
    if (o.decompose) {
        if (o.output.empty()) {
            throw ConfigError("--decompose needs --output for the fused QASM");
        }
        write_file(o.output, emit_qasm(fused, {.decompose = true}));
    } else if (!o.output.empty()) {
        throw ConfigError("fused circuits hold general C1/C2 gates; pass --decompose to write QASM");
    }
    out << fusion_json(stats).dump(2) << "\n";
}

// Ground state of h, with dense-size failures mapped to the resource guard.
GroundState checked_ground_state(const PauliHamiltonian &h) {
    if (h.num_qubits() > kMaxDenseQubits) {
        throw ResourceError("exact diagonalization is limited to " + std::to_string(kMaxDenseQubits) + " qubits");
    }
    try {
        return ground_state(h);
    } catch (const DegenerateSpectrumError &e) {
        throw ConfigError(e.what());
    }
}

void cmd_prepare(const Options &o, std::ostream &out, std::ostream &err) {
    PauliHamiltonian h = load_hamiltonian(o.hamiltonian);
    if (!h.is_hermitian(0.0)) {
        throw ConfigError("the Hamiltonian has complex coefficients");
    }
    if (!(o.scale > 0)) {
        throw ConfigError("--scale must be positive");
    }
    if (o.trotter < 1) {
        throw ConfigError("--trotter must be at least 1");
    }
    std::optional<GroundState> gs;
    double e0 = 0;
    if (o.e0.has_value()) {
        e0 = *o.e0;
    } else {
        gs = checked_ground_state(h);
        e0 = gs->energy;
    }
    PauliHamiltonian shifted = shift_rescale(h, e0, o.scale);
    FilterSchedule schedule;
    std::optional<double> gap = o.gap;
    if (!o.schedule.empty()) {
        if (gap.has_value()) {
            throw ConfigError("--schedule and --gap are mutually exclusive");
        }
        schedule = load_schedule(o.schedule);
    } else {
        if (!gap.has_value()) {
            if (!gs.has_value()) {
                gs = checked_ground_state(h);
            }
            gap = gs->gap / o.scale;
        }
        if (!(*gap > 0)) {
            throw ConfigError("--gap must be positive");
        }
        if (o.steps < 1) {
            throw ConfigError("--steps must be at least 1");
        }
        schedule = default_schedule(*gap, o.steps);
    }
    TrialState trial = parse_trial(o.trial, h.num_qubits());
    Circuit c = build_filter_circuit(shifted, schedule, o.trotter, trial);
    json summary = {{"num_qubits", c.num_qubits()},
                    {"ancilla", {{"index", h.num_qubits()}, {"convention", "highest-index"}, {"index_from_top", 0}}},
                    {"filter_steps", schedule.size()},
                    {"trotter_steps", o.trotter},
                    {"e0", e0},
                    {"scale", o.scale},
                    {"gates", c.gate_count()},
                    {"two_qubit_gates", c.two_qubit_gate_count()}};
    std::string qasm = emit_qasm(c);
    if (o.output.empty()) {
        out << qasm;
        err << summary.dump() << "\n";
    } else {
        write_file(o.output, qasm);
        out << summary.dump(2) << "\n";
    }
}

void cmd_spectrum(const Options &o, std::ostream &out) {
    PauliHamiltonian h = load_hamiltonian(o.hamiltonian);
    GroundState gs = checked_ground_state(h);
    json j = {{"num_qubits", h.num_qubits()}, {"e0", gs.energy}, {"gap", gs.gap}, {"eigenvalues", gs.spectrum}};
    emit(o, out, j.dump(2) + "\n");
}

void cmd_filter_lcu(const Options &o, std::ostream &out) {
    PauliHamiltonian h = load_hamiltonian(o.hamiltonian);
    if (!(o.scale > 0)) {
        throw ConfigError("--scale must be positive");
    }
    if (o.m < 1) {
        throw ConfigError("--m must be at least 1");
    }
    if (!(o.tail_tol > 0 && o.tail_tol < 1)) {
        throw ConfigError("--tail-tol must lie in (0, 1)");
    }
    GroundState gs = checked_ground_state(h);
    const double e0 = o.e0.value_or(gs.energy);
    PauliHamiltonian shifted = shift_rescale(h, e0, o.scale);
    std::vector<cplx> psi;
    if (o.lcu_trial == "ground") {
        psi = gs.vector;
    } else {
        psi = parse_trial(o.lcu_trial, h.num_qubits()).system_vector(h.num_qubits());
    }
    LcuExpansion e = lcu_coefficients(o.m, o.tail_tol);
    auto filtered = lcu_reference(shifted, e, psi);
    double norm = norm_squared(filtered);
    std::optional<double> energy;
    if (norm > 0) {
        for (auto &a : filtered) {
            a /= std::sqrt(norm);
        }
        energy = expectation_pauli(StateVector(filtered), h);
    }
    json j = {{"m", e.m},
              {"m0", e.m0},
              {"tail_mass", e.tail_mass},
              {"coefficients", e.coeffs},
              {"P_s", lcu_success_probability(shifted, e, psi)},
              {"energy_after_filter", energy.has_value() ? json(*energy) : json(nullptr)},
              {"e0", gs.energy}};
    emit(o, out, j.dump(2) + "\n");
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"State-vector simulation of projection-filter circuits", "nucsim"};
    app.require_subcommand(1);
    Options o;

    auto add_threads = [&](CLI::App *cmd) {
        cmd->add_option("--threads", o.threads, "Worker threads (default: NUCSIM_THREADS or 1)");
    };
    auto add_output = [&](CLI::App *cmd, const std::string &what) { cmd->add_option("--output", o.output, what); };

    auto *simulate = app.add_subcommand("simulate", "Fuse and simulate an OpenQASM circuit");
    simulate->add_option("--input", o.input, "OpenQASM 2.0 file")->required();
    simulate->add_option("--mode", o.mode, "mma or rejection")->check(CLI::IsMember({"mma", "rejection"}));
    simulate->add_option("--shots", o.shots, "Number of shots");
    simulate->add_option("--seed", o.seed, "Sampling seed");
    simulate->add_option("--ancilla", o.ancilla, "Ancilla qubit (default: first mid-circuit measurement)");
    simulate->add_flag("--no-fuse", o.no_fuse, "Skip gate fusion");
    simulate->add_option("--hamiltonian", o.hamiltonian, "Observable for the energy field");
    add_threads(simulate);
    add_output(simulate, "Report path (default: stdout)");

    auto *fuse = app.add_subcommand("fuse", "Run the fusion pipeline and print its statistics");
    fuse->add_option("--input", o.input, "OpenQASM 2.0 file")->required();
    fuse->add_flag("--decompose", o.decompose, "Write the fused circuit as standard gates");
    add_output(fuse, "Fused QASM path (with --decompose)");

    auto *prepare = app.add_subcommand("prepare", "Build a filter circuit from a Hamiltonian");
    prepare->add_option("--hamiltonian", o.hamiltonian, "Hamiltonian file")->required();
    prepare->add_option("--e0", o.e0, "Energy shift (default: exact ground energy)");
    prepare->add_option("--scale", o.scale, "Energy scale divisor");
    prepare->add_option("--schedule", o.schedule, "Schedule JSON {\"steps\": [{\"t\", \"delta\"}]}");
    prepare->add_option("--gap", o.gap, "Gap for the default schedule (default: exact gap)");
    prepare->add_option("--steps", o.steps, "Default-schedule step count");
    prepare->add_option("--trotter", o.trotter, "Trotter slices per step");
    prepare->add_option("--trial", o.trial, "Trial occupation string, character k = qubit k");
    add_output(prepare, "QASM path (default: stdout)");

    auto *spectrum = app.add_subcommand("spectrum", "Exact spectrum of a Hamiltonian");
    spectrum->add_option("--hamiltonian", o.hamiltonian, "Hamiltonian file")->required();
    add_output(spectrum, "Report path (default: stdout)");

    auto *lcu = app.add_subcommand("filter-lcu", "cos^2m filter as a linear combination of unitaries");
    lcu->add_option("--hamiltonian", o.hamiltonian, "Hamiltonian file")->required();
    lcu->add_option("--m", o.m, "Half power m");
    lcu->add_option("--tail-tol", o.tail_tol, "Tail mass tolerance for m0");
    lcu->add_option("--e0", o.e0, "Energy shift (default: exact ground energy)");
    lcu->add_option("--scale", o.scale, "Energy scale divisor");
    lcu->add_option("--trial", o.lcu_trial, "'ground' or an occupation string")->capture_default_str();
    add_output(lcu, "Report path (default: stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfigError;
    }
    try {
        if (simulate->parsed()) {
            cmd_simulate(o, out);
        } else if (fuse->parsed()) {
            cmd_fuse(o, out);
        } else if (prepare->parsed()) {
            cmd_prepare(o, out, err);
        } else if (spectrum->parsed()) {
            cmd_spectrum(o, out);
        } else {
            cmd_filter_lcu(o, out);
        }
    } catch (const AssertionFailure &e) {
        err << "nucsim: " << e.what() << " (step index " << e.step() << ")\n";
        return kExitAssertionFailure;
    } catch (const ResourceError &e) {
        err << "nucsim: resource guard: " << e.what() << "\n";
        return kExitResourceGuard;
    } catch (const std::length_error &e) {
        err << "nucsim: resource guard: " << e.what() << "\n";
        return kExitResourceGuard;
    } catch (const std::bad_alloc &) {
        err << "nucsim: resource guard: out of memory\n";
        return kExitResourceGuard;
    } catch (const std::exception &e) {
        err << "nucsim: " << e.what() << "\n";
        return kExitConfigError;
    }
    return kExitOk;
}

}  // namespace nucsim
