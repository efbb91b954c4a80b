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

#include <gtest/gtest.h>
#include <stdlib.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "nucsim/qasm.h"
#include "random_hamiltonian.h"

using namespace nucsim;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("nucsim_cli_" + std::to_string(::getpid()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string &name, const std::string &text) {
        auto p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string path(const std::string &name) const { return (dir_ / name).string(); }
    static std::string read(const std::string &p) {
        std::ifstream in(p);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    fs::path dir_;
};

// Eight ancilla steps whose P(0) values are `probs`.
std::string fixed_probability_qasm(const std::vector<double> &probs) {
    Circuit c(2);
    uint32_t c_off = c.add_classical_register("c", static_cast<uint32_t>(probs.size()));
    uint32_t r_off = c.add_classical_register("r", 2);
    c.gate(GateType::H, {0});
    for (size_t i = 0; i < probs.size(); i++) {
        c.gate(GateType::RY, {1}, {2 * std::acos(std::sqrt(probs[i]))});
        c.measure(1, c_off + static_cast<uint32_t>(i));
        c.barrier_all();
        c.reset(1);
        c.barrier_all();
    }
    c.measure(0, r_off);
    c.measure(1, r_off + 1);
    return emit_qasm(c);
}

std::string pauli_text(const PauliHamiltonian &h) {
    std::ostringstream text;
    text.precision(17);
    for (const auto &term : h.terms()) {
        text << term.coefficient.real() << " " << term.string.letters() << "\n";
    }
    return text.str();
}

json without_wall_time(json j) {
    j.erase("wall_time_s");
    return j;
}

}  // namespace

TEST_F(CliTest, spectrum_examples) {
    auto z = cli({"spectrum", "--hamiltonian", write("z.txt", "1.0 Z\n")});
    ASSERT_EQ(z.code, kExitOk) << z.err;
    auto j = json::parse(z.out);
    EXPECT_EQ(j["e0"], -1.0);
    EXPECT_EQ(j["gap"], 2.0);

    auto hop = cli({"spectrum", "--hamiltonian", write("hop.txt", "t 0 1 1.0\n")});
    ASSERT_EQ(hop.code, kExitOk) << hop.err;
    j = json::parse(hop.out);
    EXPECT_NEAR(j["e0"].get<double>(), -1.0, 1e-12);
    EXPECT_NEAR(j["gap"].get<double>(), 1.0, 1e-12);

    EXPECT_EQ(cli({"spectrum", "--hamiltonian", write("empty.txt", "# nothing\n")}).code, kExitConfigError);
    EXPECT_EQ(cli({"spectrum", "--hamiltonian", write("bad.txt", "1.0 Q\n")}).code, kExitConfigError);
    EXPECT_EQ(cli({"spectrum", "--hamiltonian", write("big.txt", "1.0 " + std::string(15, 'Z') + "\n")}).code,
              kExitResourceGuard);
}

TEST_F(CliTest, prepare_minimal_instance) {
    auto r = cli({"prepare", "--hamiltonian", write("z.txt", "1.0 Z\n"), "--steps", "1", "--trotter", "1", "--output",
                  path("z.qasm")});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto summary = json::parse(r.out);
    Circuit c = parse_qasm(read(path("z.qasm")));
    EXPECT_EQ(summary["gates"], c.gate_count());
    EXPECT_EQ(summary["two_qubit_gates"], c.two_qubit_gate_count());
    size_t measures_before_final = 0;
    size_t resets = 0;
    for (const auto &inst : c.instructions()) {
        resets += inst.kind == OpKind::kReset;
    }
    for (size_t k = 0; k < c.size() && c.instructions()[k].kind != OpKind::kReset; k++) {
        measures_before_final += c.instructions()[k].kind == OpKind::kMeasure;
    }
    EXPECT_EQ(resets, 1u);
    EXPECT_EQ(measures_before_final, 1u);

    // Without --output the QASM goes to stdout.
    auto to_stdout = cli({"prepare", "--hamiltonian", path("z.txt"), "--steps", "1"});
    ASSERT_EQ(to_stdout.code, kExitOk);
    EXPECT_EQ(parse_qasm(to_stdout.out), c);
}

TEST_F(CliTest, prepare_trotter_doubling) {
    std::string h = write("h.txt", "0.5 ZI\n0.3 XX\n-0.2 YY\n");
    auto gates = [&](const std::string &r) {
        auto res = cli({"prepare", "--hamiltonian", h, "--steps", "2", "--trotter", r, "--output", path("o.qasm")});
        EXPECT_EQ(res.code, kExitOk) << res.err;
        return json::parse(res.out)["gates"].get<size_t>();
    };
    size_t g1 = gates("1"), g2 = gates("2"), g4 = gates("4");
    EXPECT_EQ(g4 - g2, 2 * (g2 - g1));
    EXPECT_EQ(g1 - (g2 - g1), 2u);  // one RY per step
}

TEST_F(CliTest, prepare_schedule_file_and_errors) {
    std::string h = write("h.txt", "0.5 ZI\n0.3 XX\n");
    std::string sched = write("s.json", R"({"steps": [{"t": 0.5, "delta": 0.1}, {"t": 0.25}]})");
    auto r = cli({"prepare", "--hamiltonian", h, "--schedule", sched, "--trial", "10", "--output", path("o.qasm")});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(json::parse(r.out)["filter_steps"], 2);
    Circuit c = parse_qasm(read(path("o.qasm")));
    EXPECT_EQ(c.instructions()[0].gate.type, GateType::X);

    EXPECT_EQ(cli({"prepare", "--hamiltonian", h, "--schedule", write("bad.json", "{\"steps\": []}")}).code,
              kExitConfigError);
    EXPECT_EQ(cli({"prepare", "--hamiltonian", h, "--schedule", write("neg.json", R"({"steps":[{"t":-1}]})")}).code,
              kExitConfigError);
    EXPECT_EQ(cli({"prepare", "--hamiltonian", h, "--schedule", sched, "--gap", "1"}).code, kExitConfigError);
    EXPECT_EQ(cli({"prepare", "--hamiltonian", h, "--trial", "1"}).code, kExitConfigError);
    EXPECT_EQ(cli({"prepare", "--hamiltonian", h, "--trotter", "0"}).code, kExitConfigError);
    EXPECT_EQ(cli({"prepare", "--hamiltonian", h, "--gap", "-1"}).code, kExitConfigError);
}

TEST_F(CliTest, simulate_table5_circuit) {
    std::vector<double> probs{0.29602, 0.48617, 0.69349, 0.74823, 0.73060, 0.77238, 0.93470, 0.95811};
    std::string q = write("t5.qasm", fixed_probability_qasm(probs));
    auto r = cli({"simulate", "--input", q});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["assert_probs"].size(), 8u);
    EXPECT_NEAR(j["overall_success"].get<double>(), 0.037738, 5e-6);
    EXPECT_EQ(j["mode"], "mma");
    EXPECT_EQ(j["ancilla"]["index"], 1);
    EXPECT_EQ(j["ancilla"]["convention"], "highest-index");
    EXPECT_TRUE(j["energy"].is_null());
    EXPECT_EQ(j["fusion_stats"]["per_pass"].size(), 4u);

    auto rej = cli({"simulate", "--input", q, "--mode", "rejection", "--seed", "3"});
    ASSERT_EQ(rej.code, kExitOk);
    auto jr = json::parse(rej.out);
    EXPECT_EQ(jr["rejected_per_step"].size(), 8u);
    EXPECT_TRUE(jr["assert_probs"].empty());
}

TEST_F(CliTest, simulate_fused_and_unfused_agree) {
    std::mt19937_64 rng(30);
    auto h = testing_hamiltonians::random_pauli_hamiltonian(3, 8, rng);
    std::string hp = write("h.txt", pauli_text(h));
    ASSERT_EQ(cli({"prepare", "--hamiltonian", hp, "--steps", "3", "--trotter", "3", "--output", path("p.qasm")}).code,
              kExitOk);
    auto fused = cli({"simulate", "--input", path("p.qasm"), "--hamiltonian", hp});
    auto plain = cli({"simulate", "--input", path("p.qasm"), "--hamiltonian", hp, "--no-fuse"});
    ASSERT_EQ(fused.code, kExitOk) << fused.err;
    ASSERT_EQ(plain.code, kExitOk) << plain.err;
    auto a = json::parse(fused.out);
    auto b = json::parse(plain.out);
    ASSERT_EQ(a["assert_probs"].size(), 3u);
    for (size_t k = 0; k < 3; k++) {
        EXPECT_NEAR(a["assert_probs"][k].get<double>(), b["assert_probs"][k].get<double>(), 1e-9);
    }
    EXPECT_NEAR(a["energy"].get<double>(), b["energy"].get<double>(), 1e-9);
    EXPECT_TRUE(b["fusion_stats"].is_null());
    EXPECT_GT(a["fusion_stats"]["reduction_factor"].get<double>(), 1.0);
}

TEST_F(CliTest, simulate_threads_do_not_change_report) {
    std::mt19937_64 rng(31);
    PauliHamiltonian h = testing_hamiltonians::random_pauli_hamiltonian(13, 6, rng);
    std::string hp = write("h.txt", pauli_text(h));
    ASSERT_EQ(cli({"prepare", "--hamiltonian", hp, "--e0", "0", "--gap", "0.5", "--steps", "2", "--output",
                   path("p.qasm")})
                  .code,
              kExitOk);
    auto one = cli({"simulate", "--input", path("p.qasm"), "--hamiltonian", hp, "--threads", "1", "--seed", "9"});
    auto four = cli({"simulate", "--input", path("p.qasm"), "--hamiltonian", hp, "--threads", "4", "--seed", "9"});
    ASSERT_EQ(one.code, kExitOk) << one.err;
    ASSERT_EQ(four.code, kExitOk) << four.err;
    EXPECT_EQ(without_wall_time(json::parse(one.out)).dump(), without_wall_time(json::parse(four.out)).dump());
}

TEST_F(CliTest, simulate_exit_codes) {
    EXPECT_EQ(cli({"simulate", "--input", path("missing.qasm")}).code, kExitConfigError);
    EXPECT_EQ(cli({"simulate", "--input", write("bad.qasm", "OPENQASM 2.0;\nqreg q[1];\nfoo q[0];\n")}).code,
              kExitConfigError);
    std::string ok = write("ok.qasm", "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[1];\nh q[0];\n");
    EXPECT_EQ(cli({"simulate", "--input", ok, "--mode", "other"}).code, kExitConfigError);
    EXPECT_EQ(cli({"simulate", "--input", ok, "--shots", "0"}).code, kExitConfigError);
    EXPECT_EQ(cli({"simulate", "--input", ok, "--threads", "0"}).code, kExitConfigError);
    EXPECT_EQ(cli({}).code, kExitConfigError);
    EXPECT_EQ(cli({"--help"}).code, kExitOk);

    std::string doomed = write("doomed.qasm",
                               "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\ncreg c[1];\n"
                               "x q[1];\nmeasure q[1] -> c[0];\nreset q[1];\nh q[0];\n");
    auto failed = cli({"simulate", "--input", doomed});
    EXPECT_EQ(failed.code, kExitAssertionFailure);
    EXPECT_NE(failed.err.find("step index 0"), std::string::npos);

    std::string shape = write("shape.qasm",
                              "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\ncreg c[1];\n"
                              "h q[1];\nmeasure q[1] -> c[0];\nh q[0];\n");
    EXPECT_EQ(cli({"simulate", "--input", shape}).code, kExitConfigError);
    EXPECT_EQ(cli({"simulate", "--input", shape, "--mode", "rejection"}).code, kExitOk);

    std::string huge = write("huge.qasm", "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[45];\nh q[0];\n");
    EXPECT_EQ(cli({"simulate", "--input", huge}).code, kExitResourceGuard);
}

TEST_F(CliTest, threads_environment_default) {
    std::string ok = write("ok.qasm", "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[1];\nh q[0];\n");
    ::setenv("NUCSIM_THREADS", "two", 1);
    EXPECT_EQ(cli({"simulate", "--input", ok}).code, kExitConfigError);
    EXPECT_EQ(cli({"simulate", "--input", ok, "--threads", "2"}).code, kExitOk);
    ::setenv("NUCSIM_THREADS", "3", 1);
    EXPECT_EQ(cli({"simulate", "--input", ok}).code, kExitOk);
    ::unsetenv("NUCSIM_THREADS");
}

TEST_F(CliTest, simulate_writes_output_file) {
    std::string ok = write("ok.qasm",
                           "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[1];\ncreg r[1];\nx q[0];\n"
                           "measure q[0] -> r[0];\n");
    auto r = cli({"simulate", "--input", ok, "--output", path("report.json"), "--shots", "7"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_TRUE(r.out.empty());
    auto j = json::parse(read(path("report.json")));
    EXPECT_EQ(j["samples"]["1"], 7);
    EXPECT_EQ(j["shots"], 7);
}

TEST_F(CliTest, fuse_reports_passes) {
    std::string barriers = write("b.qasm", "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\nbarrier q;\n");
    auto r = cli({"fuse", "--input", barriers});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["reduction_factor"], 1.0);
    ASSERT_EQ(j["per_pass"].size(), 4u);
    EXPECT_EQ(j["per_pass"][0]["name"], "merge_1q");
    EXPECT_EQ(j["per_pass"][1]["name"], "absorb_1q");
    EXPECT_EQ(j["per_pass"][2]["name"], "normalize_2q_order");
    EXPECT_EQ(j["per_pass"][3]["name"], "fuse_2q");

    std::mt19937_64 rng(32);
    auto h = testing_hamiltonians::random_pauli_hamiltonian(4, 16, rng);
    std::string hp = write("h.txt", pauli_text(h));
    ASSERT_EQ(cli({"prepare", "--hamiltonian", hp, "--steps", "4", "--trotter", "10", "--output", path("p.qasm")}).code,
              kExitOk);
    auto big = json::parse(cli({"fuse", "--input", path("p.qasm")}).out);
    EXPECT_GE(big["gates_before"].get<size_t>(), 10000u);
    EXPECT_GE(big["reduction_factor"].get<double>(), 1.5);

    auto dec = cli({"fuse", "--input", path("p.qasm"), "--decompose", "--output", path("f.qasm")});
    ASSERT_EQ(dec.code, kExitOk) << dec.err;
    auto a = json::parse(cli({"simulate", "--input", path("p.qasm"), "--no-fuse"}).out);
    auto b = json::parse(cli({"simulate", "--input", path("f.qasm"), "--no-fuse"}).out);
    for (size_t k = 0; k < a["assert_probs"].size(); k++) {
        EXPECT_NEAR(a["assert_probs"][k].get<double>(), b["assert_probs"][k].get<double>(), 1e-9);
    }
    EXPECT_EQ(cli({"fuse", "--input", path("p.qasm"), "--output", path("g.qasm")}).code, kExitConfigError);
}

TEST_F(CliTest, filter_lcu_examples) {
    std::string h = write("h.txt", "0.5 ZI\n0.3 XX\n-0.2 II\n");
    auto r = cli({"filter-lcu", "--hamiltonian", h, "--m", "1"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["coefficients"], json({0.25, 0.5, 0.25}));
    EXPECT_NEAR(j["P_s"].get<double>(), 1.0, 1e-12);
    EXPECT_NEAR(j["energy_after_filter"].get<double>(), j["e0"].get<double>(), 1e-12);

    double prev = 1.0;
    for (const char *tol : {"1e-2", "1e-4", "1e-8"}) {
        auto k = json::parse(cli({"filter-lcu", "--hamiltonian", h, "--m", "40", "--tail-tol", tol}).out);
        EXPECT_LE(k["tail_mass"].get<double>(), prev);
        prev = k["tail_mass"].get<double>();
    }
    auto trial = cli({"filter-lcu", "--hamiltonian", h, "--m", "8", "--trial", "11"});
    ASSERT_EQ(trial.code, kExitOk) << trial.err;
    EXPECT_LT(json::parse(trial.out)["P_s"].get<double>(), 1.0);
    EXPECT_EQ(cli({"filter-lcu", "--hamiltonian", h, "--m", "2", "--scale", "0.1"}).code, kExitConfigError);
    EXPECT_EQ(cli({"filter-lcu", "--hamiltonian", h, "--tail-tol", "2"}).code, kExitConfigError);
}
