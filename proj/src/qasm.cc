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

#include "nucsim/qasm.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <vector>

namespace nucsim {

QasmError::QasmError(const std::string &message, size_t line, size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { kIdent, kNumber, kString, kSymbol, kArrow, kEnd };

struct Token {
    Tok kind = Tok::kEnd;
    std::string text;
    double number = 0;
    size_t line = 1;
    size_t column = 1;
};

class Lexer {
   public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_space_and_comments();
        Token t;
        t.line = line_;
        t.column = col_;
        if (pos_ >= src_.size()) {
            t.kind = Tok::kEnd;
            return t;
        }
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                advance();
            }
            t.kind = Tok::kIdent;
            t.text = std::string(src_.substr(start, pos_ - start));
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && pos_ + 1 < src_.size() &&
                                                            std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
            size_t start = pos_;
            while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.')) {
                advance();
            }
            if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
                size_t save = pos_;
                advance();
                if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
                    advance();
                }
                if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                        advance();
                    }
                } else {
                    pos_ = save;
                }
            }
            t.kind = Tok::kNumber;
            t.text = std::string(src_.substr(start, pos_ - start));
            char *end = nullptr;
            t.number = std::strtod(t.text.c_str(), &end);
            if (end != t.text.c_str() + t.text.size()) {
                throw QasmError("malformed number '" + t.text + "'", t.line, t.column);
            }
            return t;
        }
        if (c == '"') {
            advance();
            size_t start = pos_;
            while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
                advance();
            }
            if (pos_ >= src_.size() || src_[pos_] != '"') {
                throw QasmError("unterminated string literal", t.line, t.column);
            }
            t.kind = Tok::kString;
            t.text = std::string(src_.substr(start, pos_ - start));
            advance();
            return t;
        }
        if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
            advance();
            advance();
            t.kind = Tok::kArrow;
            t.text = "->";
            return t;
        }
        static constexpr std::string_view symbols = ";,[](){}+-*/^";
        if (symbols.find(c) != std::string_view::npos) {
            advance();
            t.kind = Tok::kSymbol;
            t.text = std::string(1, c);
            return t;
        }
        throw QasmError(std::string("unexpected character '") + c + "'", t.line, t.column);
    }

   private:
    void advance() {
        if (src_[pos_] == '\n') {
            line_++;
            col_ = 1;
        } else {
            col_++;
        }
        pos_++;
    }

    void skip_space_and_comments() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    advance();
                }
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    size_t pos_ = 0;
    size_t line_ = 1;
    size_t col_ = 1;
};

struct Operand {
    std::string reg;
    std::optional<uint32_t> index;
    size_t line;
    size_t column;
};

class Parser {
   public:
    explicit Parser(std::string_view text) : lexer_(text) { tok_ = lexer_.next(); }

    Circuit parse() {
        if (is_ident("OPENQASM")) {
            take();
            Token version = expect(Tok::kNumber, "version number");
            if (version.text != "2.0" && version.text != "2") {
                throw QasmError("only OpenQASM 2.0 is supported", version.line, version.column);
            }
            expect_symbol(";");
        }
        while (tok_.kind != Tok::kEnd) {
            statement();
        }
        if (!circuit_) {
            return Circuit(0);
        }
        return std::move(*circuit_);
    }

   private:
    // --- token helpers -----------------------------------------------------

    Token take() {
        Token t = std::move(tok_);
        tok_ = lexer_.next();
        return t;
    }

    bool is_ident(std::string_view s) const { return tok_.kind == Tok::kIdent && tok_.text == s; }
    bool is_symbol(std::string_view s) const { return tok_.kind == Tok::kSymbol && tok_.text == s; }

    [[noreturn]] void fail(const std::string &msg) const { throw QasmError(msg, tok_.line, tok_.column); }

    Token expect(Tok kind, const char *what) {
        if (tok_.kind != kind) {
            fail(std::string("expected ") + what + describe_current());
        }
        return take();
    }

    void expect_symbol(std::string_view s) {
        if (!is_symbol(s)) {
            fail("expected '" + std::string(s) + "'" + describe_current());
        }
        take();
    }

    std::string describe_current() const {
        if (tok_.kind == Tok::kEnd) {
            return " but reached end of input";
        }
        return " but found '" + tok_.text + "'";
    }

    uint32_t expect_uint(const char *what) {
        Token t = expect(Tok::kNumber, what);
        uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
            throw QasmError(std::string("expected a non-negative integer for ") + what, t.line, t.column);
        }
        return v;
    }

    // --- statements --------------------------------------------------------

    void statement() {
        if (tok_.kind != Tok::kIdent) {
            fail("expected a statement" + describe_current());
        }
        const std::string &word = tok_.text;
        if (word == "include") {
            take();
            Token file = expect(Tok::kString, "include file name");
            if (file.text != "qelib1.inc") {
                throw QasmError("only \"qelib1.inc\" may be included", file.line, file.column);
            }
            expect_symbol(";");
        } else if (word == "qreg") {
            Token kw = take();
            Token name = expect(Tok::kIdent, "register name");
            expect_symbol("[");
            uint32_t size = expect_uint("register size");
            expect_symbol("]");
            expect_symbol(";");
            if (circuit_) {
                throw QasmError("only one quantum register is supported", kw.line, kw.column);
            }
            circuit_.emplace(size, name.text);
            for (const auto &[cname, csize] : pending_cregs_) {
                circuit_->add_classical_register(cname, csize);
            }
            pending_cregs_.clear();
        } else if (word == "creg") {
            Token kw = take();
            Token name = expect(Tok::kIdent, "register name");
            expect_symbol("[");
            uint32_t size = expect_uint("register size");
            expect_symbol("]");
            expect_symbol(";");
            if (circuit_) {
                try {
                    circuit_->add_classical_register(name.text, size);
                } catch (const std::invalid_argument &e) {
                    throw QasmError(e.what(), name.line, name.column);
                }
            } else {
                for (const auto &p : pending_cregs_) {
                    if (p.first == name.text) {
                        throw QasmError("duplicate classical register '" + name.text + "'", name.line, name.column);
                    }
                }
                pending_cregs_.emplace_back(name.text, size);
            }
        } else if (word == "gate" || word == "opaque") {
            fail("user-defined '" + word + "' declarations are not supported");
        } else if (word == "if") {
            fail("classically controlled operations are not supported");
        } else if (word == "measure") {
            measure_statement();
        } else if (word == "reset") {
            take();
            Operand op = operand();
            expect_symbol(";");
            for (uint32_t q : resolve_qubits(op)) {
                circuit().append(Instruction::reset(q));
            }
        } else if (word == "barrier") {
            take();
            std::vector<uint32_t> qubits;
            for (;;) {
                Operand op = operand();
                for (uint32_t q : resolve_qubits(op)) {
                    if (std::find(qubits.begin(), qubits.end(), q) == qubits.end()) {
                        qubits.push_back(q);
                    }
                }
                if (!is_symbol(",")) {
                    break;
                }
                take();
            }
            expect_symbol(";");
            circuit().append(Instruction::barrier(std::move(qubits)));
        } else {
            gate_statement();
        }
    }

    void measure_statement() {
        Token kw = take();
        Operand src = operand();
        if (tok_.kind != Tok::kArrow) {
            fail("expected '->'" + describe_current());
        }
        take();
        Operand dst = operand();
        expect_symbol(";");
        std::vector<uint32_t> qubits = resolve_qubits(src);
        std::vector<uint32_t> bits = resolve_clbits(dst);
        if (qubits.size() != bits.size()) {
            throw QasmError("measure operands have different sizes", kw.line, kw.column);
        }
        for (size_t k = 0; k < qubits.size(); k++) {
            circuit().append(Instruction::measure(qubits[k], bits[k]));
        }
    }

    void gate_statement() {
        Token name = take();
        auto type = gate_type_from_name(name.text);
        if (!type) {
            throw QasmError("unknown gate '" + name.text + "'", name.line, name.column);
        }
        const GateInfo &info = gate_info(*type);
        std::vector<double> params;
        if (is_symbol("(")) {
            take();
            if (!is_symbol(")")) {
                params.push_back(expression());
                while (is_symbol(",")) {
                    take();
                    params.push_back(expression());
                }
            }
            expect_symbol(")");
        }
        if (params.size() != info.num_params) {
            throw QasmError("gate '" + name.text + "' expects " + std::to_string(info.num_params) +
                                " parameter(s), got " + std::to_string(params.size()),
                            name.line, name.column);
        }
        std::vector<Operand> ops;
        ops.push_back(operand());
        while (is_symbol(",")) {
            take();
            ops.push_back(operand());
        }
        expect_symbol(";");
        if (ops.size() != info.num_qubits) {
            throw QasmError("gate '" + name.text + "' expects " + std::to_string(info.num_qubits) + " qubit(s), got " +
                                std::to_string(ops.size()),
                            name.line, name.column);
        }

        // Register-wide operands broadcast over the register.
        std::vector<std::vector<uint32_t>> resolved;
        size_t width = 1;
        for (const auto &op : ops) {
            resolved.push_back(resolve_qubits(op));
            if (!op.index) {
                width = resolved.back().size();
            }
        }
        Gate gate = Gate::named(*type, params);
        for (size_t k = 0; k < width; k++) {
            std::vector<uint32_t> qubits;
            for (size_t j = 0; j < ops.size(); j++) {
                qubits.push_back(ops[j].index ? resolved[j][0] : resolved[j][k]);
            }
            try {
                circuit().append(Instruction::make_gate(gate, std::move(qubits)));
            } catch (const std::exception &e) {
                throw QasmError(e.what(), name.line, name.column);
            }
        }
    }

    Operand operand() {
        Token name = expect(Tok::kIdent, "register operand");
        Operand op{name.text, std::nullopt, name.line, name.column};
        if (is_symbol("[")) {
            take();
            op.index = expect_uint("register index");
            expect_symbol("]");
        }
        return op;
    }

    Circuit &circuit() {
        if (!circuit_) {
            fail("operation before any qreg declaration");
        }
        return *circuit_;
    }

    std::vector<uint32_t> resolve_qubits(const Operand &op) {
        Circuit &c = circuit();
        if (op.reg != c.qreg_name()) {
            throw QasmError("unknown quantum register '" + op.reg + "'", op.line, op.column);
        }
        if (op.index) {
            if (*op.index >= c.num_qubits()) {
                throw QasmError("qubit index " + std::to_string(*op.index) + " out of bounds for " + op.reg + "[" +
                                    std::to_string(c.num_qubits()) + "]",
                                op.line, op.column);
            }
            return {*op.index};
        }
        std::vector<uint32_t> all(c.num_qubits());
        for (uint32_t k = 0; k < c.num_qubits(); k++) {
            all[k] = k;
        }
        return all;
    }

    std::vector<uint32_t> resolve_clbits(const Operand &op) {
        Circuit &c = circuit();
        uint32_t offset = 0;
        for (const auto &r : c.classical_registers()) {
            if (r.name == op.reg) {
                if (op.index) {
                    if (*op.index >= r.size) {
                        throw QasmError("classical bit index " + std::to_string(*op.index) + " out of bounds for " +
                                            op.reg + "[" + std::to_string(r.size) + "]",
                                        op.line, op.column);
                    }
                    return {offset + *op.index};
                }
                std::vector<uint32_t> bits(r.size);
                for (uint32_t k = 0; k < r.size; k++) {
                    bits[k] = offset + k;
                }
                return bits;
            }
            offset += r.size;
        }
        throw QasmError("unknown classical register '" + op.reg + "'", op.line, op.column);
    }

    // --- angle expressions -------------------------------------------------

    double expression() {
        double v = term();
        while (is_symbol("+") || is_symbol("-")) {
            bool plus = take().text == "+";
            double rhs = term();
            v = plus ? v + rhs : v - rhs;
        }
        return v;
    }

    double term() {
        double v = unary();
        while (is_symbol("*") || is_symbol("/")) {
            bool times = take().text == "*";
            double rhs = unary();
            v = times ? v * rhs : v / rhs;
        }
        return v;
    }

    double unary() {
        if (is_symbol("-")) {
            take();
            return -unary();
        }
        if (is_symbol("+")) {
            take();
            return unary();
        }
        double base = primary();
        if (is_symbol("^")) {
            take();
            return std::pow(base, unary());
        }
        return base;
    }

    double primary() {
        if (tok_.kind == Tok::kNumber) {
            return take().number;
        }
        if (is_symbol("(")) {
            take();
            double v = expression();
            expect_symbol(")");
            return v;
        }
        if (tok_.kind == Tok::kIdent) {
            Token id = take();
            if (id.text == "pi") {
                return std::numbers::pi;
            }
            using Fn = double (*)(double);
            static const std::pair<std::string_view, Fn> functions[] = {
                {"sin", [](double x) { return std::sin(x); }},   {"cos", [](double x) { return std::cos(x); }},
                {"tan", [](double x) { return std::tan(x); }},   {"exp", [](double x) { return std::exp(x); }},
                {"ln", [](double x) { return std::log(x); }},    {"sqrt", [](double x) { return std::sqrt(x); }},
            };
            for (const auto &[fname, fn] : functions) {
                if (id.text == fname) {
                    expect_symbol("(");
                    double v = expression();
                    expect_symbol(")");
                    return fn(v);
                }
            }
            throw QasmError("unknown identifier '" + id.text + "' in expression", id.line, id.column);
        }
        fail("expected an expression" + describe_current());
    }

    Lexer lexer_;
    Token tok_;
    std::optional<Circuit> circuit_;
    std::vector<std::pair<std::string, uint32_t>> pending_cregs_;
};

// --- emission --------------------------------------------------------------

std::string fmt_angle(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

class Emitter {
   public:
    Emitter(const Circuit &c, EmitOptions options) : c_(c), options_(options) {
        for (const auto &r : c.classical_registers()) {
            for (uint32_t k = 0; k < r.size; k++) {
                clbit_names_.push_back(r.name + "[" + std::to_string(k) + "]");
            }
        }
    }

    std::string run() {
        out_ += "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
        out_ += "qreg " + c_.qreg_name() + "[" + std::to_string(c_.num_qubits()) + "];\n";
        for (const auto &r : c_.classical_registers()) {
            out_ += "creg " + r.name + "[" + std::to_string(r.size) + "];\n";
        }
        for (const auto &inst : c_.instructions()) {
            switch (inst.kind) {
                case OpKind::kGate:
                    gate(inst);
                    break;
                case OpKind::kMeasure:
                    out_ += "measure " + q(inst.qubits[0]) + " -> " + clbit_names_.at(inst.clbit) + ";\n";
                    break;
                case OpKind::kReset:
                    out_ += "reset " + q(inst.qubits[0]) + ";\n";
                    break;
                case OpKind::kBarrier:
                    barrier(inst);
                    break;
            }
        }
        return std::move(out_);
    }

   private:
    std::string q(uint32_t k) const { return c_.qreg_name() + "[" + std::to_string(k) + "]"; }

    void barrier(const Instruction &inst) {
        bool full = inst.qubits.size() == c_.num_qubits();
        for (size_t k = 0; full && k < inst.qubits.size(); k++) {
            full = inst.qubits[k] == k;
        }
        if (full && !inst.qubits.empty()) {
            out_ += "barrier " + c_.qreg_name() + ";\n";
            return;
        }
        out_ += "barrier";
        for (size_t k = 0; k < inst.qubits.size(); k++) {
            out_ += (k == 0 ? " " : ",") + q(inst.qubits[k]);
        }
        out_ += ";\n";
    }

    void line(std::string_view name, std::initializer_list<double> params, std::initializer_list<uint32_t> qubits) {
        out_ += name;
        if (params.size() > 0) {
            out_ += "(";
            bool first = true;
            for (double p : params) {
                out_ += (first ? "" : ",") + fmt_angle(p);
                first = false;
            }
            out_ += ")";
        }
        bool first = true;
        for (uint32_t k : qubits) {
            out_ += (first ? " " : ",") + q(k);
            first = false;
        }
        out_ += ";\n";
    }

    void gate(const Instruction &inst) {
        const Gate &g = inst.gate;
        if (g.type == GateType::C1 || g.type == GateType::C2) {
            if (!options_.decompose) {
                throw std::invalid_argument("Fused C1/C2 gates have no OpenQASM 2.0 name; emit with decompose.");
            }
            if (g.type == GateType::C1) {
                U3Angles a = u3_angles(gate_matrix(g));
                line("u3", {a.theta, a.phi, a.lambda}, {inst.qubits[0]});
            } else {
                decompose_two_qubit(gate_matrix(g), inst.qubits[0], inst.qubits[1]);
            }
            return;
        }
        const GateInfo &info = gate_info(g.type);
        out_ += info.name;
        if (info.num_params > 0) {
            out_ += "(";
            for (size_t k = 0; k < info.num_params; k++) {
                out_ += (k == 0 ? "" : ",") + fmt_angle(g.params[k]);
            }
            out_ += ")";
        }
        for (size_t k = 0; k < inst.qubits.size(); k++) {
            out_ += (k == 0 ? " " : ",") + q(inst.qubits[k]);
        }
        out_ += ";\n";
    }

    // Controlled 2×2 unitary `w` on `target`, active when `control` reads
    // `value`.
    void controlled(const Matrix &w, uint32_t control, uint32_t target, int value) {
        if (value == 0) {
            line("x", {}, {control});
        }
        U3Angles a = u3_angles(w);
        line("cu3", {a.theta, a.phi, a.lambda}, {control, target});
        if (a.phase != 0) {
            line("u1", {a.phase}, {control});
        }
        if (value == 0) {
            line("x", {}, {control});
        }
    }

    // Two-level elimination of a 4×4 unitary on (a, b), index = bit_a + 2·bit_b.
    // Six Givens steps reduce U to a diagonal D; U = G1†…G6† D is emitted
    // as D first, then G6† … G1†.
    void decompose_two_qubit(Matrix u, uint32_t a, uint32_t b) {
        struct Rotation {
            size_t lo;
            size_t hi;
            Matrix g;  // acts on (lo, hi)
        };
        std::vector<Rotation> steps;
        // (column, row kept, row zeroed)
        static constexpr size_t plan[6][3] = {{0, 2, 3}, {0, 0, 2}, {0, 0, 1}, {1, 3, 2}, {1, 1, 3}, {2, 2, 3}};
        for (const auto &p : plan) {
            size_t col = p[0], keep = p[1], zero = p[2];
            cplx xk = u(keep, col);
            cplx xz = u(zero, col);
            double norm = std::sqrt(std::norm(xk) + std::norm(xz));
            if (std::abs(xz) < 1e-15) {
                continue;
            }
            // Rows (keep, zero) <- G (keep, zero); second row annihilates xz.
            Matrix g = Matrix::square(2, {std::conj(xk) / norm, std::conj(xz) / norm, -xz / norm, xk / norm});
            for (size_t c = 0; c < 4; c++) {
                cplx rk = u(keep, c);
                cplx rz = u(zero, c);
                u(keep, c) = g(0, 0) * rk + g(0, 1) * rz;
                u(zero, c) = g(1, 0) * rk + g(1, 1) * rz;
            }
            size_t lo = std::min(keep, zero);
            size_t hi = std::max(keep, zero);
            if (keep != lo) {
                Matrix x = Matrix::square(2, {0, 1, 1, 0});
                g = x * g * x;
            }
            steps.push_back({lo, hi, std::move(g)});
        }

        cplx d0 = u(0, 0);
        double alpha = std::arg(u(1, 1) / d0);
        double beta = std::arg(u(2, 2) / d0);
        double gamma = std::arg(u(3, 3) / d0) - alpha - beta;
        line("u1", {alpha}, {a});
        line("u1", {beta}, {b});
        line("cu1", {gamma}, {a, b});

        for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
            Matrix w = it->g.adjoint();
            size_t diff = it->lo ^ it->hi;
            if (diff == 1) {
                // Target a, control b.
                controlled(w, b, a, static_cast<int>((it->lo >> 1) & 1));
            } else {
                controlled(w, a, b, static_cast<int>(it->lo & 1));
            }
        }
    }

    const Circuit &c_;
    EmitOptions options_;
    std::vector<std::string> clbit_names_;
    std::string out_;
};

}  // namespace

Circuit parse_qasm(std::string_view text) {
    return Parser(text).parse();
}

std::string emit_qasm(const Circuit &circuit, EmitOptions options) {
    return Emitter(circuit, options).run();
}

}  // namespace nucsim
