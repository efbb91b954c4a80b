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

#include <stdexcept>
#include <string>
#include <string_view>

#include "nucsim/circuit.h"

namespace nucsim {

/// Syntax or semantic error in OpenQASM input, with a 1-based source location.
class QasmError : public std::runtime_error {
   public:
    QasmError(const std::string &message, size_t line, size_t column);
    size_t line() const { return line_; }
    size_t column() const { return column_; }

   private:
    size_t line_;
    size_t column_;
};

/// Parses the OpenQASM 2.0 subset used by filtering circuits: the optional
/// header, `include "qelib1.inc"`, a single qreg, any number of cregs, the
/// qelib1 gates, measure, reset and barrier. Whole-register operands are
/// expanded to per-qubit instructions in ascending index order.
Circuit parse_qasm(std::string_view text);

struct EmitOptions {
    /// Lower C1 to u3 and C2 to cu3/x/u1/cu1 so fused circuits can be written.
    bool decompose = false;
};

/// Deterministic OpenQASM 2.0 text: one instruction per line, angles with 17
/// significant digits. Throws std::invalid_argument on C1/C2 gates unless
/// `options.decompose` is set.
std::string emit_qasm(const Circuit &circuit, EmitOptions options = {});

}  // namespace nucsim
