// Copyright 2026 The qddsim Authors
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
#include <vector>

#include "qddsim/circuit/circuit.hpp"

namespace qddsim {

/// Parse failure with a 1-based source position.
class QasmError : public std::runtime_error {
 public:
  QasmError(int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

inline constexpr int kMaxGateExpansionDepth = 64;

/// Parses the OpenQASM 2.0 subset used by benchmark circuits.
///
/// Supported: OPENQASM, include "qelib1.inc" (built in), qreg, creg, gate
/// definitions (inlined on use), gate applications with register broadcast,
/// barrier (ignored) and trailing measure (dropped, with a warning). Gate
/// applications after a measure, reset, if and opaque are rejected.
/// Quantum registers are flattened in declaration order.
Circuit parse_qasm(std::string_view text, std::vector<std::string>* warnings = nullptr);

/// Emits OpenQASM 2.0 that parse_qasm reads back to an op-identical circuit.
/// Angles are printed in shortest round-trip form.
std::string write_qasm(const Circuit& circuit);

}  // namespace qddsim
