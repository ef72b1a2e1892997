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

#include <array>
#include <charconv>
#include <sstream>

#include "qddsim/circuit/qasm.hpp"

namespace qddsim {

namespace {

std::string format_angle(double v) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  (void)ec;
  return {buf.data(), end};
}

}  // namespace

std::string write_qasm(const Circuit& circuit) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  if (!circuit.name().empty()) out << "// " << circuit.name() << "\n";
  out << "qreg q[" << circuit.num_qubits() << "];\n";
  for (const auto& op : circuit.ops()) {
    out << op.name();
    if (!op.params.empty()) {
      out << '(';
      for (std::size_t i = 0; i < op.params.size(); ++i) {
        if (i) out << ',';
        out << format_angle(op.params[i]);
      }
      out << ')';
    }
    bool first = true;
    auto emit = [&](Qubit q) {
      out << (first ? " " : ",") << "q[" << q << ']';
      first = false;
    };
    for (Qubit q : op.controls) emit(q);
    for (Qubit q : op.targets) emit(q);
    out << ";\n";
  }
  return out.str();
}

}  // namespace qddsim
