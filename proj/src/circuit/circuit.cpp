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

#include "qddsim/circuit/circuit.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace qddsim {

Circuit::Circuit(std::size_t num_qubits, std::string name)
    : num_qubits_(num_qubits), name_(std::move(name)) {
  if (num_qubits == 0) throw std::invalid_argument("circuit needs at least one qubit");
}

void validate_op(const GateOp& op, std::size_t num_qubits) {
  const auto& info = gate_info(op.kind);
  const std::string name(info.name);
  if (info.num_controls >= 0 && op.controls.size() != static_cast<std::size_t>(info.num_controls)) {
    throw std::invalid_argument("gate '" + name + "' expects " + std::to_string(info.num_controls) +
                                " control(s), got " + std::to_string(op.controls.size()));
  }
  if (info.num_controls < 0 && op.controls.empty()) {
    throw std::invalid_argument("gate '" + name + "' needs at least one control");
  }
  if (op.targets.size() != static_cast<std::size_t>(info.num_targets)) {
    throw std::invalid_argument("gate '" + name + "' expects " + std::to_string(info.num_targets) +
                                " target(s), got " + std::to_string(op.targets.size()));
  }
  if (op.params.size() != static_cast<std::size_t>(info.num_params)) {
    throw std::invalid_argument("gate '" + name + "' expects " + std::to_string(info.num_params) +
                                " parameter(s), got " + std::to_string(op.params.size()));
  }
  for (double p : op.params) {
    if (!std::isfinite(p)) throw std::invalid_argument("gate '" + name + "' has a non-finite parameter");
  }
  std::unordered_set<Qubit> seen;
  auto check = [&](Qubit q) {
    if (q >= num_qubits) {
      throw std::invalid_argument("gate '" + name + "' uses qubit " + std::to_string(q) +
                                  " but the circuit has " + std::to_string(num_qubits));
    }
    if (!seen.insert(q).second) {
      throw std::invalid_argument("gate '" + name + "' uses qubit " + std::to_string(q) + " twice");
    }
  };
  for (Qubit q : op.controls) check(q);
  for (Qubit q : op.targets) check(q);
}

Circuit& Circuit::add(GateOp op) {
  validate_op(op, num_qubits_);
  ops_.push_back(std::move(op));
  return *this;
}

Circuit& Circuit::add(GateKind kind, std::vector<Qubit> controls, std::vector<Qubit> targets,
                      std::vector<double> params) {
  return add(GateOp{kind, std::move(controls), std::move(targets), std::move(params)});
}

}  // namespace qddsim
