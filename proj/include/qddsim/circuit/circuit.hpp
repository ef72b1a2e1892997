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

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "qddsim/circuit/gate.hpp"

namespace qddsim {

/// Qubit count plus gates in application order.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t num_qubits, std::string name = "circuit");

  std::size_t num_qubits() const { return num_qubits_; }
  const std::vector<GateOp>& ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Validates and appends. Throws std::invalid_argument on arity mismatch,
  /// out-of-range or repeated qubits.
  Circuit& add(GateOp op);
  Circuit& add(GateKind kind, std::vector<Qubit> controls, std::vector<Qubit> targets,
               std::vector<double> params = {});

  Circuit& x(Qubit q) { return add(GateKind::X, {}, {q}); }
  Circuit& y(Qubit q) { return add(GateKind::Y, {}, {q}); }
  Circuit& z(Qubit q) { return add(GateKind::Z, {}, {q}); }
  Circuit& h(Qubit q) { return add(GateKind::H, {}, {q}); }
  Circuit& s(Qubit q) { return add(GateKind::S, {}, {q}); }
  Circuit& sdg(Qubit q) { return add(GateKind::Sdg, {}, {q}); }
  Circuit& t(Qubit q) { return add(GateKind::T, {}, {q}); }
  Circuit& rx(double theta, Qubit q) { return add(GateKind::RX, {}, {q}, {theta}); }
  Circuit& ry(double theta, Qubit q) { return add(GateKind::RY, {}, {q}, {theta}); }
  Circuit& rz(double theta, Qubit q) { return add(GateKind::RZ, {}, {q}, {theta}); }
  Circuit& p(double lambda, Qubit q) { return add(GateKind::P, {}, {q}, {lambda}); }
  Circuit& cx(Qubit c, Qubit t) { return add(GateKind::CX, {c}, {t}); }
  Circuit& cz(Qubit c, Qubit t) { return add(GateKind::CZ, {c}, {t}); }
  Circuit& cp(double lambda, Qubit c, Qubit t) { return add(GateKind::CP, {c}, {t}, {lambda}); }
  Circuit& ccx(Qubit c0, Qubit c1, Qubit t) { return add(GateKind::CCX, {c0, c1}, {t}); }
  Circuit& swap(Qubit a, Qubit b) { return add(GateKind::SWAP, {}, {a, b}); }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t num_qubits_ = 0;
  std::vector<GateOp> ops_;
  std::string name_;
};

/// Throws std::invalid_argument describing the first violated invariant.
void validate_op(const GateOp& op, std::size_t num_qubits);

}  // namespace qddsim
