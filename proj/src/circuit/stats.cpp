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

#include "qddsim/circuit/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qddsim {

bool is_half_pi_multiple(double angle) {
  constexpr double kHalfPi = std::numbers::pi / 2;
  return std::abs(angle - std::round(angle / kHalfPi) * kHalfPi) <= kHalfPiMultipleTolerance;
}

bool has_effective_rotation(const GateOp& op) {
  if (!gate_info(op.kind).parameterized) return false;
  return std::any_of(op.params.begin(), op.params.end(), [](double p) { return !is_half_pi_multiple(p); });
}

CircuitStats circuit_stats(const Circuit& c) {
  const std::size_t n = c.num_qubits();
  CircuitStats s{std::vector<std::size_t>(n), std::vector<std::size_t>(n), std::vector<std::size_t>(n)};
  for (const auto& op : c.ops()) {
    for (Qubit q : op.controls) ++s.n_ctrl[q];
    const bool rotation = has_effective_rotation(op);
    auto touch = [&](Qubit q) {
      ++s.n_gates[q];
      if (rotation) ++s.n_param_gate[q];
    };
    for (Qubit q : op.controls) touch(q);
    for (Qubit q : op.targets) touch(q);
  }
  return s;
}

}  // namespace qddsim
