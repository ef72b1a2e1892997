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
#include <vector>

#include "qddsim/circuit/circuit.hpp"

namespace qddsim {

/// Per-qubit gate counts that drive the ordering heuristics.
struct CircuitStats {
  std::vector<std::size_t> n_ctrl;        // times the qubit is a control
  std::vector<std::size_t> n_param_gate;  // rotations touching it, pi/2 multiples excluded
  std::vector<std::size_t> n_gates;       // ops touching it
};

inline constexpr double kHalfPiMultipleTolerance = 1e-12;

bool is_half_pi_multiple(double angle);

/// True when the op's kind is parameterized and at least one of its angles is
/// not an integer multiple of pi/2.
bool has_effective_rotation(const GateOp& op);

CircuitStats circuit_stats(const Circuit& c);

}  // namespace qddsim
