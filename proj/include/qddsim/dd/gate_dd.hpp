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

#include "qddsim/circuit/gate.hpp"
#include "qddsim/dd/package.hpp"
#include "qddsim/ordering/qubit_order.hpp"

namespace qddsim::dd {

/// Full 2^n x 2^n operator of `op` with qubit q placed at order.level_of(q).
/// Two-target kinds are composed from their controlled single-target parts.
/// Throws std::invalid_argument for repeated or out-of-range qubits.
MatrixDD make_gate_dd(Package& pkg, const GateOp& op, const QubitOrder& order);

}  // namespace qddsim::dd
