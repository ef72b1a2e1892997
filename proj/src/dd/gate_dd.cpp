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

#include "qddsim/dd/gate_dd.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qddsim::dd {

MatrixDD make_gate_dd(Package& pkg, const GateOp& op, const QubitOrder& order) {
  if (order.size() != static_cast<std::size_t>(pkg.num_levels())) {
    throw std::invalid_argument("order size does not match the package");
  }
  validate_op(op, order.size());
  std::vector<MatrixDD> parts;
  for (const auto& cu : lower(op)) {
    std::vector<int> controls;
    controls.reserve(cu.controls.size());
    for (Qubit c : cu.controls) controls.push_back(order.level_of(c));
    parts.push_back(pkg.make_controlled_gate(cu.matrix, order.level_of(cu.target), controls));
  }
  if (parts.size() == 1) return parts.front();
  return pkg.compose(parts);
}

}  // namespace qddsim::dd
