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

#include "qddsim/ordering/qubit_order.hpp"

#include <stdexcept>

namespace qddsim {

QubitOrder::QubitOrder(std::vector<Qubit> perm) : perm_(std::move(perm)), level_(perm_.size(), -1) {
  for (std::size_t level = 0; level < perm_.size(); ++level) {
    const Qubit q = perm_[level];
    if (q >= perm_.size()) {
      throw std::invalid_argument("order entry " + std::to_string(q) + " out of range for " +
                                  std::to_string(perm_.size()) + " qubits");
    }
    if (level_[q] != -1) throw std::invalid_argument("order lists qubit " + std::to_string(q) + " twice");
    level_[q] = static_cast<int>(level);
  }
}

QubitOrder QubitOrder::identity(std::size_t n) {
  std::vector<Qubit> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Qubit>(i);
  return QubitOrder(std::move(perm));
}

QubitOrder QubitOrder::inverse() const {
  std::vector<Qubit> inv(perm_.size());
  for (std::size_t q = 0; q < level_.size(); ++q) inv[q] = static_cast<Qubit>(level_[q]);
  return QubitOrder(std::move(inv));
}

bool QubitOrder::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (perm_[i] != i) return false;
  }
  return true;
}

std::string QubitOrder::to_string(char sep) const {
  std::string out;
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(perm_[i]);
  }
  return out;
}

Circuit remap(const Circuit& c, const QubitOrder& order) {
  if (order.size() != c.num_qubits()) {
    throw std::invalid_argument("order has " + std::to_string(order.size()) + " entries, circuit has " +
                                std::to_string(c.num_qubits()) + " qubits");
  }
  Circuit out(c.num_qubits(), c.name());
  for (GateOp op : c.ops()) {
    for (Qubit& q : op.controls) q = static_cast<Qubit>(order.level_of(q));
    for (Qubit& q : op.targets) q = static_cast<Qubit>(order.level_of(q));
    out.add(std::move(op));
  }
  return out;
}

std::uint64_t permute_index(std::uint64_t index, const QubitOrder& order) {
  const std::size_t n = order.size();
  std::uint64_t out = 0;
  for (std::size_t level = 0; level < n; ++level) {
    const Qubit q = order.qubit_at(level);
    const std::uint64_t bit = (index >> (n - 1 - q)) & 1U;
    out |= bit << (n - 1 - level);
  }
  return out;
}

}  // namespace qddsim
