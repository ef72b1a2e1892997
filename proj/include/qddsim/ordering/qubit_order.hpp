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
#include <cstdint>
#include <string>
#include <vector>

#include "qddsim/circuit/circuit.hpp"

namespace qddsim {

/// Bijection between circuit qubits and DD levels. perm()[level] is the qubit
/// placed at that level; level 0 is the top of the diagram.
class QubitOrder {
 public:
  QubitOrder() = default;
  /// Throws std::invalid_argument unless `perm` is a permutation of 0..n-1.
  explicit QubitOrder(std::vector<Qubit> perm);

  static QubitOrder identity(std::size_t n);

  std::size_t size() const { return perm_.size(); }
  const std::vector<Qubit>& perm() const { return perm_; }
  Qubit qubit_at(std::size_t level) const { return perm_.at(level); }
  int level_of(Qubit q) const { return level_.at(q); }

  QubitOrder inverse() const;
  bool is_identity() const;
  std::string to_string(char sep = ',') const;

  friend bool operator==(const QubitOrder& a, const QubitOrder& b) { return a.perm_ == b.perm_; }

 private:
  std::vector<Qubit> perm_;
  std::vector<int> level_;
};

/// Relabels every qubit q of the circuit as order.level_of(q).
Circuit remap(const Circuit& c, const QubitOrder& order);

/// Maps a qubit-space basis index (qubit 0 is the most significant bit) to the
/// level-space index of the same basis state under `order`.
std::uint64_t permute_index(std::uint64_t index, const QubitOrder& order);

}  // namespace qddsim
