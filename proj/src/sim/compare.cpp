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

#include <algorithm>
#include <cmath>
#include <limits>

#include "qddsim/sim/simulator.hpp"

namespace qddsim {

Comparison compare_orders(const Circuit& c, const CompareOptions& options) {
  Comparison cmp;
  cmp.circuit_name = c.name();
  cmp.num_qubits = c.num_qubits();
  cmp.num_gates = c.size();
  const std::size_t repeats = std::max<std::size_t>(options.repeats, 1);
  const bool verify = options.verify && c.num_qubits() <= options.verify_max_qubits;

  std::vector<Complex> reference;
  for (OrderStrategy strategy : options.strategies) {
    StrategySummary row;
    row.strategy = strategy;
    row.wall_ns = std::numeric_limits<std::int64_t>::max();
    SimConfig cfg = options.base;
    cfg.strategy = strategy;
    cfg.trace = false;
    for (std::size_t r = 0; r < repeats; ++r) {
      try {
        SimResult res = simulate(c, cfg);
        row.ok = true;
        row.order = res.order;
        row.wall_ns = std::min(row.wall_ns, res.wall_ns);
        row.ordering_ns = res.ordering_ns;
        row.final_nodes = res.final_nodes;
        row.max_nodes = res.max_nodes;
        row.apply_ops = res.total_apply_ops;
        if (verify && r == 0) {
          auto dense = res.dense_state();
          if (reference.empty()) {
            reference = std::move(dense);
          } else {
            for (std::size_t i = 0; i < dense.size(); ++i) {
              cmp.max_state_diff = std::max(cmp.max_state_diff, std::abs(dense[i] - reference[i]));
            }
          }
        }
      } catch (const std::exception& e) {
        row.ok = false;
        row.error = e.what();
        break;
      }
    }
    if (!row.ok) row.wall_ns = 0;
    cmp.rows.push_back(std::move(row));
  }
  if (verify) {
    cmp.verified = true;
    cmp.states_agree = cmp.max_state_diff <= options.verify_tolerance;
  }
  return cmp;
}

}  // namespace qddsim
