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

#include "qddsim/sim/simulator.hpp"

#include <algorithm>
#include <string>

#include "qddsim/dd/gate_dd.hpp"

namespace qddsim {

Complex SimResult::amplitude(std::uint64_t index) const {
  return package->amplitude(final_state, permute_index(index, order));
}

std::vector<Complex> SimResult::dense_state() const {
  if (num_qubits > 30) throw std::length_error("dense state limited to 30 qubits");
  const auto level_space = package->to_dense(final_state);
  std::vector<Complex> out(level_space.size());
  for (std::uint64_t i = 0; i < out.size(); ++i) out[i] = level_space[permute_index(i, order)];
  return out;
}

SimResult simulate(const Circuit& c, const SimConfig& config, const GateObserver& observer) {
  using Clock = std::chrono::steady_clock;
  if (config.trace_stride == 0) throw std::invalid_argument("trace stride must be at least 1");
  if (c.num_qubits() == 0) throw std::invalid_argument("circuit has no qubits");

  OrderingOptions oopts;
  oopts.adjacency_timeout = config.ordering_timeout;
  oopts.explicit_order = config.explicit_order;
  auto ordering = compute_order(c, config.strategy, oopts);

  SimResult result;
  result.strategy = config.strategy;
  result.order = std::move(ordering.order);
  result.score_report = std::move(ordering.report);
  result.warnings = std::move(ordering.warnings);
  result.ordering_ns = ordering.elapsed.count();
  result.num_qubits = c.num_qubits();
  result.num_gates = c.size();
  result.package = std::make_shared<dd::Package>(static_cast<int>(c.num_qubits()), config.tolerance);
  if (config.trace) result.trace.emplace();

  auto& pkg = *result.package;
  dd::VectorDD state = pkg.make_zero_state();
  result.max_nodes = dd::node_count(state.root);

  Clock::duration busy{0};
  for (std::size_t g = 0; g < c.size(); ++g) {
    const GateOp& op = c.ops()[g];
    const auto start = Clock::now();
    const dd::MatrixDD gate = dd::make_gate_dd(pkg, op, result.order);
    state = pkg.apply(gate, state);
    busy += Clock::now() - start;

    if (pkg.live_nodes() > config.gc_watermark) {
      const auto gc_start = Clock::now();
      pkg.gc(std::span(&state.root, 1));
      busy += Clock::now() - gc_start;
      if (pkg.live_vector_nodes() > config.gc_watermark) {
        throw SimulationError("node budget exceeded at gate " + std::to_string(g) + " (" +
                                  std::to_string(pkg.live_vector_nodes()) + " live nodes, budget " +
                                  std::to_string(config.gc_watermark) + ")",
                              result.trace.value_or(SimTrace{}), g);
      }
    }

    const std::size_t live = dd::node_count(state.root);
    result.max_nodes = std::max(result.max_nodes, live);
    if (result.trace && (g % config.trace_stride == 0 || g + 1 == c.size())) {
      result.trace->push_back({g, std::string(op.name()),
                               std::chrono::duration_cast<std::chrono::nanoseconds>(busy).count(), live,
                               pkg.apply_ops()});
    }
    if (observer) observer(g, pkg, state);
  }

  result.wall_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(busy).count();
  result.final_state = state;
  result.final_nodes = dd::node_count(state.root);
  result.total_apply_ops = pkg.apply_ops();
  return result;
}

}  // namespace qddsim
