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

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qddsim/circuit/circuit.hpp"
#include "qddsim/dd/package.hpp"
#include "qddsim/ordering/strategies.hpp"

namespace qddsim {

inline constexpr std::size_t kDefaultGcWatermark = std::size_t{1} << 22;

struct SimConfig {
  OrderStrategy strategy = OrderStrategy::Original;
  std::optional<QubitOrder> explicit_order;  // required for OrderStrategy::Explicit
  double tolerance = kDefaultTolerance;
  std::size_t gc_watermark = kDefaultGcWatermark;
  bool trace = false;
  std::size_t trace_stride = 1;
  std::chrono::nanoseconds ordering_timeout = kDefaultOrderingTimeout;
};

struct TraceRecord {
  std::size_t gate_index = 0;
  std::string gate_name;
  std::int64_t cumulative_ns = 0;
  std::size_t live_nodes = 0;
  std::uint64_t apply_ops = 0;
};

using SimTrace = std::vector<TraceRecord>;

struct SimResult {
  OrderStrategy strategy = OrderStrategy::Original;
  QubitOrder order;
  std::optional<ScoreReport> score_report;
  std::vector<std::string> warnings;

  std::size_t num_qubits = 0;
  std::size_t num_gates = 0;
  std::int64_t wall_ns = 0;      // gate application only
  std::int64_t ordering_ns = 0;  // computing the order
  std::size_t final_nodes = 0;
  std::size_t max_nodes = 0;
  std::uint64_t total_apply_ops = 0;
  std::optional<SimTrace> trace;

  std::shared_ptr<dd::Package> package;
  dd::VectorDD final_state;

  /// Amplitude of a qubit-space basis index (qubit 0 is the most significant
  /// bit), independent of the order used.
  Complex amplitude(std::uint64_t index) const;
  /// Dense final state in qubit space. Throws std::length_error above 30 qubits.
  std::vector<Complex> dense_state() const;
};

/// Raised when the node budget is still exceeded after garbage collection.
class SimulationError : public std::runtime_error {
 public:
  SimulationError(const std::string& what, SimTrace partial, std::size_t gate_index)
      : std::runtime_error(what), partial_(std::move(partial)), gate_index_(gate_index) {}
  const SimTrace& partial_trace() const { return partial_; }
  std::size_t gate_index() const { return gate_index_; }

 private:
  SimTrace partial_;
  std::size_t gate_index_;
};

/// Called after each gate with its index and the current state.
using GateObserver = std::function<void(std::size_t, dd::Package&, const dd::VectorDD&)>;

/// Simulates from |0...0> with each qubit at its ordered level. Live node
/// counts refer to the state-vector diagram; max_nodes is sampled after every
/// gate whatever the trace stride.
SimResult simulate(const Circuit& c, const SimConfig& config, const GateObserver& observer = {});

struct StrategySummary {
  OrderStrategy strategy = OrderStrategy::Original;
  QubitOrder order;
  bool ok = false;
  std::string error;
  std::int64_t wall_ns = 0;  // minimum over repeats
  std::int64_t ordering_ns = 0;
  std::size_t final_nodes = 0;
  std::size_t max_nodes = 0;
  std::uint64_t apply_ops = 0;
};

struct CompareOptions {
  std::vector<OrderStrategy> strategies = standard_strategies();
  std::size_t repeats = 3;
  bool verify = false;              // compare dense states across strategies
  std::size_t verify_max_qubits = 12;
  double verify_tolerance = 1e-10;
  SimConfig base;                   // strategy field is overridden per run
};

struct Comparison {
  std::string circuit_name;
  std::size_t num_qubits = 0;
  std::size_t num_gates = 0;
  std::vector<StrategySummary> rows;  // in CompareOptions::strategies order
  bool verified = false;
  bool states_agree = true;
  double max_state_diff = 0.0;
};

/// Runs every strategy `repeats` times and keeps the fastest run of each.
/// Per-run failures are recorded in the row instead of thrown.
Comparison compare_orders(const Circuit& c, const CompareOptions& options);

}  // namespace qddsim
