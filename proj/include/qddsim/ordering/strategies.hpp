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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qddsim/circuit/circuit.hpp"
#include "qddsim/ordering/qubit_order.hpp"

namespace qddsim {

enum class OrderStrategy { Original, Reversed, NGates, ControlAdjacency, Proposed, Explicit };

std::string_view strategy_name(OrderStrategy s);
/// Accepts the names printed by strategy_name ("control_adjacency" also as
/// "ddsim"). "explicit" is not parsed here; see parse_explicit_order.
std::optional<OrderStrategy> parse_strategy(std::string_view name);

/// The five circuit-derived strategies, in table order.
const std::vector<OrderStrategy>& standard_strategies();

QubitOrder order_original(const Circuit& c);
QubitOrder order_reversed(const Circuit& c);

/// Qubits by descending number of gates touching them; ties by index.
QubitOrder order_ngates(const Circuit& c);

struct AdjacencyOrder {
  QubitOrder order;
  bool timed_out = false;
  std::vector<std::string> warnings;
};

inline constexpr std::chrono::seconds kDefaultOrderingTimeout{600};

/// Greedy placement over the control-target interaction graph: seed with the
/// lower endpoint of the heaviest edge, then repeatedly append the unplaced
/// qubit with the largest edge weight into the placed set. Ties go to the
/// lower index. Falls back to the original order, with a warning, once
/// `budget` is exhausted.
AdjacencyOrder order_control_adjacency(const Circuit& c,
                                       std::chrono::nanoseconds budget = kDefaultOrderingTimeout);

struct QubitScore {
  Qubit qubit = 0;
  std::size_t n_ctrl = 0;
  std::size_t n_param_gate = 0;
  double base_score = 0.0;
  double multiplier = 1.0;
  double final_score = 0.0;
};

/// Per-qubit scoring trace of the proposed heuristic, indexed by qubit.
struct ScoreReport {
  std::vector<QubitScore> qubits;
};

/// max(1, log2(k)); 0 and 1 both map to 1.
double score_multiplier(std::size_t n_param_gate);

struct ProposedOrder {
  QubitOrder order;
  ScoreReport report;
};

/// Scoring heuristic: qubits sorted by ascending control count (ties by
/// index) receive base scores 1, 2, 4, ...; each base score is multiplied by
/// score_multiplier(rotation count); the order lists qubits by descending
/// final score, ties by index. Linear in the number of gates plus a sort.
ProposedOrder order_proposed(const Circuit& c);

nlohmann::json to_json(const ScoreReport& report);

/// Parses "3,1,0,2" into a validated order for n qubits.
QubitOrder parse_explicit_order(std::string_view text, std::size_t n);

struct OrderingOptions {
  std::chrono::nanoseconds adjacency_timeout = kDefaultOrderingTimeout;
  std::optional<QubitOrder> explicit_order;
};

struct OrderingOutcome {
  QubitOrder order;
  std::optional<ScoreReport> report;
  std::vector<std::string> warnings;
  std::chrono::nanoseconds elapsed{0};
};

/// Dispatches to one strategy and times it.
OrderingOutcome compute_order(const Circuit& c, OrderStrategy strategy, const OrderingOptions& options = {});

}  // namespace qddsim
