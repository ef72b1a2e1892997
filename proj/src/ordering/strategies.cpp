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

#include "qddsim/ordering/strategies.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qddsim/circuit/stats.hpp"

namespace qddsim {

namespace {

std::vector<Qubit> iota_qubits(std::size_t n) {
  std::vector<Qubit> v(n);
  std::iota(v.begin(), v.end(), Qubit{0});
  return v;
}

}  // namespace

std::string_view strategy_name(OrderStrategy s) {
  switch (s) {
    case OrderStrategy::Original: return "original";
    case OrderStrategy::Reversed: return "reversed";
    case OrderStrategy::NGates: return "ngates";
    case OrderStrategy::ControlAdjacency: return "control_adjacency";
    case OrderStrategy::Proposed: return "proposed";
    case OrderStrategy::Explicit: return "explicit";
  }
  return "unknown";
}

std::optional<OrderStrategy> parse_strategy(std::string_view name) {
  if (name == "original") return OrderStrategy::Original;
  if (name == "reversed") return OrderStrategy::Reversed;
  if (name == "ngates") return OrderStrategy::NGates;
  if (name == "control_adjacency" || name == "ddsim") return OrderStrategy::ControlAdjacency;
  if (name == "proposed") return OrderStrategy::Proposed;
  return std::nullopt;
}

const std::vector<OrderStrategy>& standard_strategies() {
  static const std::vector<OrderStrategy> all{OrderStrategy::Original, OrderStrategy::Reversed,
                                              OrderStrategy::NGates, OrderStrategy::ControlAdjacency,
                                              OrderStrategy::Proposed};
  return all;
}

QubitOrder order_original(const Circuit& c) { return QubitOrder::identity(c.num_qubits()); }

QubitOrder order_reversed(const Circuit& c) {
  auto perm = iota_qubits(c.num_qubits());
  std::reverse(perm.begin(), perm.end());
  return QubitOrder(std::move(perm));
}

QubitOrder order_ngates(const Circuit& c) {
  const auto stats = circuit_stats(c);
  auto perm = iota_qubits(c.num_qubits());
  std::stable_sort(perm.begin(), perm.end(),
                   [&](Qubit a, Qubit b) { return stats.n_gates[a] > stats.n_gates[b]; });
  return QubitOrder(std::move(perm));
}

AdjacencyOrder order_control_adjacency(const Circuit& c, std::chrono::nanoseconds budget) {
  using Clock = std::chrono::steady_clock;
  const auto deadline = Clock::now() + budget;
  const std::size_t n = c.num_qubits();
  auto timeout = [&] {
    AdjacencyOrder out{order_original(c), true, {}};
    out.warnings.push_back("control_adjacency ordering exceeded its time budget; using the original order");
    return out;
  };

  std::vector<std::size_t> weight(n * n, 0);
  bool any = false;
  for (const auto& op : c.ops()) {
    for (Qubit ctl : op.controls) {
      for (Qubit tgt : op.targets) {
        ++weight[ctl * n + tgt];
        ++weight[tgt * n + ctl];
        any = true;
      }
    }
  }
  if (Clock::now() >= deadline) return timeout();
  if (!any) return {order_original(c), false, {}};

  Qubit seed = 0;
  std::size_t heaviest = 0;
  for (Qubit a = 0; a < n; ++a) {
    for (Qubit b = a + 1; b < n; ++b) {
      if (weight[a * n + b] > heaviest) {
        heaviest = weight[a * n + b];
        seed = a;
      }
    }
  }

  std::vector<Qubit> perm{seed};
  std::vector<bool> placed(n, false);
  std::vector<std::size_t> link(n, 0);  // weight into the placed set
  placed[seed] = true;
  for (Qubit q = 0; q < n; ++q) link[q] += weight[seed * n + q];
  while (perm.size() < n) {
    if (Clock::now() >= deadline) return timeout();
    Qubit best = 0;
    bool found = false;
    for (Qubit q = 0; q < n; ++q) {
      if (placed[q]) continue;
      if (!found || link[q] > link[best]) {
        best = q;
        found = true;
      }
    }
    placed[best] = true;
    perm.push_back(best);
    for (Qubit q = 0; q < n; ++q) link[q] += weight[best * n + q];
  }
  return {QubitOrder(std::move(perm)), false, {}};
}

double score_multiplier(std::size_t n_param_gate) {
  if (n_param_gate <= 1) return 1.0;
  return std::max(1.0, std::log2(static_cast<double>(n_param_gate)));
}

ProposedOrder order_proposed(const Circuit& c) {
  const std::size_t n = c.num_qubits();
  const auto stats = circuit_stats(c);

  auto by_ctrl = iota_qubits(n);
  std::stable_sort(by_ctrl.begin(), by_ctrl.end(),
                   [&](Qubit a, Qubit b) { return stats.n_ctrl[a] < stats.n_ctrl[b]; });

  ScoreReport report;
  report.qubits.resize(n);
  double base = 1.0;
  for (Qubit q : by_ctrl) {
    auto& s = report.qubits[q];
    s.qubit = q;
    s.n_ctrl = stats.n_ctrl[q];
    s.n_param_gate = stats.n_param_gate[q];
    s.base_score = base;
    s.multiplier = score_multiplier(s.n_param_gate);
    s.final_score = s.base_score * s.multiplier;
    base *= 2.0;
  }

  auto perm = iota_qubits(n);
  std::stable_sort(perm.begin(), perm.end(), [&](Qubit a, Qubit b) {
    return report.qubits[a].final_score > report.qubits[b].final_score;
  });
  return {QubitOrder(std::move(perm)), std::move(report)};
}

QubitOrder parse_explicit_order(std::string_view text, std::size_t n) {
  std::vector<Qubit> perm;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    std::string_view item = text.substr(pos, end - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    Qubit q = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), q);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw std::invalid_argument("malformed explicit order entry '" + std::string(item) + "'");
    }
    perm.push_back(q);
    pos = end + 1;
  }
  if (perm.size() != n) {
    throw std::invalid_argument("explicit order has " + std::to_string(perm.size()) + " entries, circuit has " +
                                std::to_string(n) + " qubits");
  }
  return QubitOrder(std::move(perm));
}

OrderingOutcome compute_order(const Circuit& c, OrderStrategy strategy, const OrderingOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  OrderingOutcome out;
  switch (strategy) {
    case OrderStrategy::Original: out.order = order_original(c); break;
    case OrderStrategy::Reversed: out.order = order_reversed(c); break;
    case OrderStrategy::NGates: out.order = order_ngates(c); break;
    case OrderStrategy::ControlAdjacency: {
      auto r = order_control_adjacency(c, options.adjacency_timeout);
      out.order = std::move(r.order);
      out.warnings = std::move(r.warnings);
      break;
    }
    case OrderStrategy::Proposed: {
      auto r = order_proposed(c);
      out.order = std::move(r.order);
      out.report = std::move(r.report);
      break;
    }
    case OrderStrategy::Explicit:
      if (!options.explicit_order) throw std::invalid_argument("explicit strategy needs an order");
      if (options.explicit_order->size() != c.num_qubits()) {
        throw std::invalid_argument("explicit order size does not match the circuit");
      }
      out.order = *options.explicit_order;
      break;
  }
  out.elapsed = std::chrono::steady_clock::now() - start;
  return out;
}

}  // namespace qddsim
