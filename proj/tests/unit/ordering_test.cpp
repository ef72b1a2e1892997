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

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qddsim/circuit/generators.hpp"
#include "qddsim/ordering/qubit_order.hpp"
#include "qddsim/ordering/strategies.hpp"

namespace qddsim {
namespace {

using Perm = std::vector<Qubit>;

struct ExpectedScore {
  std::size_t n_ctrl;
  std::size_t n_param_gate;
  double base;
  double final_score;
};

void expect_report(const ProposedOrder& got, const Perm& perm, const std::vector<ExpectedScore>& want) {
  EXPECT_EQ(got.order.perm(), perm);
  ASSERT_EQ(got.report.qubits.size(), want.size());
  for (std::size_t q = 0; q < want.size(); ++q) {
    const QubitScore& s = got.report.qubits[q];
    EXPECT_EQ(s.qubit, q);
    EXPECT_EQ(s.n_ctrl, want[q].n_ctrl) << "qubit " << q;
    EXPECT_EQ(s.n_param_gate, want[q].n_param_gate) << "qubit " << q;
    EXPECT_DOUBLE_EQ(s.base_score, want[q].base) << "qubit " << q;
    EXPECT_DOUBLE_EQ(s.final_score, want[q].final_score) << "qubit " << q;
  }
}

// Hand-traced fixtures for the scoring heuristic.

TEST(ProposedOrder, ControlCountsOnly) {
  Circuit c(3);
  for (int i = 0; i < 5; ++i) c.cx(1, 0);
  for (int i = 0; i < 2; ++i) c.cx(2, 0);
  // ascending nCtrl: q0(0) q2(2) q1(5) -> base 1, 2, 4
  expect_report(order_proposed(c), {1, 2, 0}, {{0, 0, 1, 1}, {5, 0, 4, 4}, {2, 0, 2, 2}});
}

TEST(ProposedOrder, RotationsLiftAQubit) {
  Circuit c(2);
  for (int i = 0; i < 8; ++i) c.rz(0.3, 0);
  // base 1, 2; q0 multiplied by log2(8) = 3
  expect_report(order_proposed(c), {0, 1}, {{0, 8, 1, 3}, {0, 0, 2, 2}});
}

TEST(ProposedOrder, Ghz3) {
  expect_report(order_proposed(gen_ghz(3)), {1, 0, 2}, {{1, 0, 2, 2}, {1, 0, 4, 4}, {0, 0, 1, 1}});
}

TEST(ProposedOrder, MultiplierClamp) {
  // nParamGate {0, 1, 2, 8}: the first three clamp to 1 (log2 of 1 is 0 and
  // log2 of 0 is undefined), the last gets 3.
  Circuit c(4);
  c.rx(0.1, 1);
  c.ry(0.1, 2).ry(0.2, 2);
  for (int i = 0; i < 8; ++i) c.p(0.05 * (i + 1), 3);
  expect_report(order_proposed(c), {3, 2, 1, 0},
                {{0, 0, 1, 1}, {0, 1, 2, 2}, {0, 2, 4, 4}, {0, 8, 8, 24}});
  EXPECT_EQ(score_multiplier(0), 1.0);
  EXPECT_EQ(score_multiplier(1), 1.0);
  EXPECT_EQ(score_multiplier(2), 1.0);
  EXPECT_EQ(score_multiplier(8), 3.0);
  EXPECT_DOUBLE_EQ(score_multiplier(5), std::log2(5.0));
}

TEST(ProposedOrder, QuarterTurnRotationsAreIgnored) {
  const double pi = std::numbers::pi;
  Circuit c(2);
  for (int i = 0; i < 8; ++i) c.rz(pi / 2 * i, 0);
  for (int i = 0; i < 4; ++i) c.rz(0.1, 1);
  expect_report(order_proposed(c), {1, 0}, {{0, 0, 1, 1}, {0, 4, 2, 4}});
}

TEST(ProposedOrder, MixedControlsAndRotations) {
  Circuit c(4);
  c.cx(0, 1).cx(0, 2).ccx(0, 3, 1).cp(0.3, 2, 3);
  for (int i = 0; i < 8; ++i) c.rz(0.2, 1);
  c.add(GateKind::CRZ, {3}, {0}, {0.5});
  // nCtrl {3, 0, 1, 2} -> base {8, 1, 2, 4}; nParamGate {1, 8, 1, 2}
  expect_report(order_proposed(c), {0, 3, 1, 2}, {{3, 1, 8, 8}, {0, 8, 1, 3}, {1, 1, 2, 2}, {2, 2, 4, 4}});
}

TEST(ProposedOrder, EqualFinalScoresKeepIndexOrder) {
  Circuit c(2);
  for (int i = 0; i < 4; ++i) c.rz(0.1, 0);
  expect_report(order_proposed(c), {0, 1}, {{0, 4, 1, 2}, {0, 0, 2, 2}});
}

TEST(ProposedOrder, EmptyCircuit) {
  expect_report(order_proposed(Circuit(3)), {2, 1, 0}, {{0, 0, 1, 1}, {0, 0, 2, 2}, {0, 0, 4, 4}});
}

TEST(ProposedOrder, ReportJson) {
  const auto j = to_json(order_proposed(gen_ghz(3)).report);
  ASSERT_EQ(j["qubits"].size(), 3u);
  EXPECT_EQ(j["qubits"][2]["n_ctrl"], 0);
  EXPECT_EQ(j["qubits"][1]["final_score"], 4.0);
  EXPECT_TRUE(j.contains("multiplier_rule"));
}

TEST(SimpleOrders, OriginalReversedNGates) {
  Circuit c(4);
  c.h(2).cx(2, 3).cx(2, 1).x(1).h(0);
  EXPECT_TRUE(order_original(c).is_identity());
  EXPECT_EQ(order_reversed(c).perm(), (Perm{3, 2, 1, 0}));
  // gate counts {1, 2, 3, 1}
  EXPECT_EQ(order_ngates(c).perm(), (Perm{2, 1, 0, 3}));
}

TEST(ControlAdjacency, GreedyPlacement) {
  Circuit c(5);
  c.cx(3, 4).cx(3, 4).cx(4, 3).cx(1, 3).cx(0, 1).cx(0, 1);
  // heaviest edge 3-4 (3) seeds with 3; 4 links 3; then 1 (1 to 3); then 0.
  const auto out = order_control_adjacency(c);
  EXPECT_FALSE(out.timed_out);
  EXPECT_EQ(out.order.perm(), (Perm{3, 4, 1, 0, 2}));
}

TEST(ControlAdjacency, NoControlledGatesKeepsOriginal) {
  Circuit c(3);
  c.h(0).rz(0.1, 2);
  EXPECT_TRUE(order_control_adjacency(c).order.is_identity());
}

TEST(ControlAdjacency, TimeoutFallsBackWithWarning) {
  const auto out = order_control_adjacency(gen_qft(6, false), std::chrono::nanoseconds(0));
  EXPECT_TRUE(out.timed_out);
  EXPECT_TRUE(out.order.is_identity());
  ASSERT_EQ(out.warnings.size(), 1u);
}

TEST(QubitOrder, PermutationBasics) {
  const QubitOrder o({2, 0, 1});
  EXPECT_EQ(o.qubit_at(0), 2u);
  EXPECT_EQ(o.level_of(2), 0u);
  EXPECT_EQ(o.level_of(1), 2u);
  EXPECT_EQ(o.inverse().perm(), (Perm{1, 2, 0}));
  EXPECT_EQ(o.to_string(','), "2,0,1");
  EXPECT_THROW(QubitOrder({0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(QubitOrder({0, 3}), std::invalid_argument);
  // qubit-space 0b100 (qubit 0 set) -> qubit 0 sits at level 1 -> 0b010
  EXPECT_EQ(permute_index(0b100, o), 0b010u);
  EXPECT_EQ(permute_index(0b001, o), 0b100u);
}

TEST(QubitOrder, RemapMovesQubitsToLevels) {
  const Circuit c = gen_ghz(3);
  const Circuit r = remap(c, QubitOrder({2, 0, 1}));
  EXPECT_EQ(r.ops()[0].targets, Perm{1});
  EXPECT_EQ(r.ops()[1].controls, Perm{1});
  EXPECT_EQ(r.ops()[1].targets, Perm{2});
}

TEST(Strategies, NamesAndParsing) {
  for (OrderStrategy s : standard_strategies()) EXPECT_EQ(parse_strategy(strategy_name(s)), s);
  EXPECT_EQ(parse_strategy("ddsim"), OrderStrategy::ControlAdjacency);
  EXPECT_FALSE(parse_strategy("best").has_value());
  EXPECT_EQ(standard_strategies().size(), 5u);
}

TEST(Strategies, ExplicitOrder) {
  EXPECT_EQ(parse_explicit_order("3,1,0,2", 4).perm(), (Perm{3, 1, 0, 2}));
  EXPECT_EQ(parse_explicit_order(" 1, 0 ", 2).perm(), (Perm{1, 0}));
  EXPECT_THROW(parse_explicit_order("0,1", 3), std::invalid_argument);
  EXPECT_THROW(parse_explicit_order("0,0,1", 3), std::invalid_argument);
  EXPECT_THROW(parse_explicit_order("0,x,1", 3), std::invalid_argument);
  EXPECT_THROW(parse_explicit_order("", 1), std::invalid_argument);
}

TEST(Strategies, ComputeOrderDispatch) {
  const Circuit c = gen_ghz(4);
  EXPECT_TRUE(compute_order(c, OrderStrategy::Original).order.is_identity());
  const auto proposed = compute_order(c, OrderStrategy::Proposed);
  EXPECT_TRUE(proposed.report.has_value());
  EXPECT_EQ(proposed.order, order_proposed(c).order);
  EXPECT_FALSE(compute_order(c, OrderStrategy::Reversed).report.has_value());
  OrderingOptions opts;
  opts.explicit_order = QubitOrder({1, 0, 3, 2});
  EXPECT_EQ(compute_order(c, OrderStrategy::Explicit, opts).order.perm(), (Perm{1, 0, 3, 2}));
  EXPECT_THROW(compute_order(c, OrderStrategy::Explicit), std::invalid_argument);
}

}  // namespace
}  // namespace qddsim
