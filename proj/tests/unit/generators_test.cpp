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

#include "qddsim/circuit/generators.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "qddsim/circuit/qasm.hpp"
#include "support/dense_simulator.hpp"

namespace qddsim {
namespace {

using testing::dense_state;

TEST(Generators, GhzMatchesStandardConstruction) {
  const Circuit c = gen_ghz(3);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c.ops()[0], (GateOp{GateKind::H, {}, {0}, {}}));
  EXPECT_EQ(c.ops()[1], (GateOp{GateKind::CX, {0}, {1}, {}}));
  EXPECT_EQ(c.ops()[2], (GateOp{GateKind::CX, {1}, {2}, {}}));
}

TEST(Generators, GateCountsOfBenchmarkSizes) {
  EXPECT_EQ(gen_ghz(130).size(), 130u);
  EXPECT_EQ(gen_wstate(130).size(), 517u);
  EXPECT_EQ(gen_qft(84, false).size(), 3612u);
  EXPECT_EQ(gen_qft(18, true).size(), 198u);
  EXPECT_EQ(gen_qpe(18, true).size(), 196u);
  const double random_gates = static_cast<double>(gen_random(18, kRandom18Depth, kSuiteSeed).size());
  EXPECT_NEAR(random_gates, 747.0, 747.0 * 0.05);
}

TEST(Generators, GhzState) {
  const auto s = dense_state(gen_ghz(5));
  EXPECT_NEAR(s.front().real(), 1 / std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(s.back().real(), 1 / std::sqrt(2.0), 1e-14);
}

TEST(Generators, WStateHasEqualWeightOnHammingOneStates) {
  for (std::size_t n : {2, 3, 6, 9}) {
    const auto s = dense_state(gen_wstate(n));
    for (std::size_t k = 0; k < s.size(); ++k) {
      const bool weight_one = std::popcount(k) == 1;
      EXPECT_NEAR(std::abs(s[k]), weight_one ? 1 / std::sqrt(static_cast<double>(n)) : 0.0, 1e-12)
          << "n=" << n << " k=" << k;
    }
  }
}

TEST(Generators, QftOfZeroIsUniform) {
  const auto s = dense_state(gen_qft(6, false));
  for (const auto& a : s) EXPECT_NEAR(std::abs(a - std::complex<double>(0.125, 0)), 0, 1e-12);
}

TEST(Generators, ExactQpeEndsInABasisState) {
  for (std::size_t n : {4, 7, 10}) {
    const auto s = dense_state(gen_qpe(n, true));
    double peak = 0;
    for (const auto& a : s) peak = std::max(peak, std::abs(a));
    EXPECT_NEAR(peak, 1.0, 1e-10) << n;
  }
}

TEST(Generators, InexactQpeSpreadsAmplitude) {
  for (std::size_t n : {4, 7, 10}) {
    const auto s = dense_state(gen_qpe(n, false));
    double peak = 0;
    for (const auto& a : s) peak = std::max(peak, std::abs(a));
    EXPECT_LT(peak, 0.95) << n;
  }
}

TEST(Generators, GraphStateIsACycle) {
  const Circuit c = gen_graph_state(7, 11);
  EXPECT_EQ(c.size(), 14u);
  std::vector<int> degree(7, 0);
  for (const auto& op : c.ops()) {
    if (op.kind != GateKind::CZ) continue;
    ++degree[op.controls[0]];
    ++degree[op.targets[0]];
  }
  for (int d : degree) EXPECT_EQ(d, 2);
}

TEST(Generators, DeterministicPerSeed) {
  EXPECT_EQ(write_qasm(gen_random(8, 8, 7)), write_qasm(gen_random(8, 8, 7)));
  EXPECT_NE(write_qasm(gen_random(8, 8, 7)), write_qasm(gen_random(8, 8, 8)));
  EXPECT_EQ(write_qasm(gen_graph_state(9, 3)), write_qasm(gen_graph_state(9, 3)));
  EXPECT_EQ(write_qasm(gen_qpe(9, false)), write_qasm(gen_qpe(9, false)));
}

TEST(Generators, RandomCoversEveryQubitPerLayer) {
  const Circuit c = gen_random(6, 1, 99);
  std::vector<int> hits(6, 0);
  for (const auto& op : c.ops()) {
    for (Qubit q : op.controls) ++hits[q];
    for (Qubit q : op.targets) ++hits[q];
  }
  for (int h : hits) EXPECT_EQ(h, 1);
}

TEST(Generators, SizeLimits) {
  EXPECT_THROW(gen_ghz(1), std::invalid_argument);
  EXPECT_THROW(gen_qpe(2, true), std::invalid_argument);
  EXPECT_THROW(gen_random(4, 0, 1), std::invalid_argument);
  EXPECT_THROW(generate("nope", 4, 1, 0), std::invalid_argument);
}

TEST(Generators, SuiteLayout) {
  const auto suite = benchmark_suite({8, 10});
  ASSERT_EQ(suite.size(), 16u);
  EXPECT_EQ(suite[0].name(), "ghz_8");
  EXPECT_EQ(suite[5].name(), "qpe_inexact_8");
  EXPECT_EQ(suite[8].num_qubits(), 10u);
}

}  // namespace
}  // namespace qddsim
