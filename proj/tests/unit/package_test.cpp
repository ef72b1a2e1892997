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

#include "qddsim/dd/package.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "qddsim/circuit/generators.hpp"
#include "qddsim/dd/export.hpp"
#include "qddsim/dd/gate_dd.hpp"
#include "support/dense_simulator.hpp"

namespace qddsim::dd {
namespace {

using testing::max_abs_diff;

const double kInvSqrt2 = 1 / std::sqrt(2.0);

VectorDD run(Package& pkg, const Circuit& c, const QubitOrder& order) {
  VectorDD v = pkg.make_zero_state();
  for (const auto& op : c.ops()) v = pkg.apply(make_gate_dd(pkg, op, order), v);
  return v;
}

TEST(Package, BasisStateIsAChain) {
  Package pkg(5);
  const VectorDD v = pkg.make_basis_state("01101");
  EXPECT_EQ(node_count(v.root), 5u);
  EXPECT_TRUE(v.root.w.is_one());
  EXPECT_TRUE(pkg.amplitude(v, "01101").is_one());
  EXPECT_TRUE(pkg.amplitude(v, "01100").is_zero());
  EXPECT_EQ(pkg.amplitude(v, std::uint64_t{0b01101}), Complex(1, 0));
  EXPECT_THROW(pkg.make_basis_state("0110"), std::invalid_argument);
  EXPECT_THROW(pkg.amplitude(v, "011"), std::invalid_argument);
}

TEST(Package, NodesAreNormalizedOnLeftmostNonzeroChild) {
  Package pkg(1);
  auto& ct = pkg.complex();
  const VEdge e = pkg.make_node(0, {VEdge{ct.intern(0.6, 0), VNode::terminal()}, VEdge{ct.intern(0, 0.8), VNode::terminal()}});
  EXPECT_NEAR(e.w.re(), 0.6, 1e-15);
  EXPECT_TRUE(e.node->children[0].w.is_one());
  EXPECT_NEAR(e.node->children[1].w.im(), 0.8 / 0.6, 1e-15);
  // Leading zero: the second child carries the factor.
  const VEdge f = pkg.make_node(0, {VEdge::zero(), VEdge{ct.intern(0, 0.8), VNode::terminal()}});
  EXPECT_NEAR(f.w.im(), 0.8, 1e-15);
  EXPECT_TRUE(f.node->children[1].w.is_one());
  EXPECT_TRUE(pkg.make_node(0, {VEdge::zero(), VEdge::zero()}).is_zero());
}

TEST(Package, UniqueTableSharesNodes) {
  Package pkg(2);
  auto& ct = pkg.complex();
  const VEdge a = pkg.make_node(1, {VEdge::one(), VEdge::zero()});
  const VEdge b = pkg.make_node(1, {VEdge{ct.intern(0.5, 0), VNode::terminal()}, VEdge::zero()});
  EXPECT_EQ(a.node, b.node);
  EXPECT_EQ(pkg.live_vector_nodes(), 1u);
}

// Paper's two-qubit figure: the Bell state (|00> + |11>)/sqrt(2) with a root
// weight of 1/sqrt(2).
TEST(Package, BellDiagramAmplitudes) {
  Package pkg(2);
  auto& ct = pkg.complex();
  const VEdge zero_branch = pkg.make_node(1, {VEdge::one(), VEdge::zero()});
  const VEdge one_branch = pkg.make_node(1, {VEdge::zero(), VEdge::one()});
  const Amplitude h = ct.intern(kInvSqrt2, 0);
  const VectorDD bell{pkg.make_node(0, {VEdge{h, zero_branch.node}, VEdge{h, one_branch.node}}), 2};
  EXPECT_NEAR(bell.root.w.re(), kInvSqrt2, 1e-15);
  EXPECT_NEAR(pkg.amplitude(bell, "11").re(), kInvSqrt2, 1e-12);
  EXPECT_TRUE(pkg.amplitude(bell, "01").is_zero());
  EXPECT_EQ(pkg.amplitude(bell, "01").re(), 0.0);
  EXPECT_EQ(node_count(bell.root), 3u);
  EXPECT_NEAR(pkg.norm(bell), 1.0, 1e-15);
}

TEST(Package, GateMatricesMatchOracle) {
  const std::size_t n = 3;
  const double a = 0.37, b = -1.21, c = 2.9;
  std::vector<GateOp> ops;
  for (const auto& info : all_gate_infos()) {
    std::vector<Qubit> controls, targets;
    const std::vector<double> all{a, b, c};
    const std::vector<double> params(all.begin(), all.begin() + info.num_params);
    // Mixed placements: control below and above the target.
    if (info.num_controls == 0 && info.num_targets == 1) {
      ops.push_back({info.kind, {}, {1}, params});
    } else if (info.num_controls == 1 && info.num_targets == 1) {
      ops.push_back({info.kind, {2}, {0}, params});
      ops.push_back({info.kind, {0}, {2}, params});
    } else if (info.num_targets == 2) {
      std::vector<Qubit> ctl = info.num_controls == 1 ? std::vector<Qubit>{1} : std::vector<Qubit>{};
      ops.push_back({info.kind, ctl, {2, 0}, params});
    } else {
      ops.push_back({info.kind, {2, 0}, {1}, params});
    }
  }
  const QubitOrder orders[] = {QubitOrder::identity(n), QubitOrder({2, 0, 1})};
  for (const auto& order : orders) {
    for (const auto& op : ops) {
      Package pkg(static_cast<int>(n));
      const MatrixDD m = make_gate_dd(pkg, op, order);
      const auto dd_dense = pkg.to_dense(m);
      // Expected matrix, with rows and columns permuted into level space.
      const auto q_dense = testing::dense_matrix(op, n);
      const std::size_t dim = std::size_t{1} << n;
      double diff = 0;
      for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t col = 0; col < dim; ++col) {
          const auto lr = permute_index(r, order), lc = permute_index(col, order);
          diff = std::max(diff, std::abs(dd_dense[lr * dim + lc] - q_dense[r * dim + col]));
        }
      }
      EXPECT_LT(diff, 1e-14) << op.name() << " order " << order.to_string(',');
    }
  }
}

TEST(Package, IdentityIsFlaggedAndShared) {
  Package pkg(4);
  const MatrixDD id = pkg.identity();
  EXPECT_TRUE(id.root.node->identity);
  EXPECT_EQ(node_count(id.root), 4u);
  const VectorDD v = run(pkg, gen_ghz(4), QubitOrder::identity(4));
  const std::uint64_t before = pkg.apply_ops();
  EXPECT_EQ(pkg.apply(id, v), v);
  EXPECT_EQ(pkg.apply_ops(), before);  // identity short-circuits
  // X on qubit 3 of a 4-qubit register: the identity stretch above it costs a
  // node per level but nothing below.
  const MatrixDD x3 = make_gate_dd(pkg, GateOp{GateKind::X, {}, {3}, {}}, QubitOrder::identity(4));
  EXPECT_FALSE(x3.root.node->identity);
  EXPECT_EQ(pkg.multiply(x3, x3), id);
}

TEST(Package, CanonicalRootsAfterInverseSequences) {
  const QubitOrder order = QubitOrder::identity(3);
  Package pkg(3);
  const VectorDD start = run(pkg, gen_qft(3, true), order);
  auto apply_seq = [&](std::initializer_list<GateOp> ops) {
    VectorDD v = start;
    for (const auto& op : ops) v = pkg.apply(make_gate_dd(pkg, op, order), v);
    return v;
  };
  EXPECT_EQ(apply_seq({{GateKind::X, {}, {1}, {}}, {GateKind::X, {}, {1}, {}}}), start);
  EXPECT_EQ(apply_seq({{GateKind::H, {}, {0}, {}}, {GateKind::H, {}, {0}, {}}}), start);
  EXPECT_EQ(apply_seq({{GateKind::S, {}, {2}, {}}, {GateKind::S, {}, {2}, {}}, {GateKind::Z, {}, {2}, {}}}), start);
}

TEST(Package, AdditionAndScaling) {
  Package pkg(2);
  const VectorDD a = pkg.make_basis_state("00");
  const VectorDD b = pkg.make_basis_state("11");
  const VectorDD bell = pkg.scale(pkg.add(a, b), kInvSqrt2);
  EXPECT_NEAR(pkg.norm(bell), 1.0, 1e-15);
  EXPECT_EQ(node_count(bell.root), 3u);
  const VectorDD zero = pkg.add(a, pkg.scale(a, -1.0));
  EXPECT_TRUE(zero.root.is_zero());
  EXPECT_EQ(pkg.norm(zero), 0.0);
}

TEST(Package, MatrixMultiplicationMatchesDense) {
  Package pkg(3);
  const QubitOrder order = QubitOrder::identity(3);
  const MatrixDD a = make_gate_dd(pkg, GateOp{GateKind::CRY, {0}, {2}, {0.4}}, order);
  const MatrixDD b = make_gate_dd(pkg, GateOp{GateKind::U3, {}, {1}, {0.1, 0.2, 0.3}}, order);
  const auto ab = pkg.to_dense(pkg.multiply(a, b));
  const auto da = pkg.to_dense(a), db = pkg.to_dense(b);
  double diff = 0;
  for (std::size_t r = 0; r < 8; ++r) {
    for (std::size_t col = 0; col < 8; ++col) {
      Complex sum = 0;
      for (std::size_t k = 0; k < 8; ++k) sum += da[r * 8 + k] * db[k * 8 + col];
      diff = std::max(diff, std::abs(sum - ab[r * 8 + col]));
    }
  }
  EXPECT_LT(diff, 1e-14);
}

TEST(Package, GarbageCollection) {
  Package pkg(6);
  const QubitOrder order = QubitOrder::identity(6);
  VectorDD keep = run(pkg, gen_ghz(6), order);
  run(pkg, gen_random(6, 6, 5), order);
  const std::size_t before = pkg.live_vector_nodes();
  const std::size_t freed = pkg.gc(std::array{keep.root});
  EXPECT_GT(freed, 0u);
  EXPECT_EQ(pkg.live_vector_nodes(), node_count(keep.root));
  EXPECT_LT(pkg.live_vector_nodes(), before);
  // The kept diagram is intact and still usable.
  EXPECT_NEAR(std::abs(pkg.amplitude(keep, std::uint64_t{63})), kInvSqrt2, 1e-14);
  const VectorDD again = run(pkg, gen_ghz(6), order);
  EXPECT_EQ(again, keep);
}

TEST(Package, LevelLimits) {
  EXPECT_THROW(Package(0), std::invalid_argument);
  EXPECT_THROW(Package(63), std::invalid_argument);
  Package pkg(3);
  const int bad[] = {1};
  EXPECT_THROW(pkg.make_controlled_gate(target_matrix(GateKind::X, {}), 1, bad), std::invalid_argument);
  EXPECT_THROW(pkg.make_controlled_gate(target_matrix(GateKind::X, {}), 3, {}), std::invalid_argument);
}

TEST(Export, DotMentionsEveryNode) {
  Package pkg(3);
  const VectorDD v = run(pkg, gen_ghz(3), QubitOrder::identity(3));
  const std::string dot = to_dot(v);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  for (const char* id : {"n0", "n1", "n2", "n3", "n4"}) EXPECT_NE(dot.find(id), std::string::npos) << id;
  EXPECT_EQ(dot.find("n5"), std::string::npos);
}

TEST(Export, LargestAmplitudes) {
  Package pkg(4);
  Circuit c(4);
  c.ry(0.3, 0).h(1).cx(1, 2).rx(1.1, 3);
  const VectorDD v = run(pkg, c, QubitOrder::identity(4));
  const auto dense = testing::dense_state(c);
  const auto top = largest_amplitudes(v, 16);
  ASSERT_EQ(top.size(), 8u);  // only nonzero amplitudes appear
  for (std::size_t i = 0; i < top.size(); ++i) {
    EXPECT_LT(std::abs(top[i].second - dense[top[i].first]), 1e-14);
    if (i > 0) EXPECT_GE(std::abs(top[i - 1].second), std::abs(top[i].second) - 1e-15);
  }
  EXPECT_EQ(largest_amplitudes(v, 1).size(), 1u);
  EXPECT_TRUE(largest_amplitudes(v, 0).empty());
}

}  // namespace
}  // namespace qddsim::dd
