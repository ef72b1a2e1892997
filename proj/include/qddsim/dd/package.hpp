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

#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/container/flat_hash_set.h"
#include "absl/hash/hash.h"

#include "qddsim/circuit/gate.hpp"
#include "qddsim/numerics/complex_table.hpp"

namespace qddsim::dd {

/// Level of the terminal node; every real level is smaller.
inline constexpr int kTerminalLevel = std::numeric_limits<int>::max();

struct VNode;
struct MNode;

struct VEdge {
  Amplitude w;
  const VNode* node;

  static VEdge zero();
  static VEdge one();
  bool is_zero() const { return w.is_zero(); }
  bool is_terminal() const;
  friend bool operator==(const VEdge&, const VEdge&) = default;
};

struct MEdge {
  Amplitude w;
  const MNode* node;

  static MEdge zero();
  static MEdge one();
  bool is_zero() const { return w.is_zero(); }
  bool is_terminal() const;
  friend bool operator==(const MEdge&, const MEdge&) = default;
};

/// Vector node: children[0] follows bit 0, children[1] follows bit 1.
struct VNode {
  int level = kTerminalLevel;
  std::array<VEdge, 2> children{};
  mutable bool marked = false;

  static const VNode* terminal();
};

/// Matrix node with row-major children [e00, e01, e10, e11].
struct MNode {
  int level = kTerminalLevel;
  std::array<MEdge, 4> children{};
  bool identity = false;  // the node is the identity on levels level..n-1
  mutable bool marked = false;

  static const MNode* terminal();
};

inline bool VEdge::is_terminal() const { return node == VNode::terminal(); }
inline bool MEdge::is_terminal() const { return node == MNode::terminal(); }
inline VEdge VEdge::zero() { return {Amplitude::zero(), VNode::terminal()}; }
inline VEdge VEdge::one() { return {Amplitude::one(), VNode::terminal()}; }
inline MEdge MEdge::zero() { return {Amplitude::zero(), MNode::terminal()}; }
inline MEdge MEdge::one() { return {Amplitude::one(), MNode::terminal()}; }

/// A 2^n vector; level 0 is the most significant index bit.
struct VectorDD {
  VEdge root = VEdge::zero();
  int num_levels = 0;
  friend bool operator==(const VectorDD&, const VectorDD&) = default;
};

/// A 2^n x 2^n matrix with the same level convention as VectorDD.
struct MatrixDD {
  MEdge root = MEdge::zero();
  int num_levels = 0;
  friend bool operator==(const MatrixDD&, const MatrixDD&) = default;
};

/// Decision-diagram engine for a fixed number of levels.
///
/// Nodes are hash-consed in per-kind unique tables and normalized so that the
/// first nonzero child weight is ONE, the factor moving to the incoming edge.
/// Diagrams are quasi-reduced: every root-to-terminal path visits every level.
/// Matrix nodes that are the identity on all remaining levels are flagged so
/// multiplication can stop there.
///
/// Single-threaded. Handles are only meaningful within the engine that made
/// them and stay valid until a gc() that does not reach them.
class Package {
 public:
  explicit Package(int num_levels, double tolerance = kDefaultTolerance);

  Package(const Package&) = delete;
  Package& operator=(const Package&) = delete;

  int num_levels() const { return num_levels_; }
  ComplexTable& complex() { return complex_; }
  const ComplexTable& complex() const { return complex_; }

  VEdge make_node(int level, const std::array<VEdge, 2>& children);
  MEdge make_node(int level, const std::array<MEdge, 4>& children);

  /// bits[i] is the value at level i ('0' or '1').
  VectorDD make_basis_state(std::string_view bits);
  VectorDD make_zero_state();

  MatrixDD identity() const { return {identity_[0], num_levels_}; }
  /// Identity on levels [level, n).
  MEdge identity_from(int level) const { return identity_.at(static_cast<std::size_t>(level)); }

  /// Full operator applying `u` at `target_level` when every control level is
  /// |1>, identity elsewhere. Throws std::invalid_argument on bad levels.
  MatrixDD make_controlled_gate(const Matrix2& u, int target_level, std::span<const int> control_levels);

  /// Product of several operators; `factors` are given in application order.
  MatrixDD compose(std::span<const MatrixDD> factors);

  VectorDD apply(const MatrixDD& m, const VectorDD& v);
  MatrixDD multiply(const MatrixDD& a, const MatrixDD& b);
  VectorDD add(const VectorDD& a, const VectorDD& b);
  MatrixDD add(const MatrixDD& a, const MatrixDD& b);
  VectorDD scale(const VectorDD& v, Complex factor);

  /// Product of weights along the path selected by `bits` (bits[i] picks the
  /// child at level i). Throws std::invalid_argument on a length mismatch.
  Amplitude amplitude(const VectorDD& v, std::string_view bits);
  /// Same with an integer index whose most significant bit is level 0.
  Complex amplitude(const VectorDD& v, std::uint64_t index) const;

  double norm(const VectorDD& v) const;

  std::vector<Complex> to_dense(const VectorDD& v) const;
  /// Row-major dense matrix.
  std::vector<Complex> to_dense(const MatrixDD& m) const;

  /// Reclaims nodes unreachable from the roots (identity chains are always
  /// kept) and clears compute caches. Returns the number of nodes freed.
  std::size_t gc(std::span<const VEdge> vector_roots, std::span<const MEdge> matrix_roots = {});

  std::size_t live_vector_nodes() const { return vunique_.size(); }
  std::size_t live_matrix_nodes() const { return munique_.size(); }
  std::size_t live_nodes() const { return vunique_.size() + munique_.size(); }

  /// Cache-missing recursive matrix-vector multiplication calls so far.
  std::uint64_t apply_ops() const { return apply_ops_; }
  std::uint64_t add_ops() const { return add_ops_; }

  void clear_caches();

 private:
  struct VNodeHash {
    std::size_t operator()(const VNode* n) const;
  };
  struct VNodeEq {
    bool operator()(const VNode* a, const VNode* b) const;
  };
  struct MNodeHash {
    std::size_t operator()(const MNode* n) const;
  };
  struct MNodeEq {
    bool operator()(const MNode* a, const MNode* b) const;
  };

  template <class A, class B>
  struct PairKey {
    A a;
    B b;
    bool operator==(const PairKey&) const = default;
  };
  struct PairHash {
    template <class K>
    std::size_t operator()(const K& k) const {
      return absl::Hash<std::pair<const void*, const void*>>{}({k.a, k.b});
    }
  };
  struct EdgePairKey {
    const void* wa;
    const void* na;
    const void* wb;
    const void* nb;
    bool operator==(const EdgePairKey&) const = default;
  };
  struct EdgePairHash {
    std::size_t operator()(const EdgePairKey& k) const;
  };

  VEdge scaled(VEdge e, Amplitude w);
  MEdge scaled(MEdge e, Amplitude w);
  VEdge mul_mv(const MEdge& m, const VEdge& v);
  MEdge mul_mm(const MEdge& a, const MEdge& b);
  VEdge add_vv(const VEdge& a, const VEdge& b);
  MEdge add_mm(const MEdge& a, const MEdge& b);
  void check_level(int level) const;

  int num_levels_;
  ComplexTable complex_;

  std::deque<VNode> vpool_;
  std::vector<VNode*> vfree_;
  absl::flat_hash_set<VNode*, VNodeHash, VNodeEq> vunique_;
  std::deque<MNode> mpool_;
  std::vector<MNode*> mfree_;
  absl::flat_hash_set<MNode*, MNodeHash, MNodeEq> munique_;

  std::vector<MEdge> identity_;  // identity_[k]: identity on levels k..n-1

  absl::flat_hash_map<PairKey<const MNode*, const VNode*>, VEdge, PairHash> mv_cache_;
  absl::flat_hash_map<PairKey<const MNode*, const MNode*>, MEdge, PairHash> mm_cache_;
  absl::flat_hash_map<EdgePairKey, VEdge, EdgePairHash> vadd_cache_;
  absl::flat_hash_map<EdgePairKey, MEdge, EdgePairHash> madd_cache_;

  std::uint64_t apply_ops_ = 0;
  std::uint64_t add_ops_ = 0;
};

/// Number of distinct non-terminal nodes reachable from the edge.
std::size_t node_count(const VEdge& root);
std::size_t node_count(const MEdge& root);

}  // namespace qddsim::dd
