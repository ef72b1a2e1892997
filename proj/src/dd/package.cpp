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

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qddsim::dd {

namespace {

inline std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

// 64-bit finalizer; node addresses are aligned and clustered, and the
// open-addressing tables need well-spread low and high bits.
inline std::size_t fmix(std::uint64_t k) {
  k ^= k >> 33;
  k *= 0xff51afd7ed558ccdULL;
  k ^= k >> 33;
  k *= 0xc4ceb9fe1a85ec53ULL;
  k ^= k >> 33;
  return static_cast<std::size_t>(k);
}

inline std::size_t ptr_hash(const void* p) { return fmix(reinterpret_cast<std::uintptr_t>(p)); }

}  // namespace

const VNode* VNode::terminal() {
  static const VNode t{};
  return &t;
}

const MNode* MNode::terminal() {
  static const MNode t{kTerminalLevel, {}, true, false};
  return &t;
}

std::size_t Package::VNodeHash::operator()(const VNode* n) const {
  std::size_t h = std::hash<int>{}(n->level);
  for (const auto& c : n->children) h = mix(mix(h, ptr_hash(c.w.id())), ptr_hash(c.node));
  return fmix(h);
}

bool Package::VNodeEq::operator()(const VNode* a, const VNode* b) const {
  return a->level == b->level && a->children == b->children;
}

std::size_t Package::MNodeHash::operator()(const MNode* n) const {
  std::size_t h = std::hash<int>{}(n->level);
  for (const auto& c : n->children) h = mix(mix(h, ptr_hash(c.w.id())), ptr_hash(c.node));
  return fmix(h);
}

bool Package::MNodeEq::operator()(const MNode* a, const MNode* b) const {
  return a->level == b->level && a->children == b->children;
}

std::size_t Package::EdgePairHash::operator()(const EdgePairKey& k) const {
  return fmix(mix(mix(mix(ptr_hash(k.wa), ptr_hash(k.na)), ptr_hash(k.wb)), ptr_hash(k.nb)));
}

Package::Package(int num_levels, double tolerance) : num_levels_(num_levels), complex_(tolerance) {
  if (num_levels < 1) throw std::invalid_argument("a decision diagram needs at least one level");
  if (num_levels > 62) throw std::invalid_argument("at most 62 levels are supported");
  identity_.assign(static_cast<std::size_t>(num_levels) + 1, MEdge::one());
  for (int z = num_levels - 1; z >= 0; --z) {
    const MEdge below = identity_[static_cast<std::size_t>(z) + 1];
    identity_[static_cast<std::size_t>(z)] = make_node(z, {below, MEdge::zero(), MEdge::zero(), below});
  }
}

void Package::check_level(int level) const {
  if (level < 0 || level >= num_levels_) {
    throw std::invalid_argument("level " + std::to_string(level) + " outside [0, " + std::to_string(num_levels_) +
                                ")");
  }
}

VEdge Package::make_node(int level, const std::array<VEdge, 2>& children) {
  auto first = std::find_if(children.begin(), children.end(), [](const VEdge& e) { return !e.is_zero(); });
  if (first == children.end()) return VEdge::zero();
  const Amplitude factor = first->w;

  VNode candidate;
  candidate.level = level;
  for (std::size_t i = 0; i < children.size(); ++i) {
    assert(children[i].is_zero() || children[i].node->level > level);
    assert(!children[i].is_zero() || children[i].is_terminal());
    if (children[i].is_zero()) {
      candidate.children[i] = VEdge::zero();
    } else {
      const Amplitude w = complex_.div(children[i].w, factor);
      candidate.children[i] = w.is_zero() ? VEdge::zero() : VEdge{w, children[i].node};
    }
  }

  if (auto it = vunique_.find(&candidate); it != vunique_.end()) return {factor, *it};
  VNode* node;
  if (!vfree_.empty()) {
    node = vfree_.back();
    vfree_.pop_back();
    *node = candidate;
  } else {
    node = &vpool_.emplace_back(candidate);
  }
  vunique_.insert(node);
  return {factor, node};
}

MEdge Package::make_node(int level, const std::array<MEdge, 4>& children) {
  auto first = std::find_if(children.begin(), children.end(), [](const MEdge& e) { return !e.is_zero(); });
  if (first == children.end()) return MEdge::zero();
  const Amplitude factor = first->w;

  MNode candidate;
  candidate.level = level;
  for (std::size_t i = 0; i < children.size(); ++i) {
    assert(children[i].is_zero() || children[i].node->level > level);
    if (children[i].is_zero()) {
      candidate.children[i] = MEdge::zero();
    } else {
      const Amplitude w = complex_.div(children[i].w, factor);
      candidate.children[i] = w.is_zero() ? MEdge::zero() : MEdge{w, children[i].node};
    }
  }
  const auto& c = candidate.children;
  candidate.identity = c[0].w.is_one() && c[1].is_zero() && c[2].is_zero() && c[3] == c[0] &&
                       c[0].node->identity;

  if (auto it = munique_.find(&candidate); it != munique_.end()) return {factor, *it};
  MNode* node;
  if (!mfree_.empty()) {
    node = mfree_.back();
    mfree_.pop_back();
    *node = candidate;
  } else {
    node = &mpool_.emplace_back(candidate);
  }
  munique_.insert(node);
  return {factor, node};
}

VectorDD Package::make_basis_state(std::string_view bits) {
  if (bits.size() != static_cast<std::size_t>(num_levels_)) {
    throw std::invalid_argument("basis state needs " + std::to_string(num_levels_) + " bits, got " +
                                std::to_string(bits.size()));
  }
  VEdge e = VEdge::one();
  for (int z = num_levels_ - 1; z >= 0; --z) {
    const char b = bits[static_cast<std::size_t>(z)];
    if (b == '0') {
      e = make_node(z, {e, VEdge::zero()});
    } else if (b == '1') {
      e = make_node(z, {VEdge::zero(), e});
    } else {
      throw std::invalid_argument(std::string("basis state bits must be '0' or '1', got '") + b + "'");
    }
  }
  return {e, num_levels_};
}

VectorDD Package::make_zero_state() { return make_basis_state(std::string(static_cast<std::size_t>(num_levels_), '0')); }

MatrixDD Package::make_controlled_gate(const Matrix2& u, int target_level, std::span<const int> control_levels) {
  check_level(target_level);
  std::vector<bool> is_control(static_cast<std::size_t>(num_levels_), false);
  for (int c : control_levels) {
    check_level(c);
    if (c == target_level || is_control[static_cast<std::size_t>(c)]) {
      throw std::invalid_argument("control level " + std::to_string(c) + " repeated or equal to target");
    }
    is_control[static_cast<std::size_t>(c)] = true;
  }

  // Build the four target-block entries bottom-up below the target level. A
  // control below the target whose value is 0 turns the block into delta_ij * I.
  std::array<MEdge, 4> block;
  for (std::size_t i = 0; i < 4; ++i) {
    const Amplitude w = complex_.intern(u[i]);
    block[i] = w.is_zero() ? MEdge::zero() : MEdge{w, MNode::terminal()};
  }
  for (int z = num_levels_ - 1; z > target_level; --z) {
    const auto zi = static_cast<std::size_t>(z);
    for (std::size_t i = 0; i < 4; ++i) {
      if (is_control[zi]) {
        const bool diagonal = i == 0 || i == 3;
        const MEdge off = diagonal ? identity_[zi + 1] : MEdge::zero();
        block[i] = make_node(z, {off, MEdge::zero(), MEdge::zero(), block[i]});
      } else {
        block[i] = make_node(z, {block[i], MEdge::zero(), MEdge::zero(), block[i]});
      }
    }
  }
  MEdge e = make_node(target_level, block);
  for (int z = target_level - 1; z >= 0; --z) {
    const auto zi = static_cast<std::size_t>(z);
    if (is_control[zi]) {
      e = make_node(z, {identity_[zi + 1], MEdge::zero(), MEdge::zero(), e});
    } else {
      e = make_node(z, {e, MEdge::zero(), MEdge::zero(), e});
    }
  }
  return {e, num_levels_};
}

MatrixDD Package::compose(std::span<const MatrixDD> factors) {
  MatrixDD acc = identity();
  for (const auto& f : factors) acc = multiply(f, acc);
  return acc;
}

VEdge Package::scaled(VEdge e, Amplitude w) {
  const Amplitude r = complex_.mul(e.w, w);
  return r.is_zero() ? VEdge::zero() : VEdge{r, e.node};
}

MEdge Package::scaled(MEdge e, Amplitude w) {
  const Amplitude r = complex_.mul(e.w, w);
  return r.is_zero() ? MEdge::zero() : MEdge{r, e.node};
}

VEdge Package::mul_mv(const MEdge& m, const VEdge& v) {
  if (m.is_zero() || v.is_zero()) return VEdge::zero();
  const Amplitude w = complex_.mul(m.w, v.w);
  if (w.is_zero()) return VEdge::zero();
  if (m.node->identity) return {w, v.node};
  assert(m.node->level == v.node->level);

  const PairKey<const MNode*, const VNode*> key{m.node, v.node};
  if (auto it = mv_cache_.find(key); it != mv_cache_.end()) return scaled(it->second, w);

  ++apply_ops_;
  const auto& mc = m.node->children;
  const auto& vc = v.node->children;
  std::array<VEdge, 2> rows;
  for (std::size_t i = 0; i < 2; ++i) {
    rows[i] = add_vv(mul_mv(mc[2 * i], vc[0]), mul_mv(mc[2 * i + 1], vc[1]));
  }
  const VEdge r = make_node(m.node->level, rows);
  mv_cache_.emplace(key, r);
  return scaled(r, w);
}

MEdge Package::mul_mm(const MEdge& a, const MEdge& b) {
  if (a.is_zero() || b.is_zero()) return MEdge::zero();
  const Amplitude w = complex_.mul(a.w, b.w);
  if (w.is_zero()) return MEdge::zero();
  if (a.node->identity) return {w, b.node};
  if (b.node->identity) return {w, a.node};
  assert(a.node->level == b.node->level);

  const PairKey<const MNode*, const MNode*> key{a.node, b.node};
  if (auto it = mm_cache_.find(key); it != mm_cache_.end()) return scaled(it->second, w);

  const auto& ac = a.node->children;
  const auto& bc = b.node->children;
  std::array<MEdge, 4> out;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      out[2 * i + j] = add_mm(mul_mm(ac[2 * i], bc[j]), mul_mm(ac[2 * i + 1], bc[2 + j]));
    }
  }
  const MEdge r = make_node(a.node->level, out);
  mm_cache_.emplace(key, r);
  return scaled(r, w);
}

VEdge Package::add_vv(const VEdge& a, const VEdge& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.node == b.node) {
    const Amplitude w = complex_.add(a.w, b.w);
    return w.is_zero() ? VEdge::zero() : VEdge{w, a.node};
  }
  // Addition is commutative, so order the operands for a better hit rate.
  const bool swap = std::less<const void*>{}(b.node, a.node);
  const VEdge& x = swap ? b : a;
  const VEdge& y = swap ? a : b;
  const EdgePairKey key{x.w.id(), x.node, y.w.id(), y.node};
  if (auto it = vadd_cache_.find(key); it != vadd_cache_.end()) return it->second;

  ++add_ops_;
  std::array<VEdge, 2> out;
  for (std::size_t i = 0; i < 2; ++i) {
    out[i] = add_vv(scaled(x.node->children[i], x.w), scaled(y.node->children[i], y.w));
  }
  const VEdge r = make_node(x.node->level, out);
  vadd_cache_.emplace(key, r);
  return r;
}

MEdge Package::add_mm(const MEdge& a, const MEdge& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.node == b.node) {
    const Amplitude w = complex_.add(a.w, b.w);
    return w.is_zero() ? MEdge::zero() : MEdge{w, a.node};
  }
  const bool swap = std::less<const void*>{}(b.node, a.node);
  const MEdge& x = swap ? b : a;
  const MEdge& y = swap ? a : b;
  const EdgePairKey key{x.w.id(), x.node, y.w.id(), y.node};
  if (auto it = madd_cache_.find(key); it != madd_cache_.end()) return it->second;

  auto child = [&](const MEdge& e, std::size_t i) { return scaled(e.node->children[i], e.w); };
  std::array<MEdge, 4> out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = add_mm(child(x, i), child(y, i));
  const MEdge r = make_node(x.node->level, out);
  madd_cache_.emplace(key, r);
  return r;
}

VectorDD Package::apply(const MatrixDD& m, const VectorDD& v) {
  if (m.num_levels != v.num_levels || m.num_levels != num_levels_) {
    throw std::invalid_argument("level mismatch: matrix has " + std::to_string(m.num_levels) + ", vector has " +
                                std::to_string(v.num_levels));
  }
  return {mul_mv(m.root, v.root), num_levels_};
}

MatrixDD Package::multiply(const MatrixDD& a, const MatrixDD& b) {
  if (a.num_levels != b.num_levels || a.num_levels != num_levels_) {
    throw std::invalid_argument("level mismatch in matrix product");
  }
  return {mul_mm(a.root, b.root), num_levels_};
}

VectorDD Package::add(const VectorDD& a, const VectorDD& b) {
  if (a.num_levels != b.num_levels || a.num_levels != num_levels_) {
    throw std::invalid_argument("level mismatch: " + std::to_string(a.num_levels) + " vs " +
                                std::to_string(b.num_levels));
  }
  return {add_vv(a.root, b.root), num_levels_};
}

MatrixDD Package::add(const MatrixDD& a, const MatrixDD& b) {
  if (a.num_levels != b.num_levels || a.num_levels != num_levels_) {
    throw std::invalid_argument("level mismatch in matrix sum");
  }
  return {add_mm(a.root, b.root), num_levels_};
}

VectorDD Package::scale(const VectorDD& v, Complex factor) {
  return {scaled(v.root, complex_.intern(factor)), v.num_levels};
}

Amplitude Package::amplitude(const VectorDD& v, std::string_view bits) {
  if (bits.size() != static_cast<std::size_t>(v.num_levels)) {
    throw std::invalid_argument("index has " + std::to_string(bits.size()) + " bits, diagram has " +
                                std::to_string(v.num_levels) + " levels");
  }
  Amplitude acc = v.root.w;
  const VNode* node = v.root.node;
  for (char b : bits) {
    if (acc.is_zero()) return Amplitude::zero();
    if (b != '0' && b != '1') throw std::invalid_argument("index bits must be '0' or '1'");
    const VEdge& e = node->children[b == '1' ? 1 : 0];
    acc = complex_.mul(acc, e.w);
    node = e.node;
  }
  return acc;
}

Complex Package::amplitude(const VectorDD& v, std::uint64_t index) const {
  Complex acc = v.root.w.value();
  const VNode* node = v.root.node;
  for (int z = 0; z < v.num_levels; ++z) {
    if (acc == Complex{}) return {};
    const auto bit = (index >> (v.num_levels - 1 - z)) & 1U;
    const VEdge& e = node->children[bit];
    acc *= e.w.value();
    node = e.node;
  }
  return acc;
}

double Package::norm(const VectorDD& v) const {
  std::unordered_map<const VNode*, double> memo;
  auto sq = [&](auto&& self, const VNode* n) -> double {
    if (n == VNode::terminal()) return 1.0;
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    double s = 0.0;
    for (const auto& c : n->children) {
      if (!c.is_zero()) s += c.w.mag2() * self(self, c.node);
    }
    memo.emplace(n, s);
    return s;
  };
  if (v.root.is_zero()) return 0.0;
  return std::sqrt(v.root.w.mag2() * sq(sq, v.root.node));
}

std::vector<Complex> Package::to_dense(const VectorDD& v) const {
  std::vector<Complex> out(std::size_t{1} << v.num_levels);
  auto fill = [&](auto&& self, const VEdge& e, Complex w, std::size_t offset, std::size_t span) -> void {
    if (e.is_zero()) return;
    const Complex ww = w * e.w.value();
    if (e.is_terminal()) {
      out[offset] = ww;
      return;
    }
    const std::size_t half = span / 2;
    self(self, e.node->children[0], ww, offset, half);
    self(self, e.node->children[1], ww, offset + half, half);
  };
  fill(fill, v.root, Complex{1.0, 0.0}, 0, out.size());
  return out;
}

std::vector<Complex> Package::to_dense(const MatrixDD& m) const {
  const std::size_t dim = std::size_t{1} << m.num_levels;
  std::vector<Complex> out(dim * dim);
  auto fill = [&](auto&& self, const MEdge& e, Complex w, std::size_t row, std::size_t col, int level) -> void {
    if (e.is_zero()) return;
    const Complex ww = w * e.w.value();
    if (level == m.num_levels) {
      out[row * dim + col] = ww;
      return;
    }
    const std::size_t half = std::size_t{1} << (m.num_levels - 1 - level);
    if (e.node->level != level) {
      throw std::logic_error("matrix diagram skips a level");
    }
    for (std::size_t i = 0; i < 4; ++i) {
      self(self, e.node->children[i], ww, row + (i / 2) * half, col + (i % 2) * half, level + 1);
    }
  };
  fill(fill, m.root, Complex{1.0, 0.0}, 0, 0, 0);
  return out;
}

std::size_t Package::gc(std::span<const VEdge> vector_roots, std::span<const MEdge> matrix_roots) {
  auto mark_v = [](auto&& self, const VNode* n) -> void {
    if (n == VNode::terminal() || n->marked) return;
    n->marked = true;
    for (const auto& c : n->children) self(self, c.node);
  };
  auto mark_m = [](auto&& self, const MNode* n) -> void {
    if (n == MNode::terminal() || n->marked) return;
    n->marked = true;
    for (const auto& c : n->children) self(self, c.node);
  };
  for (const auto& r : vector_roots) mark_v(mark_v, r.node);
  for (const auto& r : matrix_roots) mark_m(mark_m, r.node);
  for (const auto& r : identity_) mark_m(mark_m, r.node);

  std::size_t freed = 0;
  for (auto it = vunique_.begin(); it != vunique_.end();) {
    VNode* n = *it;
    if (n->marked) {
      n->marked = false;
      ++it;
    } else {
      vunique_.erase(it++);
      vfree_.push_back(n);
      ++freed;
    }
  }
  for (auto it = munique_.begin(); it != munique_.end();) {
    MNode* n = *it;
    if (n->marked) {
      n->marked = false;
      ++it;
    } else {
      munique_.erase(it++);
      mfree_.push_back(n);
      ++freed;
    }
  }
  clear_caches();
  return freed;
}

void Package::clear_caches() {
  mv_cache_.clear();
  mm_cache_.clear();
  vadd_cache_.clear();
  madd_cache_.clear();
}

std::size_t node_count(const VEdge& root) {
  absl::flat_hash_set<const VNode*> seen;
  std::vector<const VNode*> stack;
  if (!root.is_zero() && !root.is_terminal()) stack.push_back(root.node);
  while (!stack.empty()) {
    const VNode* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    for (const auto& c : n->children) {
      if (!c.is_zero() && !c.is_terminal()) stack.push_back(c.node);
    }
  }
  return seen.size();
}

std::size_t node_count(const MEdge& root) {
  absl::flat_hash_set<const MNode*> seen;
  std::vector<const MNode*> stack;
  if (!root.is_zero() && !root.is_terminal()) stack.push_back(root.node);
  while (!stack.empty()) {
    const MNode* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    for (const auto& c : n->children) {
      if (!c.is_zero() && !c.is_terminal()) stack.push_back(c.node);
    }
  }
  return seen.size();
}

}  // namespace qddsim::dd
