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

#include "qddsim/dd/export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <queue>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace qddsim::dd {

namespace {

std::string weight_label(Amplitude w) {
  char buf[64];
  if (w.im() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.6g", w.re());
  } else {
    std::snprintf(buf, sizeof buf, "%.6g%+.6gi", w.re(), w.im());
  }
  return buf;
}

}  // namespace

std::string to_dot(const VectorDD& v) {
  std::ostringstream out;
  out << "digraph dd {\n  node [shape=circle];\n  root [shape=point];\n  t [shape=box,label=\"1\"];\n";
  std::unordered_map<const VNode*, std::size_t> ids;
  auto id_of = [&](const VNode* n) -> std::string {
    if (n == VNode::terminal()) return "t";
    return "n" + std::to_string(ids.at(n));
  };
  auto edge = [&](const std::string& from, const VEdge& e, const char* style) {
    out << "  " << from << " -> " << id_of(e.node) << " [" << style;
    if (!e.w.is_one()) out << ",label=\"" << weight_label(e.w) << "\"";
    out << "];\n";
  };
  if (v.root.is_zero()) {
    out << "  root -> t [label=\"0\"];\n}\n";
    return out.str();
  }
  std::vector<const VNode*> order;
  std::vector<const VNode*> stack{v.root.node};
  while (!stack.empty()) {
    const VNode* n = stack.back();
    stack.pop_back();
    if (n == VNode::terminal() || ids.count(n)) continue;
    ids.emplace(n, ids.size());
    order.push_back(n);
    for (auto it = n->children.rbegin(); it != n->children.rend(); ++it) {
      if (!it->is_zero()) stack.push_back(it->node);
    }
  }
  for (const VNode* n : order) out << "  " << id_of(n) << " [label=\"q" << n->level << "\"];\n";
  edge("root", v.root, "style=solid");
  for (const VNode* n : order) {
    if (!n->children[0].is_zero()) edge(id_of(n), n->children[0], "style=dashed");
    if (!n->children[1].is_zero()) edge(id_of(n), n->children[1], "style=solid");
  }
  out << "}\n";
  return out.str();
}

namespace {

double heaviest_path(const VNode* n, std::unordered_map<const VNode*, double>& memo) {
  if (n == VNode::terminal()) return 1.0;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  double best = 0.0;
  for (const auto& c : n->children) {
    if (!c.is_zero()) best = std::max(best, std::sqrt(c.w.mag2()) * heaviest_path(c.node, memo));
  }
  memo.emplace(n, best);
  return best;
}

}  // namespace

std::vector<std::pair<std::uint64_t, Complex>> largest_amplitudes(const VectorDD& v, std::size_t k) {
  struct Item {
    double bound;
    std::uint64_t index;
    int depth;
    Complex weight;
    const VNode* node;
  };
  // Among equal bounds, the item whose subtree starts at the lower index
  // goes first, which keeps equal-magnitude results in index order.
  const int levels = v.num_levels;
  auto worse = [levels](const Item& a, const Item& b) {
    if (a.bound != b.bound) return a.bound < b.bound;
    const auto lo_a = a.index << (levels - a.depth);
    const auto lo_b = b.index << (levels - b.depth);
    if (lo_a != lo_b) return lo_a > lo_b;
    return a.depth < b.depth;
  };
  std::vector<std::pair<std::uint64_t, Complex>> out;
  if (k == 0 || v.root.is_zero()) return out;
  std::unordered_map<const VNode*, double> memo;
  std::priority_queue<Item, std::vector<Item>, decltype(worse)> queue(worse);
  queue.push({std::abs(v.root.w.value()) * heaviest_path(v.root.node, memo), 0, 0, v.root.w.value(), v.root.node});
  while (!queue.empty() && out.size() < k) {
    Item item = queue.top();
    queue.pop();
    if (item.node == VNode::terminal()) {
      // Complete paths are exact; bounds above any pending item are tight.
      out.emplace_back(item.index, item.weight);
      continue;
    }
    for (std::uint64_t bit = 0; bit < 2; ++bit) {
      const VEdge& c = item.node->children[bit];
      if (c.is_zero()) continue;
      const Complex w = item.weight * c.w.value();
      queue.push({std::abs(w) * heaviest_path(c.node, memo), (item.index << 1) | bit, item.depth + 1, w, c.node});
    }
  }
  return out;
}

}  // namespace qddsim::dd
