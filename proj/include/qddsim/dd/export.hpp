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

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qddsim/dd/package.hpp"

namespace qddsim::dd {

/// Graphviz rendering: one box per node labelled with its level, edges
/// labelled with their weights (weight 1 is left unlabelled), zero edges
/// omitted, and the terminal drawn once as "1".
std::string to_dot(const VectorDD& v);

/// The k basis states of largest magnitude, largest first, ties by index.
/// Indices are level-space (level 0 is the most significant bit). Runs a
/// best-first search bounded by the heaviest path below each node, so it
/// never expands the full vector.
std::vector<std::pair<std::uint64_t, Complex>> largest_amplitudes(const VectorDD& v, std::size_t k);

}  // namespace qddsim::dd
