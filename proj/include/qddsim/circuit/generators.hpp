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
#include <string_view>
#include <vector>

#include "qddsim/circuit/circuit.hpp"

namespace qddsim {

// Deterministic benchmark-circuit families. Every generator throws
// std::invalid_argument for sizes below its minimum.

/// H on qubit 0 followed by a CX ladder: n gates.
Circuit gen_ghz(std::size_t n);

/// Cascade of RY/CZ/RY blocks plus a CX ladder preparing the n-qubit W state:
/// 4n - 3 gates.
Circuit gen_wstate(std::size_t n);

/// QFT with the trailing swap layer. With `entangled`, a GHZ-style
/// preparation (H on the last qubit, CX fan-out) is prepended.
Circuit gen_qft(std::size_t n, bool entangled);

/// Phase estimation with n - 1 counting qubits (0..n-2) and the eigenstate
/// qubit n - 1. The eigenphase is odd/2^(n-1) when exact and odd/2^n when not,
/// so the inexact phase never fits the counting register. Needs n >= 3.
Circuit gen_qpe(std::size_t n, bool exact);

/// Graph state over a seeded random 2-regular graph (one Hamiltonian cycle):
/// H on every qubit then one CZ per edge.
Circuit gen_graph_state(std::size_t n, std::uint64_t seed);

/// Layered random circuit: each layer covers every qubit once with one- and
/// two-qubit gates drawn from a fixed gate pool with random angles.
Circuit gen_random(std::size_t n, std::size_t depth, std::uint64_t seed);

/// Seed of the built-in suite's graph and random circuits.
inline constexpr std::uint64_t kSuiteSeed = 20250101;

/// Depth at which an 18-qubit random circuit with kSuiteSeed has 749 gates,
/// the size of the 18-qubit random benchmark.
inline constexpr std::size_t kRandom18Depth = 63;

/// Built-in benchmark suite: ghz, wstate, qft, qft-entangled, qpe-exact,
/// qpe-inexact, graph and random circuits for every size in `sizes`, grouped
/// by size. Random circuits use depth n and a fixed seed.
std::vector<Circuit> benchmark_suite(const std::vector<std::size_t>& sizes);

/// Builds one generator family by name (the names accepted by `qddsim gen`).
/// Throws std::invalid_argument for unknown names.
Circuit generate(std::string_view family, std::size_t n, std::uint64_t seed, std::size_t depth);

}  // namespace qddsim
