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

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace qddsim {

namespace {

constexpr double kPi = std::numbers::pi;

void require(std::size_t n, std::size_t min, const char* what) {
  if (n < min) {
    throw std::invalid_argument(std::string(what) + " needs at least " + std::to_string(min) + " qubits");
  }
}

// std distributions are implementation-defined; these helpers keep generator
// output identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::size_t below(std::size_t k) { return static_cast<std::size_t>(engine_() % k); }
  std::uint64_t bits() { return engine_(); }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

// QFT over qubits [0, m): for j = m-1..0, H(j) then CP(pi/2^(j-k)) from j onto
// each k < j, then swaps.
std::vector<GateOp> qft_ops(std::size_t m) {
  std::vector<GateOp> ops;
  for (std::size_t jj = m; jj-- > 0;) {
    const auto j = static_cast<Qubit>(jj);
    ops.push_back({GateKind::H, {}, {j}, {}});
    for (std::size_t kk = jj; kk-- > 0;) {
      const auto k = static_cast<Qubit>(kk);
      ops.push_back({GateKind::CP, {j}, {k}, {kPi * std::ldexp(1.0, static_cast<int>(kk) - static_cast<int>(jj))}});
    }
  }
  for (std::size_t i = 0; i < m / 2; ++i) {
    ops.push_back({GateKind::SWAP, {}, {static_cast<Qubit>(i), static_cast<Qubit>(m - 1 - i)}, {}});
  }
  return ops;
}

}  // namespace

Circuit gen_ghz(std::size_t n) {
  require(n, 2, "ghz");
  Circuit c(n, "ghz_" + std::to_string(n));
  c.h(0);
  for (Qubit q = 0; q + 1 < n; ++q) c.cx(q, q + 1);
  return c;
}

Circuit gen_wstate(std::size_t n) {
  require(n, 2, "wstate");
  Circuit c(n, "wstate_" + std::to_string(n));
  const auto last = static_cast<Qubit>(n - 1);
  c.x(last);
  for (std::size_t m = 1; m < n; ++m) {
    const auto i = static_cast<Qubit>(n - m);
    const auto j = static_cast<Qubit>(n - m - 1);
    const double theta = std::acos(std::sqrt(1.0 / static_cast<double>(n - m + 1)));
    c.ry(-theta, j);
    c.cz(i, j);
    c.ry(theta, j);
  }
  for (std::size_t k = n - 1; k >= 1; --k) c.cx(static_cast<Qubit>(k - 1), static_cast<Qubit>(k));
  return c;
}

Circuit gen_qft(std::size_t n, bool entangled) {
  require(n, 2, "qft");
  Circuit c(n, (entangled ? "qft_entangled_" : "qft_") + std::to_string(n));
  if (entangled) {
    const auto last = static_cast<Qubit>(n - 1);
    c.h(last);
    for (Qubit q = 0; q + 1 < n; ++q) c.cx(last, q);
  }
  for (auto& op : qft_ops(n)) c.add(std::move(op));
  return c;
}

Circuit gen_qpe(std::size_t n, bool exact) {
  require(n, 3, "qpe");
  if (n > 62) throw std::invalid_argument("qpe supports at most 62 qubits");
  const std::size_t m = n - 1;
  // Eigenphase theta = k / 2^bits with k odd, so every one of the `bits`
  // binary digits matters.
  const std::size_t bits = exact ? m : m + 1;
  Rng rng(0x9e3779b97f4a7c15ULL ^ n);
  const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
  const std::uint64_t k = (rng.bits() & mask) | 1;

  Circuit c(n, (exact ? "qpe_exact_" : "qpe_inexact_") + std::to_string(n));
  const auto psi = static_cast<Qubit>(m);
  c.x(psi);
  for (Qubit q = 0; q < m; ++q) c.h(q);
  for (std::size_t q = 0; q < m; ++q) {
    // Phase of U^(2^q) = 2*pi*frac(k * 2^q / 2^bits), computed exactly.
    const std::uint64_t frac = (k << q) & mask;
    const double angle = 2 * kPi * std::ldexp(static_cast<double>(frac), -static_cast<int>(bits));
    c.cp(angle, static_cast<Qubit>(q), psi);
  }
  auto forward = qft_ops(m);
  for (auto it = forward.rbegin(); it != forward.rend(); ++it) {
    GateOp inv = *it;
    for (double& p : inv.params) p = -p;
    c.add(std::move(inv));
  }
  return c;
}

Circuit gen_graph_state(std::size_t n, std::uint64_t seed) {
  require(n, 2, "graph state");
  Circuit c(n, "graph_" + std::to_string(n));
  std::vector<Qubit> cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Qubit>(i);
  Rng rng(seed);
  rng.shuffle(cycle);
  for (Qubit q = 0; q < n; ++q) c.h(q);
  for (std::size_t i = 0; i + 1 < n; ++i) c.cz(cycle[i], cycle[i + 1]);
  if (n >= 3) c.cz(cycle[n - 1], cycle[0]);
  return c;
}

Circuit gen_random(std::size_t n, std::size_t depth, std::uint64_t seed) {
  require(n, 2, "random");
  if (depth == 0) throw std::invalid_argument("random circuit depth must be positive");
  static constexpr GateKind kOneQubit[] = {GateKind::H,  GateKind::X,  GateKind::Y,   GateKind::Z,
                                           GateKind::S,  GateKind::Sdg, GateKind::T,  GateKind::Tdg,
                                           GateKind::SX, GateKind::RX, GateKind::RY,  GateKind::RZ,
                                           GateKind::P,  GateKind::U3};
  static constexpr GateKind kTwoQubit[] = {GateKind::CX,  GateKind::CZ,   GateKind::CP,
                                           GateKind::CRZ, GateKind::SWAP, GateKind::RZZ};
  Circuit c(n, "random_" + std::to_string(n) + "_d" + std::to_string(depth) + "_s" + std::to_string(seed));
  Rng rng(seed);
  std::vector<Qubit> qubits(n);
  for (std::size_t i = 0; i < n; ++i) qubits[i] = static_cast<Qubit>(i);
  for (std::size_t layer = 0; layer < depth; ++layer) {
    rng.shuffle(qubits);
    std::size_t i = 0;
    while (i < n) {
      const bool pair = i + 1 < n && rng.below(2) == 1;
      const GateKind kind = pair ? kTwoQubit[rng.below(std::size(kTwoQubit))]
                                 : kOneQubit[rng.below(std::size(kOneQubit))];
      const auto& info = gate_info(kind);
      std::vector<double> params;
      for (int p = 0; p < info.num_params; ++p) params.push_back(2 * kPi * rng.uniform());
      if (!pair) {
        c.add(kind, {}, {qubits[i]}, std::move(params));
        i += 1;
      } else if (info.num_controls == 1) {
        c.add(kind, {qubits[i]}, {qubits[i + 1]}, std::move(params));
        i += 2;
      } else {
        c.add(kind, {}, {qubits[i], qubits[i + 1]}, std::move(params));
        i += 2;
      }
    }
  }
  return c;
}

std::vector<Circuit> benchmark_suite(const std::vector<std::size_t>& sizes) {
  std::vector<Circuit> out;
  for (std::size_t n : sizes) {
    out.push_back(gen_ghz(n));
    out.push_back(gen_wstate(n));
    out.push_back(gen_qft(n, false));
    out.push_back(gen_qft(n, true));
    out.push_back(gen_qpe(n, true));
    out.push_back(gen_qpe(n, false));
    out.push_back(gen_graph_state(n, kSuiteSeed));
    out.push_back(gen_random(n, n, kSuiteSeed));
  }
  return out;
}

Circuit generate(std::string_view family, std::size_t n, std::uint64_t seed, std::size_t depth) {
  if (family == "ghz") return gen_ghz(n);
  if (family == "wstate") return gen_wstate(n);
  if (family == "qft") return gen_qft(n, false);
  if (family == "qft-entangled") return gen_qft(n, true);
  if (family == "qpe-exact") return gen_qpe(n, true);
  if (family == "qpe-inexact") return gen_qpe(n, false);
  if (family == "graph") return gen_graph_state(n, seed);
  if (family == "random") return gen_random(n, depth == 0 ? n : depth, seed);
  throw std::invalid_argument("unknown generator '" + std::string(family) + "'");
}

}  // namespace qddsim
