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

// Brute-force statevector reference used as the test oracle. It shares no
// code with the decision-diagram engine: gate actions are written out from
// their textbook definitions and applied index by index. Qubit 0 is the most
// significant bit of a basis index.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qddsim/circuit/circuit.hpp"

namespace qddsim::testing {

using C = std::complex<double>;

class DenseSimulator {
 public:
  explicit DenseSimulator(std::size_t n) : n_(n), amp_(std::size_t{1} << n) { amp_[0] = 1.0; }
  DenseSimulator(std::size_t n, std::vector<C> state) : n_(n), amp_(std::move(state)) {}

  const std::vector<C>& state() const { return amp_; }
  std::size_t num_qubits() const { return n_; }

  void run(const Circuit& c) {
    for (const auto& op : c.ops()) apply(op);
  }

  void apply(const GateOp& op) {
    const auto& t = op.targets;
    const auto& p = op.params;
    const double pi = std::numbers::pi;
    const C i(0, 1);
    switch (op.kind) {
      case GateKind::I: return;
      case GateKind::X: case GateKind::CX: case GateKind::CCX: case GateKind::MCX:
        return single(op.controls, t[0], 0, 1, 1, 0);
      case GateKind::Y: case GateKind::CY: return single(op.controls, t[0], 0, -i, i, 0);
      case GateKind::Z: case GateKind::CZ: return single(op.controls, t[0], 1, 0, 0, -1);
      case GateKind::H: case GateKind::CH: {
        const double h = 1 / std::sqrt(2.0);
        return single(op.controls, t[0], h, h, h, -h);
      }
      case GateKind::S: return single(op.controls, t[0], 1, 0, 0, i);
      case GateKind::Sdg: return single(op.controls, t[0], 1, 0, 0, -i);
      case GateKind::T: return single(op.controls, t[0], 1, 0, 0, std::exp(i * (pi / 4)));
      case GateKind::Tdg: return single(op.controls, t[0], 1, 0, 0, std::exp(-i * (pi / 4)));
      case GateKind::SX: case GateKind::CSX:
        return single(op.controls, t[0], (1.0 + i) / 2.0, (1.0 - i) / 2.0, (1.0 - i) / 2.0, (1.0 + i) / 2.0);
      case GateKind::SXdg:
        return single(op.controls, t[0], (1.0 - i) / 2.0, (1.0 + i) / 2.0, (1.0 + i) / 2.0, (1.0 - i) / 2.0);
      case GateKind::RX: case GateKind::CRX: {
        // exp(-i theta X / 2)
        const double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
        return single(op.controls, t[0], c, -i * s, -i * s, c);
      }
      case GateKind::RY: case GateKind::CRY: {
        const double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
        return single(op.controls, t[0], c, -s, s, c);
      }
      case GateKind::RZ: case GateKind::CRZ:
        return single(op.controls, t[0], std::exp(-i * (p[0] / 2)), 0, 0, std::exp(i * (p[0] / 2)));
      case GateKind::P: case GateKind::CP: return single(op.controls, t[0], 1, 0, 0, std::exp(i * p[0]));
      case GateKind::U2: return u3(op.controls, t[0], pi / 2, p[0], p[1]);
      case GateKind::U3: case GateKind::CU3: return u3(op.controls, t[0], p[0], p[1], p[2]);
      case GateKind::SWAP: case GateKind::CSWAP: return swap(op.controls, t[0], t[1]);
      case GateKind::RZZ: {
        // exp(-i theta Z⊗Z / 2): phase by parity of the two bits.
        for (std::uint64_t k = 0; k < amp_.size(); ++k) {
          const bool odd = bit(k, t[0]) != bit(k, t[1]);
          amp_[k] *= std::exp(i * (odd ? p[0] / 2 : -p[0] / 2));
        }
        return;
      }
      case GateKind::RXX: {
        // cos(theta/2) I - i sin(theta/2) X⊗X
        const double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
        const std::uint64_t flip = mask(t[0]) | mask(t[1]);
        std::vector<C> next(amp_.size());
        for (std::uint64_t k = 0; k < amp_.size(); ++k) next[k] = c * amp_[k] - i * s * amp_[k ^ flip];
        amp_ = std::move(next);
        return;
      }
    }
    throw std::logic_error("oracle: unhandled gate");
  }

 private:
  std::uint64_t mask(Qubit q) const { return std::uint64_t{1} << (n_ - 1 - q); }
  bool bit(std::uint64_t k, Qubit q) const { return (k & mask(q)) != 0; }

  bool controls_on(std::uint64_t k, const std::vector<Qubit>& controls) const {
    for (Qubit c : controls) {
      if (!bit(k, c)) return false;
    }
    return true;
  }

  void single(const std::vector<Qubit>& controls, Qubit target, C u00, C u01, C u10, C u11) {
    const std::uint64_t m = mask(target);
    for (std::uint64_t k = 0; k < amp_.size(); ++k) {
      if ((k & m) != 0 || !controls_on(k, controls)) continue;
      const C a0 = amp_[k], a1 = amp_[k | m];
      amp_[k] = u00 * a0 + u01 * a1;
      amp_[k | m] = u10 * a0 + u11 * a1;
    }
  }

  void u3(const std::vector<Qubit>& controls, Qubit target, double theta, double phi, double lambda) {
    const C i(0, 1);
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    single(controls, target, c, -std::exp(i * lambda) * s, std::exp(i * phi) * s, std::exp(i * (phi + lambda)) * c);
  }

  void swap(const std::vector<Qubit>& controls, Qubit a, Qubit b) {
    for (std::uint64_t k = 0; k < amp_.size(); ++k) {
      if (bit(k, a) && !bit(k, b) && controls_on(k, controls)) std::swap(amp_[k], amp_[(k ^ mask(a)) | mask(b)]);
    }
  }

  std::size_t n_;
  std::vector<C> amp_;
};

inline std::vector<C> dense_state(const Circuit& c) {
  DenseSimulator sim(c.num_qubits());
  sim.run(c);
  return sim.state();
}

/// Row-major dense unitary of one op, built column by column.
inline std::vector<C> dense_matrix(const GateOp& op, std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  std::vector<C> m(dim * dim);
  for (std::size_t col = 0; col < dim; ++col) {
    std::vector<C> basis(dim);
    basis[col] = 1.0;
    DenseSimulator sim(n, std::move(basis));
    sim.apply(op);
    for (std::size_t row = 0; row < dim; ++row) m[row * dim + col] = sim.state()[row];
  }
  return m;
}

inline double max_abs_diff(const std::vector<C>& a, const std::vector<C>& b) {
  if (a.size() != b.size()) return INFINITY;
  double d = 0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

}  // namespace qddsim::testing
