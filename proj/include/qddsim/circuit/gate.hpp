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
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace qddsim {

using Qubit = std::uint32_t;

enum class GateKind : std::uint8_t {
  I, X, Y, Z, H, S, Sdg, T, Tdg, SX, SXdg,
  RX, RY, RZ, P, U2, U3,
  CX, CY, CZ, CH, CSX, CP, CRX, CRY, CRZ, CU3,
  CCX, MCX,
  SWAP, CSWAP,
  RZZ, RXX,
};

struct GateInfo {
  GateKind kind;
  std::string_view name;  // OpenQASM 2 spelling
  int num_controls;       // -1: variadic (mcx)
  int num_targets;
  int num_params;
  bool parameterized;     // carries a continuous rotation angle
};

const GateInfo& gate_info(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);
std::span<const GateInfo> all_gate_infos();

struct GateOp {
  GateKind kind = GateKind::I;
  std::vector<Qubit> controls;
  std::vector<Qubit> targets;
  std::vector<double> params;

  std::string_view name() const { return gate_info(kind).name; }
  std::size_t arity() const { return controls.size() + targets.size(); }
  bool touches(Qubit q) const;

  friend bool operator==(const GateOp&, const GateOp&) = default;
};

/// Row-major 2x2 unitary [u00, u01, u10, u11].
using Matrix2 = std::array<std::complex<double>, 4>;

/// A single-target unitary conditioned on every control being |1>.
struct ControlledUnitary {
  Matrix2 matrix;
  std::vector<Qubit> controls;
  Qubit target;
};

/// Target matrix for kinds acting on one target (controlled or not).
/// Throws std::invalid_argument for two-target kinds.
Matrix2 target_matrix(GateKind kind, std::span<const double> params);

/// Lowers an op to a sequence of controlled single-target unitaries, in
/// application order. Single-target kinds lower to themselves; SWAP, CSWAP,
/// RZZ and RXX lower to CX/CCX ladders around single-qubit rotations.
std::vector<ControlledUnitary> lower(const GateOp& op);

}  // namespace qddsim
