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

#include "qddsim/circuit/gate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qddsim {

namespace {

using C = std::complex<double>;

constexpr std::array<GateInfo, 33> kGates{{
    {GateKind::I, "id", 0, 1, 0, false},
    {GateKind::X, "x", 0, 1, 0, false},
    {GateKind::Y, "y", 0, 1, 0, false},
    {GateKind::Z, "z", 0, 1, 0, false},
    {GateKind::H, "h", 0, 1, 0, false},
    {GateKind::S, "s", 0, 1, 0, false},
    {GateKind::Sdg, "sdg", 0, 1, 0, false},
    {GateKind::T, "t", 0, 1, 0, false},
    {GateKind::Tdg, "tdg", 0, 1, 0, false},
    {GateKind::SX, "sx", 0, 1, 0, false},
    {GateKind::SXdg, "sxdg", 0, 1, 0, false},
    {GateKind::RX, "rx", 0, 1, 1, true},
    {GateKind::RY, "ry", 0, 1, 1, true},
    {GateKind::RZ, "rz", 0, 1, 1, true},
    {GateKind::P, "p", 0, 1, 1, true},
    {GateKind::U2, "u2", 0, 1, 2, true},
    {GateKind::U3, "u3", 0, 1, 3, true},
    {GateKind::CX, "cx", 1, 1, 0, false},
    {GateKind::CY, "cy", 1, 1, 0, false},
    {GateKind::CZ, "cz", 1, 1, 0, false},
    {GateKind::CH, "ch", 1, 1, 0, false},
    {GateKind::CSX, "csx", 1, 1, 0, false},
    {GateKind::CP, "cp", 1, 1, 1, true},
    {GateKind::CRX, "crx", 1, 1, 1, true},
    {GateKind::CRY, "cry", 1, 1, 1, true},
    {GateKind::CRZ, "crz", 1, 1, 1, true},
    {GateKind::CU3, "cu3", 1, 1, 3, true},
    {GateKind::CCX, "ccx", 2, 1, 0, false},
    {GateKind::MCX, "mcx", -1, 1, 0, false},
    {GateKind::SWAP, "swap", 0, 2, 0, false},
    {GateKind::CSWAP, "cswap", 1, 2, 0, false},
    {GateKind::RZZ, "rzz", 0, 2, 1, true},
    {GateKind::RXX, "rxx", 0, 2, 1, true},
}};

struct Alias {
  std::string_view name;
  GateKind kind;
};

// Alternative spellings accepted by the parser. The writer always emits the
// canonical name from kGates.
constexpr std::array<Alias, 6> kAliases{{
    {"u1", GateKind::P},
    {"u", GateKind::U3},
    {"U", GateKind::U3},
    {"CX", GateKind::CX},
    {"cu1", GateKind::CP},
    {"toffoli", GateKind::CCX},
}};

Matrix2 u3(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  return {C(c, 0), -std::polar(s, lambda), std::polar(s, phi), std::polar(c, phi + lambda)};
}

}  // namespace

const GateInfo& gate_info(GateKind kind) {
  const auto idx = static_cast<std::size_t>(kind);
  return kGates.at(idx);
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
  for (const auto& g : kGates) {
    if (g.name == name) return g.kind;
  }
  for (const auto& a : kAliases) {
    if (a.name == name) return a.kind;
  }
  return std::nullopt;
}

std::span<const GateInfo> all_gate_infos() { return kGates; }

bool GateOp::touches(Qubit q) const {
  return std::find(controls.begin(), controls.end(), q) != controls.end() ||
         std::find(targets.begin(), targets.end(), q) != targets.end();
}

Matrix2 target_matrix(GateKind kind, std::span<const double> params) {
  const auto& info = gate_info(kind);
  if (info.num_targets != 1) {
    throw std::invalid_argument("gate '" + std::string(info.name) + "' has no single-target matrix");
  }
  if (static_cast<int>(params.size()) != info.num_params) {
    throw std::invalid_argument("gate '" + std::string(info.name) + "' expects " +
                                std::to_string(info.num_params) + " parameter(s)");
  }
  constexpr double r = std::numbers::sqrt2 / 2;
  const C i(0, 1);
  switch (kind) {
    case GateKind::I: return {1, 0, 0, 1};
    case GateKind::X: case GateKind::CX: case GateKind::CCX: case GateKind::MCX:
      return {0, 1, 1, 0};
    case GateKind::Y: case GateKind::CY: return {0, -i, i, 0};
    case GateKind::Z: case GateKind::CZ: return {1, 0, 0, -1};
    case GateKind::H: case GateKind::CH: return {r, r, r, -r};
    case GateKind::S: return {1, 0, 0, i};
    case GateKind::Sdg: return {1, 0, 0, -i};
    case GateKind::T: return {1, 0, 0, C(r, r)};
    case GateKind::Tdg: return {1, 0, 0, C(r, -r)};
    case GateKind::SX: case GateKind::CSX:
      return {C(0.5, 0.5), C(0.5, -0.5), C(0.5, -0.5), C(0.5, 0.5)};
    case GateKind::SXdg: return {C(0.5, -0.5), C(0.5, 0.5), C(0.5, 0.5), C(0.5, -0.5)};
    case GateKind::RX: case GateKind::CRX: {
      const double c = std::cos(params[0] / 2), s = std::sin(params[0] / 2);
      return {C(c, 0), C(0, -s), C(0, -s), C(c, 0)};
    }
    case GateKind::RY: case GateKind::CRY: {
      const double c = std::cos(params[0] / 2), s = std::sin(params[0] / 2);
      return {C(c, 0), C(-s, 0), C(s, 0), C(c, 0)};
    }
    case GateKind::RZ: case GateKind::CRZ:
      return {std::polar(1.0, -params[0] / 2), 0, 0, std::polar(1.0, params[0] / 2)};
    case GateKind::P: case GateKind::CP: return {1, 0, 0, std::polar(1.0, params[0])};
    case GateKind::U2: return u3(std::numbers::pi / 2, params[0], params[1]);
    case GateKind::U3: case GateKind::CU3: return u3(params[0], params[1], params[2]);
    default: break;
  }
  throw std::invalid_argument("unhandled gate kind");
}

std::vector<ControlledUnitary> lower(const GateOp& op) {
  const auto& info = gate_info(op.kind);
  if (info.num_targets == 1) {
    return {{target_matrix(op.kind, op.params), op.controls, op.targets.at(0)}};
  }
  const Matrix2 x = target_matrix(GateKind::X, {});
  const Qubit a = op.targets.at(0);
  const Qubit b = op.targets.at(1);
  switch (op.kind) {
    case GateKind::SWAP:
      return {{x, {a}, b}, {x, {b}, a}, {x, {a}, b}};
    case GateKind::CSWAP: {
      std::vector<Qubit> ctl = op.controls;
      ctl.push_back(a);
      return {{x, {b}, a}, {x, ctl, b}, {x, {b}, a}};
    }
    case GateKind::RZZ: {
      const double theta[] = {op.params.at(0)};
      return {{x, {a}, b}, {target_matrix(GateKind::RZ, theta), {}, b}, {x, {a}, b}};
    }
    case GateKind::RXX: {
      const double theta[] = {op.params.at(0)};
      const Matrix2 h = target_matrix(GateKind::H, {});
      return {{h, {}, a}, {h, {}, b}, {x, {a}, b}, {target_matrix(GateKind::RZ, theta), {}, b},
              {x, {a}, b}, {h, {}, a}, {h, {}, b}};
    }
    default: break;
  }
  throw std::invalid_argument("cannot lower gate '" + std::string(info.name) + "'");
}

}  // namespace qddsim
