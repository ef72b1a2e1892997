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

#include "json.hpp"
#include "qddsim/ordering/strategies.hpp"

namespace qddsim {

nlohmann::json to_json(const ScoreReport& report) {
  nlohmann::json qubits = nlohmann::json::array();
  for (const auto& s : report.qubits) {
    qubits.push_back({{"qubit", s.qubit},
                      {"n_ctrl", s.n_ctrl},
                      {"n_param_gate", s.n_param_gate},
                      {"base_score", s.base_score},
                      {"multiplier", s.multiplier},
                      {"final_score", s.final_score}});
  }
  return {{"multiplier_rule", "max(1, log2(n_param_gate))"}, {"qubits", std::move(qubits)}};
}

}  // namespace qddsim
