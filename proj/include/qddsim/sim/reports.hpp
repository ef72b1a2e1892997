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

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qddsim/sim/simulator.hpp"

namespace qddsim {

inline constexpr std::string_view kTraceCsvHeader = "gate_index,gate_name,cumulative_ns,live_nodes,apply_ops";

void write_trace_csv(std::ostream& out, const SimTrace& trace);

/// Scalar fields of a run plus strategy name and order permutation.
nlohmann::json summary_json(const SimResult& result, std::string_view circuit_name);

/// name,qubits,gates then <strategy>_{wall_ms,final_nodes,max_nodes,apply_ops}
/// for each strategy.
std::string bench_csv_header(const std::vector<OrderStrategy>& strategies);

/// One bench row. Failed cells hold "ERR" for all four columns.
std::string bench_csv_row(const Comparison& cmp);

}  // namespace qddsim
