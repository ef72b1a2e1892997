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

#include "qddsim/sim/reports.hpp"

#include <cstdio>
#include <sstream>

namespace qddsim {

namespace {

// CSV fields are plain identifiers except circuit names, which may come from
// file names.
std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string format_ms(std::int64_t ns) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", static_cast<double>(ns) / 1e6);
  return buf;
}

}  // namespace

void write_trace_csv(std::ostream& out, const SimTrace& trace) {
  out << kTraceCsvHeader << '\n';
  for (const auto& r : trace) {
    out << r.gate_index << ',' << r.gate_name << ',' << r.cumulative_ns << ',' << r.live_nodes << ','
        << r.apply_ops << '\n';
  }
}

nlohmann::json summary_json(const SimResult& result, std::string_view circuit_name) {
  nlohmann::json j{{"circuit", circuit_name},
                   {"strategy", strategy_name(result.strategy)},
                   {"order", result.order.perm()},
                   {"num_qubits", result.num_qubits},
                   {"num_gates", result.num_gates},
                   {"wall_ns", result.wall_ns},
                   {"ordering_ns", result.ordering_ns},
                   {"final_nodes", result.final_nodes},
                   {"max_nodes", result.max_nodes},
                   {"total_apply_ops", result.total_apply_ops},
                   {"tolerance", result.package ? result.package->complex().tolerance() : 0.0}};
  if (result.score_report) j["score_report"] = to_json(*result.score_report);
  if (!result.warnings.empty()) j["warnings"] = result.warnings;
  return j;
}

std::string bench_csv_header(const std::vector<OrderStrategy>& strategies) {
  std::string out = "name,qubits,gates";
  for (auto s : strategies) {
    const std::string n(strategy_name(s));
    out += "," + n + "_wall_ms," + n + "_final_nodes," + n + "_max_nodes," + n + "_apply_ops";
  }
  return out;
}

std::string bench_csv_row(const Comparison& cmp) {
  std::ostringstream out;
  out << csv_field(cmp.circuit_name) << ',' << cmp.num_qubits << ',' << cmp.num_gates;
  for (const auto& row : cmp.rows) {
    if (!row.ok) {
      out << ",ERR,ERR,ERR,ERR";
      continue;
    }
    out << ',' << format_ms(row.wall_ns) << ',' << row.final_nodes << ',' << row.max_nodes << ',' << row.apply_ops;
  }
  return out.str();
}

}  // namespace qddsim
