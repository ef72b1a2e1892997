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

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "qddsim/circuit/generators.hpp"

namespace qddsim {
namespace {

std::size_t columns(const std::string& line) { return std::count(line.begin(), line.end(), ',') + 1; }

TEST(Reports, TraceCsv) {
  SimConfig cfg;
  cfg.trace = true;
  const SimResult r = simulate(gen_ghz(4), cfg);
  std::ostringstream out;
  write_trace_csv(out, *r.trace);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, kTraceCsvHeader);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    EXPECT_EQ(columns(line), 5u) << line;
    ++rows;
  }
  EXPECT_EQ(rows, 4u);
}

TEST(Reports, SummaryJson) {
  SimConfig cfg;
  cfg.strategy = OrderStrategy::Proposed;
  const SimResult r = simulate(gen_ghz(8), cfg);
  const auto j = summary_json(r, "ghz8");
  EXPECT_EQ(j["circuit"], "ghz8");
  EXPECT_EQ(j["strategy"], "proposed");
  EXPECT_EQ(j["final_nodes"], 15);
  EXPECT_EQ(j["order"].size(), 8u);
  EXPECT_TRUE(j.contains("score_report"));
  EXPECT_FALSE(j.contains("warnings"));
}

TEST(Reports, BenchCsvShape) {
  const auto strategies = standard_strategies();
  const std::string header = bench_csv_header(strategies);
  EXPECT_EQ(columns(header), 3 + 4 * strategies.size());
  EXPECT_EQ(header.rfind("name,qubits,gates,original_wall_ms,original_final_nodes", 0), 0u);
  CompareOptions opts;
  opts.repeats = 1;
  const std::string row = bench_csv_row(compare_orders(gen_ghz(5), opts));
  EXPECT_EQ(columns(row), columns(header));
  EXPECT_EQ(row.rfind("ghz_5,5,5,", 0), 0u);
}

TEST(Reports, FailedCellsAndQuotedNames) {
  Comparison cmp;
  cmp.circuit_name = "a,b";
  cmp.num_qubits = 2;
  cmp.num_gates = 1;
  cmp.rows.push_back(StrategySummary{});
  EXPECT_EQ(bench_csv_row(cmp), "\"a,b\",2,1,ERR,ERR,ERR,ERR");
}

}  // namespace
}  // namespace qddsim
