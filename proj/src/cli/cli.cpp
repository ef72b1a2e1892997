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

#include "qddsim/cli/cli.hpp"

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "qddsim/circuit/generators.hpp"
#include "qddsim/circuit/qasm.hpp"
#include "qddsim/dd/export.hpp"
#include "qddsim/ordering/strategies.hpp"
#include "qddsim/sim/reports.hpp"
#include "qddsim/sim/simulator.hpp"

namespace qddsim::cli {

namespace {

namespace fs = std::filesystem;

constexpr const char* kToleranceEnv = "QDD_TOLERANCE";
const std::vector<std::size_t> kDeskSizes = {8, 10, 12};

// Carries an exit code out of a subcommand.
struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, std::string message) { throw Failure{code, std::move(message)}; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(kExitIo, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) fail(kExitIo, "error reading '" + path + "'");
  return buf.str();
}

Circuit load_circuit(const std::string& path, std::ostream& err) {
  const std::string text = read_file(path);
  std::vector<std::string> warnings;
  try {
    Circuit c = parse_qasm(text, &warnings);
    c.set_name(fs::path(path).stem().string());
    for (const auto& w : warnings) err << "warning: " << path << ": " << w << '\n';
    return c;
  } catch (const QasmError& e) {
    fail(kExitUsage, path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    fail(kExitUsage, path + ": " + e.what());
  }
}

// Output targets gathered during a command and committed at the end, so a
// failing command leaves no files behind. "-" means standard output.
class Outputs {
 public:
  void add(std::string path, std::string content) { files_.emplace_back(std::move(path), std::move(content)); }

  void commit(std::ostream& out) {
    std::vector<std::pair<fs::path, fs::path>> staged;
    auto discard = [&] {
      std::error_code ec;
      for (const auto& s : staged) fs::remove(s.first, ec);
    };
    for (const auto& [path, content] : files_) {
      if (path == "-") continue;
      fs::path tmp = path + ".tmp";
      std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
      if (f) f << content;
      if (!f || !f.flush()) {
        staged.emplace_back(tmp, path);
        discard();
        fail(kExitIo, "cannot write '" + path + "'");
      }
      staged.emplace_back(tmp, path);
    }
    for (const auto& [tmp, path] : staged) {
      std::error_code ec;
      fs::rename(tmp, path, ec);
      if (ec) {
        discard();
        fail(kExitIo, "cannot write '" + path.string() + "': " + ec.message());
      }
    }
    for (const auto& [path, content] : files_) {
      if (path == "-") out << content;
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> files_;
};

double parse_tolerance_text(const std::string& text, const std::string& source) {
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || *end != '\0' || errno != 0 || !std::isfinite(v) || v <= 0) {
    fail(kExitUsage, source + ": invalid tolerance '" + text + "'");
  }
  return v;
}

// Flag wins over the environment, which wins over the default.
double resolve_tolerance(const std::optional<double>& flag) {
  if (flag) {
    if (!std::isfinite(*flag) || *flag <= 0) fail(kExitUsage, "--tolerance must be positive");
    return *flag;
  }
  if (const char* env = std::getenv(kToleranceEnv); env != nullptr) {
    return parse_tolerance_text(env, kToleranceEnv);
  }
  return kDefaultTolerance;
}

std::chrono::nanoseconds timeout_from_seconds(double seconds) {
  if (!(seconds > 0)) fail(kExitUsage, "--timeout must be positive");
  return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::duration<double>(seconds));
}

// "proposed", "reversed", ... or "explicit:3,1,0,2".
std::pair<OrderStrategy, std::optional<QubitOrder>> parse_order_flag(const std::string& text, std::size_t n) {
  constexpr std::string_view kExplicit = "explicit:";
  if (text.rfind(kExplicit, 0) == 0) {
    try {
      return {OrderStrategy::Explicit, parse_explicit_order(std::string_view(text).substr(kExplicit.size()), n)};
    } catch (const std::invalid_argument& e) {
      fail(kExitUsage, std::string("bad explicit order: ") + e.what());
    }
  }
  auto s = parse_strategy(text);
  if (!s || *s == OrderStrategy::Explicit) fail(kExitUsage, "unknown order strategy '" + text + "'");
  return {*s, std::nullopt};
}

std::string join_order(const QubitOrder& order) { return order.to_string(','); }

std::string bit_string(std::uint64_t index, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t i = 0; i < n; ++i) {
    if ((index >> (n - 1 - i)) & 1U) s[i] = '1';
  }
  return s;
}

// Largest amplitudes of the final state, re-indexed to qubit space.
std::vector<std::pair<std::uint64_t, Complex>> top_amplitudes(const SimResult& r, std::size_t k) {
  auto level_space = dd::largest_amplitudes(r.final_state, k);
  const std::size_t n = r.num_qubits;
  for (auto& [index, amp] : level_space) {
    std::uint64_t q_index = 0;
    for (std::size_t level = 0; level < n; ++level) {
      if ((index >> (n - 1 - level)) & 1U) q_index |= std::uint64_t{1} << (n - 1 - r.order.qubit_at(level));
    }
    index = q_index;
  }
  // Re-indexing can break index order among equal magnitudes.
  std::stable_sort(level_space.begin(), level_space.end(), [](const auto& a, const auto& b) {
    const double ma = std::abs(a.second), mb = std::abs(b.second);
    if (ma != mb) return ma > mb;
    return a.first < b.first;
  });
  return level_space;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  std::string input;
  std::string order = "original";
  std::optional<double> tolerance;
  std::size_t gc_watermark = kDefaultGcWatermark;
  std::string trace_path;
  std::size_t trace_stride = 1;
  std::string json_path;
  std::size_t amplitudes = 0;
  std::string dot_path;
  double timeout = static_cast<double>(kDefaultOrderingTimeout.count());
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out, std::ostream& err) {
  const double tol = resolve_tolerance(a.tolerance);
  if (a.trace_stride == 0) fail(kExitUsage, "--trace-stride must be positive");
  const Circuit c = load_circuit(a.input, err);
  auto [strategy, explicit_order] = parse_order_flag(a.order, c.num_qubits());

  SimConfig cfg;
  cfg.strategy = strategy;
  cfg.explicit_order = explicit_order;
  cfg.tolerance = tol;
  cfg.gc_watermark = a.gc_watermark;
  cfg.trace = !a.trace_path.empty();
  cfg.trace_stride = a.trace_stride;
  cfg.ordering_timeout = timeout_from_seconds(a.timeout);

  SimResult r;
  try {
    r = simulate(c, cfg);
  } catch (const SimulationError& e) {
    fail(kExitSimulation, "simulation failed at gate " + std::to_string(e.gate_index()) + ": " + e.what());
  } catch (const std::exception& e) {
    fail(kExitSimulation, std::string("simulation failed: ") + e.what());
  }
  for (const auto& w : r.warnings) err << "warning: " << w << '\n';

  nlohmann::json summary = summary_json(r, c.name());
  std::vector<std::pair<std::uint64_t, Complex>> amps;
  if (a.amplitudes > 0) {
    amps = top_amplitudes(r, a.amplitudes);
    auto& list = summary["amplitudes"] = nlohmann::json::array();
    for (const auto& [index, amp] : amps) {
      list.push_back({{"index", index}, {"bits", bit_string(index, r.num_qubits)}, {"re", amp.real()},
                      {"im", amp.imag()}});
    }
  }

  Outputs outputs;
  if (!a.json_path.empty()) outputs.add(a.json_path, summary.dump(2) + "\n");
  if (r.trace) {
    std::ostringstream csv;
    write_trace_csv(csv, *r.trace);
    outputs.add(a.trace_path, csv.str());
  }
  if (!a.dot_path.empty()) outputs.add(a.dot_path, dd::to_dot(r.final_state));

  if (a.json_path != "-") {
    out << "circuit: " << c.name() << " (" << r.num_qubits << " qubits, " << r.num_gates << " gates)\n"
        << "strategy: " << strategy_name(r.strategy) << '\n'
        << "order: " << join_order(r.order) << '\n'
        << "final_nodes: " << r.final_nodes << '\n'
        << "max_nodes: " << r.max_nodes << '\n'
        << "apply_ops: " << r.total_apply_ops << '\n'
        << "wall_ms: " << format_double(static_cast<double>(r.wall_ns) / 1e6) << '\n';
    for (const auto& [index, amp] : amps) {
      out << "amplitude " << bit_string(index, r.num_qubits) << ": " << format_double(amp.real()) << ' '
          << (amp.imag() < 0 ? "- " : "+ ") << format_double(std::abs(amp.imag())) << "i  |a|="
          << format_double(std::abs(amp)) << '\n';
    }
  }
  outputs.commit(out);
  return kExitOk;
}

// ------------------------------------------------------------------- order

struct OrderArgs {
  std::string input;
  std::string strategy = "proposed";
  double timeout = static_cast<double>(kDefaultOrderingTimeout.count());
  std::string json_path;
};

int cmd_order(const OrderArgs& a, std::ostream& out, std::ostream& err) {
  const Circuit c = load_circuit(a.input, err);
  auto [strategy, explicit_order] = parse_order_flag(a.strategy, c.num_qubits());
  OrderingOptions opts;
  opts.adjacency_timeout = timeout_from_seconds(a.timeout);
  opts.explicit_order = explicit_order;
  const OrderingOutcome outcome = compute_order(c, strategy, opts);
  for (const auto& w : outcome.warnings) err << "warning: " << w << '\n';

  nlohmann::json j{{"circuit", c.name()}, {"strategy", strategy_name(strategy)}, {"order", outcome.order.perm()}};
  if (outcome.report) j["score_report"] = to_json(*outcome.report);
  if (!outcome.warnings.empty()) j["warnings"] = outcome.warnings;

  Outputs outputs;
  if (!a.json_path.empty()) outputs.add(a.json_path, j.dump(2) + "\n");
  if (a.json_path != "-") {
    out << "order: " << join_order(outcome.order) << '\n';
    if (outcome.report) out << to_json(*outcome.report).dump(2) << '\n';
  }
  outputs.commit(out);
  return kExitOk;
}

// ------------------------------------------------------------------- bench

struct BenchArgs {
  std::string suite;
  std::string dir;
  std::vector<std::string> strategies;
  std::size_t repeats = 3;
  bool verify = false;
  std::string output = "-";
  std::optional<double> tolerance;
  double timeout = static_cast<double>(kDefaultOrderingTimeout.count());
};

std::vector<Circuit> bench_circuits(const BenchArgs& a, std::ostream& err) {
  if (!a.suite.empty()) {
    if (a.suite != "desk") fail(kExitUsage, "unknown suite '" + a.suite + "' (available: desk)");
    return benchmark_suite(kDeskSizes);
  }
  std::vector<fs::path> files;
  std::error_code ec;
  for (fs::directory_iterator it(a.dir, ec), end; !ec && it != end; it.increment(ec)) {
    if (it->is_regular_file() && it->path().extension() == ".qasm") files.push_back(it->path());
  }
  if (ec) fail(kExitIo, "cannot list '" + a.dir + "': " + ec.message());
  std::sort(files.begin(), files.end());
  std::vector<Circuit> circuits;
  for (const auto& f : files) circuits.push_back(load_circuit(f.string(), err));
  return circuits;
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  if (a.suite.empty() == a.dir.empty()) fail(kExitUsage, "bench needs exactly one of --suite or --dir");
  if (a.repeats == 0) fail(kExitUsage, "--repeats must be positive");
  CompareOptions opts;
  if (!a.strategies.empty()) {
    opts.strategies.clear();
    for (const auto& name : a.strategies) {
      auto s = parse_strategy(name);
      if (!s || *s == OrderStrategy::Explicit) fail(kExitUsage, "unknown strategy '" + name + "'");
      opts.strategies.push_back(*s);
    }
  }
  opts.repeats = a.repeats;
  // The desk suite always verifies; it is small enough for dense states.
  opts.verify = a.verify || !a.suite.empty();
  opts.base.tolerance = resolve_tolerance(a.tolerance);
  opts.base.ordering_timeout = timeout_from_seconds(a.timeout);

  const std::vector<Circuit> circuits = bench_circuits(a, err);
  std::string csv = bench_csv_header(opts.strategies) + "\n";
  std::vector<std::string> mismatches;
  for (const auto& c : circuits) {
    const Comparison cmp = compare_orders(c, opts);
    for (const auto& row : cmp.rows) {
      if (!row.ok) err << "warning: " << c.name() << " [" << strategy_name(row.strategy) << "]: " << row.error << '\n';
    }
    if (cmp.verified && !cmp.states_agree) {
      mismatches.push_back(c.name() + " (max diff " + format_double(cmp.max_state_diff) + ")");
    }
    csv += bench_csv_row(cmp) + "\n";
  }
  if (!mismatches.empty()) {
    std::string msg = "verification failed: strategies disagree on";
    for (const auto& m : mismatches) msg += " " + m;
    fail(kExitSimulation, msg);
  }
  Outputs outputs;
  outputs.add(a.output, csv);
  outputs.commit(out);
  return kExitOk;
}

// --------------------------------------------------------------------- gen

struct GenArgs {
  std::string kind;
  std::size_t qubits = 0;
  std::uint64_t seed = 1;
  std::size_t depth = 0;
  bool inexact = false;
  bool entangled = false;
  std::string output = "-";
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  std::string family = a.kind;
  if (family == "qpe") family = a.inexact ? "qpe-inexact" : "qpe-exact";
  if (family == "qft" && a.entangled) family = "qft-entangled";
  if (a.inexact && family != "qpe-inexact") fail(kExitUsage, "--inexact only applies to qpe");
  if (a.entangled && family != "qft-entangled") fail(kExitUsage, "--entangled only applies to qft");
  Circuit c(1);
  try {
    c = generate(family, a.qubits, a.seed, a.depth);
  } catch (const std::invalid_argument& e) {
    fail(kExitUsage, e.what());
  }
  Outputs outputs;
  outputs.add(a.output, write_qasm(c));
  outputs.commit(out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decision-diagram quantum circuit simulator with static qubit ordering", "qddsim"};
  app.require_subcommand(1);
  const std::string order_help =
      "original, reversed, ngates, control_adjacency (alias ddsim), proposed, or explicit:q0,q1,...";

  SimulateArgs sim;
  auto* s = app.add_subcommand("simulate", "Simulate an OpenQASM 2.0 circuit");
  s->add_option("file", sim.input, "Input QASM file")->required();
  s->add_option("--order", sim.order, order_help)->capture_default_str();
  s->add_option("--tolerance", sim.tolerance, "Complex-table tolerance (overrides QDD_TOLERANCE)");
  s->add_option("--gc-watermark", sim.gc_watermark, "Live-node count that triggers garbage collection")
      ->capture_default_str();
  s->add_option("--trace", sim.trace_path, "Write a per-gate trace CSV");
  s->add_option("--trace-stride", sim.trace_stride, "Record every k-th gate in the trace")->capture_default_str();
  s->add_option("--json", sim.json_path, "Write the summary JSON ('-' for stdout)");
  s->add_option("--amplitudes", sim.amplitudes, "Print the k largest-magnitude amplitudes");
  s->add_option("--dot", sim.dot_path, "Write the final state diagram as Graphviz");
  s->add_option("--timeout", sim.timeout, "Ordering time budget in seconds")->capture_default_str();

  OrderArgs ord;
  auto* o = app.add_subcommand("order", "Compute a qubit order without simulating");
  o->add_option("file", ord.input, "Input QASM file")->required();
  o->add_option("--strategy", ord.strategy, order_help)->capture_default_str();
  o->add_option("--timeout", ord.timeout, "Ordering time budget in seconds")->capture_default_str();
  o->add_option("--json", ord.json_path, "Write the order and score report as JSON ('-' for stdout)");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Compare orderings over a circuit suite and emit CSV");
  auto* suite_opt = b->add_option("--suite", bench.suite, "Built-in suite (desk)");
  b->add_option("--dir", bench.dir, "Directory of .qasm files")->excludes(suite_opt);
  b->add_option("--strategies", bench.strategies, "Strategies to compare (default: all five)")->delimiter(',');
  b->add_option("--repeats", bench.repeats, "Runs per strategy; the fastest is reported")->capture_default_str();
  b->add_flag("--verify", bench.verify, "Check that all orders yield the same state (n <= 12)");
  b->add_option("-o,--output", bench.output, "CSV path ('-' for stdout)")->capture_default_str();
  b->add_option("--tolerance", bench.tolerance, "Complex-table tolerance (overrides QDD_TOLERANCE)");
  b->add_option("--timeout", bench.timeout, "Ordering time budget in seconds")->capture_default_str();

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Write a generated benchmark circuit as QASM");
  g->add_option("kind", gen.kind, "ghz, wstate, qft, qft-entangled, qpe, qpe-exact, qpe-inexact, graph, random")
      ->required();
  g->add_option("--qubits", gen.qubits, "Number of qubits")->required();
  g->add_option("--seed", gen.seed, "Seed for graph and random circuits")->capture_default_str();
  g->add_option("--depth", gen.depth, "Layers for random circuits (default: qubits)");
  g->add_flag("--inexact", gen.inexact, "QPE with a phase that does not fit the counting register");
  g->add_flag("--entangled", gen.entangled, "QFT on an entangled input state");
  g->add_option("-o,--output", gen.output, "QASM path ('-' for stdout)")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*s) return cmd_simulate(sim, out, err);
    if (*o) return cmd_order(ord, out, err);
    if (*b) return cmd_bench(bench, out, err);
    return cmd_gen(gen, out);
  } catch (const Failure& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kExitSimulation;
  }
}

}  // namespace qddsim::cli
