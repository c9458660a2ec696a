// ctag command-line front end: schedule, verify, bench, generate.

#include <CLI11.hpp>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ctag/bench.hpp"
#include "ctag/io.hpp"
#include "ctag/scheduler.hpp"
#include "ctag/verify.hpp"

namespace {

using namespace ctag;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

long long to_integer(const std::string& s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError("not an integer: '" + s + "'");
  }
  return v;
}

// "1,2,5-8" style integer lists.
std::vector<long long> integer_list(const std::string& text) {
  std::vector<long long> out;
  for (const auto& item : split(text)) {
    const auto dash = item.find('-', 1);
    if (dash == std::string::npos) {
      out.push_back(to_integer(item));
      continue;
    }
    const auto lo = to_integer(item.substr(0, dash));
    const auto hi = to_integer(item.substr(dash + 1));
    if (hi < lo) throw UsageError("empty range '" + item + "'");
    for (auto v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

std::vector<double> double_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split(text)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("not a number: '" + item + "'");
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

struct CommonOptions {
  std::string graph;
  std::string arch;
  std::string strategy;
  std::string config;
  std::optional<std::uint32_t> seed;
  std::optional<double> threshold;
  std::optional<int> beam;
  std::string format = "text";
  std::string out;
};

SchedulerConfig build_config(const CommonOptions& o) {
  SchedulerConfig cfg;
  if (!o.config.empty()) cfg = parse_config(read_file(o.config));
  if (!o.strategy.empty()) cfg.strategy = parse_strategy(o.strategy);
  if (o.seed) cfg.seed = *o.seed;
  if (o.threshold) cfg.threshold = *o.threshold;
  if (o.beam) cfg.beam = *o.beam;
  return cfg;
}

std::string metrics_text(const Metrics& m) {
  std::ostringstream out;
  out << "abstract_depth: " << m.abstract_depth << '\n'
      << "decomposed_depth: " << m.decomposed_depth << '\n'
      << "cphase_count: " << m.cphase_count << '\n'
      << "swap_count: " << m.swap_count << '\n'
      << "decomposed_gate_count: " << m.decomposed_gate_count << '\n';
  return out.str();
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "ok: " << (r.ok ? "true" : "false") << '\n';
  out << "executed: " << r.executed_pairs.size() << '\n';
  auto pairs = [&](const char* label, const std::vector<Edge>& edges) {
    out << label << ": " << edges.size();
    for (const auto& e : edges) out << " (" << e.u << ',' << e.v << ')';
    out << '\n';
  };
  pairs("missing", r.missing);
  pairs("duplicated", r.duplicated);
  out << "illegal_gates: " << r.illegal_gates.size() << '\n';
  for (const auto& ig : r.illegal_gates) {
    out << "  cycle " << ig.cycle << " gate " << ig.index << ": "
        << (ig.gate.kind == GateKind::CPhase ? "CPHASE" : "SWAP") << '('
        << ig.gate.a << ',' << ig.gate.b << ") " << ig.reason << '\n';
  }
  return out.str();
}

int cmd_schedule(const CommonOptions& o, std::optional<int> n,
                 std::optional<double> density) {
  ProblemGraph g;
  if (!o.graph.empty()) {
    g = read_problem_graph_file(o.graph);
  } else if (n && density) {
    g = bench_graph(*n, *density, o.seed.value_or(0));
  } else {
    throw UsageError("schedule needs --graph or both --n and --density");
  }
  const auto arch = o.arch.empty() ? linear_architecture(g.num_vertices())
                                   : bench_architecture(o.arch, g.num_vertices());
  const auto cfg = build_config(o);

  const auto circuit = schedule(g, arch, cfg);
  const auto report = verify(circuit, g, arch);
  const auto m = metrics(circuit, g.num_vertices());

  if (!o.out.empty()) {
    write_file(o.out + ".txt", schedule_to_text(circuit));
    write_file(o.out + ".json", schedule_to_json(circuit));
    write_file(o.out + ".metrics.json", to_json(m) + "\n");
  }
  if (o.format == "json") {
    nlohmann::ordered_json doc;
    doc["schedule"] = nlohmann::ordered_json::parse(schedule_to_json(circuit));
    doc["metrics"] = nlohmann::ordered_json::parse(to_json(m));
    doc["verified"] = report.ok;
    std::cout << doc.dump(1) << '\n';
  } else if (o.format == "csv") {
    std::cout << "abstract_depth,decomposed_depth,cphase_count,swap_count,"
                 "decomposed_gate_count,verified\n"
              << m.abstract_depth << ',' << m.decomposed_depth << ','
              << m.cphase_count << ',' << m.swap_count << ','
              << m.decomposed_gate_count << ','
              << (report.ok ? "true" : "false") << '\n';
  } else {
    std::cout << schedule_to_text(circuit) << metrics_text(m);
  }
  if (!report.ok) {
    std::cerr << "verification failed\n" << report_text(report);
    return kExitFailed;
  }
  return kExitOk;
}

int cmd_verify(const CommonOptions& o, const std::string& schedule_path) {
  const auto circuit = schedule_from_json(read_file(schedule_path));
  const auto g = read_problem_graph_file(o.graph);
  const auto arch = o.arch.empty() ? make_architecture(circuit.arch_name)
                                   : bench_architecture(o.arch, g.num_vertices());
  const auto report = verify(circuit, g, arch);
  if (o.format == "json") {
    std::cout << to_json(report) << '\n';
  } else {
    std::cout << report_text(report);
  }
  return report.ok ? kExitOk : kExitFailed;
}

int cmd_bench(const CommonOptions& o, const std::string& ns,
              const std::string& densities, const std::string& seeds,
              const std::string& archs, int jobs) {
  BenchGrid grid;
  for (auto v : integer_list(ns)) grid.ns.push_back(static_cast<int>(v));
  grid.densities = double_list(densities);
  for (auto v : integer_list(seeds)) {
    grid.seeds.push_back(static_cast<std::uint32_t>(v));
  }
  grid.architectures = split(archs);
  for (const auto& s : split(o.strategy.empty() ? "ctag" : o.strategy)) {
    grid.strategies.push_back(parse_strategy(s));
  }
  if (grid.ns.empty() || grid.densities.empty() || grid.seeds.empty() ||
      grid.architectures.empty()) {
    throw UsageError("bench needs --n, --density, --seed and --arch values");
  }
  CommonOptions base = o;
  base.strategy.clear();
  grid.base = build_config(base);

  const auto rows = run_bench(grid, jobs);
  const auto csv = bench_csv(rows);
  if (!o.out.empty()) {
    write_file(o.out, csv);
  } else {
    std::cout << csv;
  }
  int failures = 0;
  for (const auto& r : rows) {
    if (!r.verified) {
      ++failures;
      std::cerr << "failed: n=" << r.n << " density=" << r.density
                << " seed=" << r.seed << " arch=" << r.architecture
                << " strategy=" << r.strategy << ": " << r.error << '\n';
    }
  }
  return failures == 0 ? kExitOk : kExitFailed;
}

int cmd_generate(int n, double density, std::uint32_t seed,
                 const std::string& out) {
  const auto g = bench_graph(n, density, seed);
  std::ostringstream text;
  write_problem_graph(text, g);
  if (out.empty()) {
    std::cout << text.str();
  } else {
    write_file(out, text.str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commutativity-aware QAOA circuit scheduler"};
  app.require_subcommand(1);

  CommonOptions o;
  std::optional<int> n;
  std::optional<double> density;
  std::string n_list, density_list, seed_list = "0", arch_list = "linear";
  std::string schedule_path;
  int jobs = 1;

  auto add_mapping_flags = [&](CLI::App* cmd) {
    cmd->add_option("--strategy", o.strategy,
                    "ctag-r | ctag-i-astar | ctag-i-iso | ctag-h | "
                    "pattern-only | ctag");
    cmd->add_option("--threshold", o.threshold, "Partial-pattern threshold");
    cmd->add_option("--beam", o.beam, "A* beam width (0 = exact)");
    cmd->add_option("--config", o.config, "Scheduler config file");
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format)
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  auto* sched = app.add_subcommand("schedule", "Schedule one problem graph");
  sched->add_option("--graph", o.graph, "Problem graph file");
  sched->add_option("--arch", o.arch,
                    "linear:N | grid:RxC | ibm20 | ibm27 | file:PATH");
  sched->add_option("--n", n, "Vertices of a generated graph");
  sched->add_option("--density", density, "Density of a generated graph");
  sched->add_option("--seed", o.seed, "Seed for generation and strategies");
  sched->add_option("--out", o.out,
                    "Write PREFIX.txt, PREFIX.json and PREFIX.metrics.json");
  add_mapping_flags(sched);
  add_format(sched);

  auto* ver = app.add_subcommand("verify", "Verify a schedule JSON file");
  ver->add_option("--schedule", schedule_path, "Schedule JSON")->required();
  ver->add_option("--graph", o.graph, "Problem graph file")->required();
  ver->add_option("--arch", o.arch, "Architecture (default: from schedule)");
  add_format(ver);

  auto* bench = app.add_subcommand("bench", "Run a benchmark grid to CSV");
  bench->add_option("--n", n_list, "Vertex counts, e.g. 10,30,50")->required();
  bench->add_option("--density", density_list, "Densities, 1 = clique")
      ->required();
  bench->add_option("--seed", seed_list, "Seeds, e.g. 0-49");
  bench->add_option("--arch", arch_list,
                    "Architectures; bare linear/grid are sized per n");
  bench->add_option("--jobs", jobs, "Parallel workers")
      ->check(CLI::PositiveNumber);
  bench->add_option("--out", o.out, "CSV output file (default stdout)");
  add_mapping_flags(bench);

  int gen_n = 0;
  double gen_density = 0;
  std::uint32_t gen_seed = 0;
  auto* gen = app.add_subcommand("generate", "Write a random problem graph");
  gen->add_option("--n", gen_n)->required();
  gen->add_option("--density", gen_density)->required();
  gen->add_option("--seed", gen_seed);
  gen->add_option("--out", o.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*sched) return cmd_schedule(o, n, density);
    if (*ver) return cmd_verify(o, schedule_path);
    if (*bench) {
      return cmd_bench(o, n_list, density_list, seed_list, arch_list, jobs);
    }
    if (*gen) return cmd_generate(gen_n, gen_density, gen_seed, o.out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
