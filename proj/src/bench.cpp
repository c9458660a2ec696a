#include "ctag/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>

#include "ctag/verify.hpp"

namespace ctag {

Architecture bench_architecture(const std::string& spec, int n) {
  if (spec == "linear") return linear_architecture(n);
  if (spec == "grid") return smallest_square_grid(n);
  return make_architecture(spec);
}

ProblemGraph bench_graph(int n, double density, std::uint32_t seed) {
  if (density >= 1.0) return clique(n);
  return random_graph(n, density, seed);
}

namespace {

struct Cell {
  int n;
  double density;
  std::uint32_t seed;
  std::string arch;
  Strategy strategy;
};

BenchRow run_cell(const Cell& cell, const SchedulerConfig& base) {
  BenchRow row;
  row.n = cell.n;
  row.density = cell.density;
  row.seed = cell.seed;
  row.architecture = cell.arch;
  row.strategy = std::string(strategy_name(cell.strategy));
  try {
    const auto g = bench_graph(cell.n, cell.density, cell.seed);
    const auto arch = bench_architecture(cell.arch, cell.n);
    row.architecture = arch.name();
    SchedulerConfig cfg = base;
    cfg.strategy = cell.strategy;
    cfg.seed = cell.seed;
    const auto start = std::chrono::steady_clock::now();
    const auto circuit = schedule(g, arch, cfg);
    const auto stop = std::chrono::steady_clock::now();
    row.compile_time_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    const auto m = metrics(circuit, cell.n);
    row.abstract_depth = m.abstract_depth;
    row.decomposed_depth = m.decomposed_depth;
    row.cphase_count = m.cphase_count;
    row.swap_count = m.swap_count;
    row.verified = verify(circuit, g, arch).ok;
    if (!row.verified) row.error = "verification failed";
  } catch (const std::exception& e) {
    row.verified = false;
    row.error = e.what();
  }
  return row;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchGrid& grid, int jobs) {
  std::vector<Cell> cells;
  for (int n : grid.ns) {
    for (double d : grid.densities) {
      for (auto seed : grid.seeds) {
        for (const auto& arch : grid.architectures) {
          for (auto s : grid.strategies) cells.push_back({n, d, seed, arch, s});
        }
      }
    }
  }
  std::vector<BenchRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      rows[i] = run_cell(cells[i], grid.base);
    }
  };
  const int threads =
      std::clamp(jobs, 1, std::max(1, static_cast<int>(cells.size())));
  std::vector<std::jthread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  std::stable_sort(rows.begin(), rows.end(),
                   [](const BenchRow& a, const BenchRow& b) {
                     return std::tie(a.n, a.density, a.seed, a.strategy) <
                            std::tie(b.n, b.density, b.seed, b.strategy);
                   });
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << kBenchCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.n << ',' << r.density << ',' << r.seed << ',' << r.architecture
        << ',' << r.strategy << ',' << r.abstract_depth << ','
        << r.decomposed_depth << ',' << r.cphase_count << ',' << r.swap_count
        << ',' << std::fixed << std::setprecision(3) << r.compile_time_ms
        << std::defaultfloat << ',' << (r.verified ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace ctag
