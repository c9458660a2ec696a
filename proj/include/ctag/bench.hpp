#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ctag/graph.hpp"
#include "ctag/scheduler.hpp"

namespace ctag {

struct BenchRow {
  int n = 0;
  double density = 0;
  std::uint32_t seed = 0;
  std::string architecture;
  std::string strategy;
  int abstract_depth = 0;
  int decomposed_depth = 0;
  int cphase_count = 0;
  int swap_count = 0;
  double compile_time_ms = 0;
  bool verified = false;
  std::string error;  // not part of the CSV
};

struct BenchGrid {
  std::vector<int> ns;
  std::vector<double> densities;  // 1.0 means the clique
  std::vector<std::uint32_t> seeds;
  /// Architecture specs; bare "linear" and "grid" are sized per n (linear:n,
  /// smallest square grid).
  std::vector<std::string> architectures;
  std::vector<Strategy> strategies;
  SchedulerConfig base;
};

Architecture bench_architecture(const std::string& spec, int n);

/// The benchmark instance for (n, density, seed).
ProblemGraph bench_graph(int n, double density, std::uint32_t seed);

/// One row per grid cell, run on up to `jobs` threads. Rows are sorted
/// stably by (n, density, seed, strategy). Compile time covers schedule()
/// only.
std::vector<BenchRow> run_bench(const BenchGrid& grid, int jobs = 1);

inline constexpr const char* kBenchCsvHeader =
    "n,density,seed,architecture,strategy,abstract_depth,decomposed_depth,"
    "cphase_count,swap_count,compile_time_ms,verified";

std::string bench_csv(const std::vector<BenchRow>& rows);

/// Published QAIM_IC numbers for the clique benchmark (external tool, not
/// reproduced here); used only to report speedups.
struct BaselineReference {
  int n;
  double compile_time_s;
  int decomposed_depth;
};

inline constexpr BaselineReference kQaimIcClique[] = {
    {10, 0.6, 79},      {30, 6.6, 530},      {50, 27.3, 1408},
    {100, 265.4, 5053}, {200, 3671.1, 21189},
};

}  // namespace ctag
