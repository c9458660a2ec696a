#include <gtest/gtest.h>

#include "ctag/bench.hpp"
#include "ctag/pattern.hpp"
#include "ctag/verify.hpp"

using namespace ctag;

TEST(Bench, GridProducesSortedVerifiedRows) {
  BenchGrid grid;
  grid.ns = {12, 8};
  grid.densities = {0.5, 0.1};
  grid.seeds = {1, 0};
  grid.architectures = {"grid", "linear"};
  grid.strategies = {Strategy::CtagH, Strategy::CtagR};
  const auto rows = run_bench(grid, 3);
  ASSERT_EQ(rows.size(), 32u);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const auto& a = rows[k - 1];
    const auto& b = rows[k];
    EXPECT_LE(std::tie(a.n, a.density, a.seed, a.strategy),
              std::tie(b.n, b.density, b.seed, b.strategy));
  }
  for (const auto& r : rows) {
    EXPECT_TRUE(r.verified) << r.error;
    EXPECT_EQ(r.decomposed_depth, 3 * r.abstract_depth + 2);
  }
  // Ties keep grid order, so architectures follow the input list.
  EXPECT_EQ(rows[0].architecture, "grid:3x3");
  EXPECT_EQ(rows[1].architecture, "linear:8");
}

TEST(Bench, ParallelMatchesSerial) {
  BenchGrid grid;
  grid.ns = {10, 14};
  grid.densities = {0.3};
  grid.seeds = {0, 1, 2};
  grid.architectures = {"ibm20"};
  grid.strategies = {Strategy::Ctag};
  auto serial = run_bench(grid, 1);
  auto parallel = run_bench(grid, 4);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t k = 0; k < serial.size(); ++k) {
    EXPECT_EQ(serial[k].abstract_depth, parallel[k].abstract_depth);
    EXPECT_EQ(serial[k].swap_count, parallel[k].swap_count);
  }
}

TEST(Bench, FailuresBecomeRows) {
  BenchGrid grid;
  grid.ns = {30};
  grid.densities = {0.2};
  grid.seeds = {0};
  grid.architectures = {"ibm27"};
  grid.strategies = {Strategy::PatternOnly};
  const auto rows = run_bench(grid);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_FALSE(rows[0].verified);
  EXPECT_FALSE(rows[0].error.empty());
  EXPECT_NE(bench_csv(rows).find(",false\n"), std::string::npos);
}

TEST(Bench, CsvLayout) {
  BenchRow row;
  row.n = 10;
  row.density = 0.3;
  row.seed = 4;
  row.architecture = "linear:10";
  row.strategy = "ctag-h";
  row.abstract_depth = 5;
  row.decomposed_depth = 17;
  row.cphase_count = 14;
  row.swap_count = 3;
  row.compile_time_ms = 1.23456;
  row.verified = true;
  EXPECT_EQ(bench_csv({row}), std::string(kBenchCsvHeader) +
                                  "\n10,0.3,4,linear:10,ctag-h,5,17,14,3,"
                                  "1.235,true\n");
}

TEST(Bench, BeatsPublishedBaselineOnCliques) {
  for (const auto& ref : kQaimIcClique) {
    const int depth =
        metrics(generate_clique_pattern(ref.n), ref.n).decomposed_depth;
    EXPECT_LT(depth, ref.decomposed_depth) << ref.n;
  }
}

TEST(Bench, ArchitectureSizing) {
  EXPECT_EQ(bench_architecture("linear", 7).num_qubits(), 7);
  EXPECT_EQ(bench_architecture("grid", 20).num_qubits(), 25);
  EXPECT_EQ(bench_architecture("grid:8x8", 20).num_qubits(), 64);
  EXPECT_EQ(bench_graph(6, 1.0, 3).num_edges(), 15);
}
