#include <gtest/gtest.h>

#include <algorithm>
#include <nlohmann/json.hpp>

#include "ctag/pattern.hpp"
#include "ctag/scheduler.hpp"
#include "ctag/verify.hpp"

using namespace ctag;

namespace {

ProblemGraph without_edge(const ProblemGraph& g, Edge drop) {
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (e != drop) edges.push_back(e);
  }
  return ProblemGraph(g.num_vertices(), edges);
}

}  // namespace

TEST(Verify, CliquePatternIsOk) {
  const auto c = generate_clique_pattern(6);
  const auto r = verify(c, clique(6), linear_architecture(6));
  EXPECT_TRUE(r.ok);
  EXPECT_TRUE(r.missing.empty());
  EXPECT_TRUE(r.duplicated.empty());
  EXPECT_TRUE(r.illegal_gates.empty());
  EXPECT_TRUE(r.final_mapping.is_valid(6));
}

TEST(Verify, ExtraPairIsDuplicated) {
  const auto c = generate_clique_pattern(6);
  const auto r = verify(c, without_edge(clique(6), {2, 4}),
                        linear_architecture(6));
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.duplicated, (std::vector<Edge>{{2, 4}}));
  EXPECT_TRUE(r.missing.empty());
}

TEST(Verify, RepeatedPairIsDuplicated) {
  ScheduledCircuit c;
  c.init = Mapping::identity(2);
  c.arch_name = "linear:2";
  c.num_qubits = 2;
  c.cycles = {{Gate::cphase(0, 1)}, {Gate::cphase(1, 0)}};
  const auto r = verify(c, clique(2), linear_architecture(2));
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.duplicated, (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(r.executed_pairs.size(), 2u);
}

TEST(Verify, NonAdjacentGateIsIllegal) {
  ScheduledCircuit c;
  c.init = Mapping::identity(3);
  c.num_qubits = 3;
  c.cycles = {{Gate::cphase(0, 2)}};
  const auto r = verify(c, ProblemGraph(3, std::vector<Edge>{{0, 2}}),
                        linear_architecture(3));
  EXPECT_FALSE(r.ok);
  ASSERT_FALSE(r.illegal_gates.empty());
  EXPECT_EQ(r.illegal_gates[0].cycle, 0);
}

TEST(Verify, QubitConflictIsIllegal) {
  ScheduledCircuit c;
  c.init = Mapping::identity(3);
  c.num_qubits = 3;
  c.cycles = {{Gate::cphase(0, 1), Gate::swap(1, 2)}};
  const auto r = verify(c, ProblemGraph(3, std::vector<Edge>{{0, 1}}),
                        linear_architecture(3));
  EXPECT_FALSE(r.ok);
  ASSERT_EQ(r.illegal_gates.size(), 1u);
  EXPECT_EQ(r.illegal_gates[0].index, 1);
}

TEST(Verify, MissingPairReported) {
  auto c = generate_clique_pattern(5);
  auto& first = c.cycles.front();
  const Gate dropped = first.front();
  first.erase(first.begin());
  const auto r = verify(c, clique(5), linear_architecture(5));
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.missing, (std::vector<Edge>{{dropped.a, dropped.b}}));
}

TEST(Verify, BadInitAndOutOfRangeNeverThrow) {
  ScheduledCircuit c;
  c.init = Mapping({0, 0});
  c.cycles = {{Gate::cphase(0, 7)}};
  VerificationReport r;
  EXPECT_NO_THROW(r = verify(c, clique(2), linear_architecture(2)));
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.illegal_gates.empty());
  EXPECT_EQ(r.illegal_gates.front().cycle, -1);
}

TEST(Verify, ProvenanceMismatchIsIllegal) {
  ScheduledCircuit c;
  c.init = Mapping::identity(2);
  c.cycles = {{Gate::cphase(0, 1, Edge{0, 2})}};
  const auto r = verify(c, clique(2), linear_architecture(2));
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.illegal_gates.empty());
}

TEST(Verify, FinalMappingTracksSwaps) {
  ScheduledCircuit c;
  c.init = Mapping::identity(3);
  c.cycles = {{Gate::swap(0, 1)}, {Gate::swap(1, 2)}};
  const auto r = verify(c, ProblemGraph(3, std::vector<Edge>{}),
                        linear_architecture(3));
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.final_mapping, Mapping({2, 0, 1}));
}

TEST(Metrics, TableValuesAndIdentities) {
  const std::vector<std::pair<int, int>> table{
      {10, 56}, {30, 176}, {50, 296}, {100, 596}, {200, 1196}};
  for (auto [n, depth] : table) {
    EXPECT_EQ(metrics(generate_clique_pattern(n), n).decomposed_depth, depth);
  }
  const auto empty = metrics(ScheduledCircuit{}, 3);
  EXPECT_EQ(empty.abstract_depth, 0);
  EXPECT_EQ(empty.decomposed_depth, 2);
  EXPECT_EQ(empty.decomposed_gate_count, 6);
}

TEST(Metrics, RecountMatches) {
  for (std::uint32_t seed = 0; seed < 10; ++seed) {
    const auto g = random_graph(15, 0.3, seed);
    const auto c = schedule(g, grid_architecture(4, 4));
    int cphase = 0, swaps = 0;
    for (const auto& cycle : c.cycles) {
      for (const auto& gate : cycle) {
        (gate.kind == GateKind::CPhase ? cphase : swaps) += 1;
      }
    }
    const auto m = metrics(c, 15);
    EXPECT_EQ(m.abstract_depth, static_cast<int>(c.cycles.size()));
    EXPECT_EQ(m.cphase_count, cphase);
    EXPECT_EQ(m.cphase_count, g.num_edges());
    EXPECT_EQ(m.swap_count, swaps);
    EXPECT_EQ(m.decomposed_depth, 3 * m.abstract_depth + 2);
    EXPECT_EQ(m.decomposed_gate_count, 3 * cphase + 3 * swaps + 2 * 15);
  }
}

TEST(Json, StableFieldNames) {
  const auto m = nlohmann::json::parse(
      to_json(metrics(generate_clique_pattern(4), 4)));
  for (const char* key : {"abstract_depth", "decomposed_depth", "cphase_count",
                          "swap_count", "decomposed_gate_count"}) {
    EXPECT_TRUE(m.contains(key)) << key;
  }
  const auto r = nlohmann::json::parse(to_json(
      verify(generate_clique_pattern(4), clique(4), linear_architecture(4))));
  for (const char* key : {"ok", "executed_pairs", "missing", "duplicated",
                          "illegal_gates", "final_mapping"}) {
    EXPECT_TRUE(r.contains(key)) << key;
  }
  EXPECT_TRUE(r["ok"].get<bool>());
}

TEST(BruteForce, SmallOptima) {
  EXPECT_EQ(brute_force_optimal(clique(2), linear_architecture(2), 12), 1);
  // Every coupling of linear(3) touches the middle qubit, so each of the
  // three CPHASEs and the SWAP takes its own cycle.
  EXPECT_EQ(brute_force_optimal(clique(3), linear_architecture(3), 12), 4);
  const auto c4 = brute_force_optimal(clique(4), linear_architecture(4), 12);
  ASSERT_TRUE(c4.has_value());
  EXPECT_GE(*c4, 3);
  EXPECT_LE(*c4, 6);
  EXPECT_EQ(*c4, 6);
  EXPECT_EQ(brute_force_optimal(clique(5), linear_architecture(5), 12), 8);
}

TEST(BruteForce, CapAndLimits) {
  EXPECT_FALSE(
      brute_force_optimal(clique(5), linear_architecture(5), 7).has_value());
  EXPECT_THROW(brute_force_optimal(clique(3), linear_architecture(6), 5),
               ValidationError);
  EXPECT_THROW(brute_force_optimal(clique(3), linear_architecture(3), 13),
               ValidationError);
  EXPECT_THROW(brute_force_optimal(clique(5), linear_architecture(4), 5),
               ValidationError);
}

TEST(BruteForce, NeverAbovePatternOrScheduler) {
  for (std::uint32_t seed = 0; seed < 12; ++seed) {
    const int n = 4 + static_cast<int>(seed % 2);
    const auto g = random_graph(n, 0.6, seed);
    const auto arch = seed % 3 == 0 ? grid_architecture(2, 2)
                                    : linear_architecture(n);
    if (arch.num_qubits() < n) continue;
    const auto opt = brute_force_optimal(g, arch, 12);
    ASSERT_TRUE(opt.has_value());
    EXPECT_GE(*opt, g.max_degree());
    EXPECT_LE(*opt, schedule(g, arch).depth());
  }
}

TEST(FactorTwo, PatternWithinTwiceOptimal) {
  for (int n = 3; n <= 5; ++n) {
    const auto opt = brute_force_optimal(clique(n), linear_architecture(n), 12);
    ASSERT_TRUE(opt.has_value());
    EXPECT_LE(generate_clique_pattern(n).depth(), 2 * *opt);
  }
}
