#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "ctag/initial_mapping.hpp"
#include "ctag/pattern.hpp"
#include "ctag/subgraph_match.hpp"

using namespace ctag;

namespace {

int exhaustive_best(const ProblemGraph& g) {
  std::vector<int> perm(g.num_vertices());
  std::iota(perm.begin(), perm.end(), 0);
  int best = 1 << 30;
  do {
    best = std::min(best, predicted_depth(g, Mapping(perm), g.num_vertices()));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Independent depth: one plus the latest meet over harvested pattern cycles.
int depth_by_harvest(const ProblemGraph& g, const Mapping& m, int n) {
  const auto c = generate_clique_pattern(n);
  std::vector<int> logical_at(n, -1);
  for (int v = 0; v < g.num_vertices(); ++v) logical_at[m[v]] = v;
  int last = -1;
  for (int t = 0; t < c.depth(); ++t) {
    for (const auto& gate : c.cycles[t]) {
      if (gate.kind == GateKind::Swap) {
        std::swap(logical_at[gate.a], logical_at[gate.b]);
      } else {
        const int a = logical_at[gate.a], b = logical_at[gate.b];
        if (a >= 0 && b >= 0 && g.has_edge(a, b)) last = t;
      }
    }
  }
  return last + 1;
}

ProblemGraph relabel(const ProblemGraph& g, const std::vector<int>& to) {
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.emplace_back(to[e.u], to[e.v]);
  return ProblemGraph(g.num_vertices(), edges);
}

}  // namespace

TEST(PredictedDepth, AgreesWithHarvestedPattern) {
  for (std::uint32_t seed = 0; seed < 40; ++seed) {
    const int n = 4 + static_cast<int>(seed % 9);
    const auto g = random_graph(n, 0.4, seed);
    const auto m = random_initial_mapping(n, seed + 100);
    EXPECT_EQ(predicted_depth(g, m, n), depth_by_harvest(g, m, n));
  }
  EXPECT_EQ(predicted_depth(ProblemGraph(4, std::vector<Edge>{}),
                            Mapping::identity(4), 4),
            0);
}

TEST(Astar, CliqueGivesFullDepth) {
  EXPECT_EQ(astar_initial_mapping(clique(2)).predicted_depth, 1);
  for (int n = 3; n <= 12; ++n) {
    const auto r = astar_initial_mapping(clique(n));
    EXPECT_TRUE(r.mapping.is_valid(n));
    EXPECT_EQ(r.predicted_depth, 2 * n - 2);
  }
}

TEST(Astar, WorkedExampleBeatsIdentity) {
  const ProblemGraph g(6, std::vector<Edge>{{1, 3}, {2, 4}, {0, 1}, {3, 4}});
  EXPECT_EQ(predicted_depth(g, Mapping::identity(6), 6), 9);
  const auto r = astar_initial_mapping(g);
  EXPECT_LE(r.predicted_depth, 5);
  EXPECT_EQ(r.predicted_depth, exhaustive_best(g));
}

TEST(Astar, PathGraphFitsFirstLayers) {
  const ProblemGraph path(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  const int best = exhaustive_best(path);
  EXPECT_EQ(best, 2);  // two execution layers cover a 4-chain
  EXPECT_EQ(astar_initial_mapping(path).predicted_depth, best);
  EXPECT_EQ(predicted_depth(path, Mapping::identity(4), 4), 2);
}

TEST(Astar, ExactSearchMatchesExhaustiveUpToSix) {
  AstarOptions exact;
  exact.beam = 0;
  for (std::uint32_t seed = 0; seed < 60; ++seed) {
    const int n = 3 + static_cast<int>(seed % 4);
    const auto g = random_graph(n, 0.5, seed);
    const auto r = astar_initial_mapping(g, exact);
    EXPECT_EQ(r.predicted_depth, exhaustive_best(g)) << seed;
    EXPECT_EQ(r.predicted_depth, predicted_depth(g, r.mapping, n));
  }
}

TEST(Astar, BeamOneIsGreedyAndNeverBetterThanWide) {
  AstarOptions greedy;
  greedy.beam = 1;
  for (std::uint32_t seed = 0; seed < 20; ++seed) {
    const auto g = random_graph(12, 0.3, seed);
    const auto narrow = astar_initial_mapping(g, greedy);
    const auto wide = astar_initial_mapping(g);
    EXPECT_TRUE(narrow.mapping.is_valid(12));
    EXPECT_LE(wide.predicted_depth, narrow.predicted_depth);
  }
}

TEST(Astar, TieSeedAndLineLength) {
  const auto g = random_graph(10, 0.3, 4);
  AstarOptions shuffled;
  shuffled.tie_seed = 9;
  const auto a = astar_initial_mapping(g, shuffled);
  EXPECT_EQ(a.mapping, astar_initial_mapping(g, shuffled).mapping);
  EXPECT_EQ(a.predicted_depth, predicted_depth(g, a.mapping, 10));
  AstarOptions longer;
  longer.line_length = 14;
  const auto b = astar_initial_mapping(g, longer);
  EXPECT_TRUE(b.mapping.is_valid(14));
  EXPECT_EQ(b.predicted_depth, predicted_depth(g, b.mapping, 14));
}

TEST(PatternGraph, Examples) {
  EXPECT_EQ(pattern_graph(6, 1).edges(),
            (std::vector<Edge>{{0, 1}, {2, 3}, {4, 5}}));
  EXPECT_EQ(pattern_graph(6, 10).edges(), clique(6).edges());
  EXPECT_THROW(pattern_graph(6, 0), ValidationError);
  EXPECT_THROW(pattern_graph(6, 11), ValidationError);
}

TEST(PatternGraph, MatchesHarvestedPrefix) {
  const int n = 8;
  const auto c = generate_clique_pattern(n);
  std::vector<int> start_at(n);
  std::iota(start_at.begin(), start_at.end(), 0);
  std::set<Edge> harvested;
  for (int t = 0; t < 4; ++t) {
    for (const auto& gate : c.cycles[t]) {
      if (gate.kind == GateKind::Swap) {
        std::swap(start_at[gate.a], start_at[gate.b]);
      } else {
        harvested.emplace(start_at[gate.a], start_at[gate.b]);
      }
    }
  }
  const auto g = pattern_graph(n, 4);
  EXPECT_EQ(std::set<Edge>(g.edges().begin(), g.edges().end()), harvested);
}

TEST(SubgraphMatch, FindsAndRejects) {
  const ProblemGraph triangle(3, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}});
  const ProblemGraph square(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  EXPECT_EQ(find_subgraph_monomorphism(triangle, square).status,
            MatchStatus::NotFound);
  const ProblemGraph path(3, std::vector<Edge>{{0, 1}, {1, 2}});
  const auto r = find_subgraph_monomorphism(path, square);
  ASSERT_EQ(r.status, MatchStatus::Found);
  for (const auto& e : path.edges()) {
    EXPECT_TRUE(square.has_edge(r.assignment[e.u], r.assignment[e.v]));
  }
}

TEST(SubgraphMatch, DeadlineInThePast) {
  const auto big = clique(9);
  const auto target = pattern_graph(10, 17);
  const auto r = find_subgraph_monomorphism(
      big, target, std::chrono::steady_clock::now() - std::chrono::seconds(1));
  EXPECT_NE(r.status, MatchStatus::Found);
}

TEST(Iso, PerfectMatchingNeedsOneLayer) {
  const ProblemGraph g(6, std::vector<Edge>{{0, 5}, {1, 4}, {2, 3}});
  const auto r = iso_initial_mapping(g);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->horizon, 1);
  EXPECT_LE(predicted_depth(g, r->mapping, 6), 1);
}

TEST(Iso, CliqueNeedsFullPattern) {
  const auto r = iso_initial_mapping(clique(5));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->horizon, 8);
}

TEST(Iso, SixCycleHorizonExample) {
  // Vertices A..F placed on positions 2,0,4,1,5,3; the graph is the part of
  // the six-cycle pattern graph pulled back through that placement.
  const std::vector<int> placed{2, 0, 4, 1, 5, 3};
  std::vector<int> back(6);
  for (int v = 0; v < 6; ++v) back[placed[v]] = v;
  const auto g = relabel(pattern_graph(6, 6), back);
  EXPECT_EQ(predicted_depth(g, Mapping(placed), 6), 6);
  const auto r = iso_initial_mapping(g);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->horizon, 6);
  EXPECT_LE(predicted_depth(g, r->mapping, 6), 6);
  EXPECT_EQ(exhaustive_best(g), 6);
}

TEST(Iso, MinimalOnSmallGraphs) {
  for (std::uint32_t seed = 0; seed < 40; ++seed) {
    const int n = 4 + static_cast<int>(seed % 4);
    const auto g = random_graph(n, 0.4, seed);
    const auto r = iso_initial_mapping(g);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->horizon, exhaustive_best(g)) << seed;
    EXPECT_LE(predicted_depth(g, r->mapping, n), r->horizon);
  }
}

TEST(Iso, EmptyGraphAndTimeout) {
  const auto empty = iso_initial_mapping(ProblemGraph(4, std::vector<Edge>{}));
  ASSERT_TRUE(empty.has_value());
  EXPECT_EQ(empty->horizon, 0);
  EXPECT_FALSE(iso_initial_mapping(random_graph(40, 0.3, 1),
                                   std::chrono::milliseconds(1))
                   .has_value());
}

TEST(RandomMapping, Examples) {
  EXPECT_EQ(random_initial_mapping(1, 3), Mapping::identity(1));
  const auto m5 = random_initial_mapping(5, 3);
  EXPECT_TRUE(m5.is_valid(5));
  EXPECT_EQ(m5, random_initial_mapping(5, 3));
  EXPECT_TRUE(random_initial_mapping(50, 8).is_valid(50));
  EXPECT_NE(random_initial_mapping(50, 8), random_initial_mapping(50, 9));
}

TEST(AllStrategies, DensityOneGivesFullDepth) {
  for (int n = 3; n <= 7; ++n) {
    const auto g = clique(n);
    EXPECT_EQ(predicted_depth(g, random_initial_mapping(n, 1), n), 2 * n - 2);
    EXPECT_EQ(astar_initial_mapping(g).predicted_depth, 2 * n - 2);
    EXPECT_EQ(iso_initial_mapping(g)->horizon, 2 * n - 2);
  }
}
