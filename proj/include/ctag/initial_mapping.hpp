#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "ctag/graph.hpp"

namespace ctag {

// Mappings in this module send logical vertices to positions 0..L-1 of a
// virtual linear chain; depths refer to the pruned pattern on that chain.

/// Pattern depth under `positions`: one plus the latest meet cycle over the
/// edges of g, 0 for an edgeless graph.
int predicted_depth(const ProblemGraph& g, const Mapping& positions,
                    int line_length);

struct AstarOptions {
  /// Nodes kept per level. 1 is the plain greedy assignment; 0 runs exact
  /// best-first search (falls back to beam 64 past max_expansions).
  int beam = 64;
  /// 0 scans positions in increasing order; other values shuffle the scan.
  std::uint64_t tie_seed = 0;
  /// Chain length, 0 for g.num_vertices().
  int line_length = 0;
  std::uint64_t max_expansions = 2'000'000;
};

struct InitialMapping {
  Mapping mapping;
  int predicted_depth = 0;
};

/**
 * Assigns vertices in descending-degree order (ties: lower id). Placing q on
 * p costs the latest meet cycle between p and q's already placed
 * neighbours; a node's cost is the max of that and its parent's cost, so it
 * never decreases along a path.
 */
InitialMapping astar_initial_mapping(const ProblemGraph& g,
                                     const AstarOptions& options = {});

/// Position pairs whose pattern CPHASE fires before cycle i.
ProblemGraph pattern_graph(int n, int i);

struct IsoMapping {
  Mapping mapping;
  int horizon = 0;  // smallest i with g inside pattern_graph(n, i)
};

/**
 * Scans i upward from max(1, max degree) and returns the first horizon whose
 * pattern graph contains g as a subgraph. nullopt on timeout.
 */
std::optional<IsoMapping> iso_initial_mapping(
    const ProblemGraph& g,
    std::chrono::milliseconds timeout = std::chrono::milliseconds(10'000));

/// Uniform permutation of 0..n-1 from std::mt19937(seed).
Mapping random_initial_mapping(int n, std::uint32_t seed);

}  // namespace ctag
