#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "ctag/graph.hpp"

namespace ctag {

enum class MatchStatus { Found, NotFound, Timeout };

struct MatchResult {
  MatchStatus status = MatchStatus::NotFound;
  /// pattern vertex -> target vertex, filled when Found.
  std::vector<int> assignment;
  std::uint64_t states = 0;
};

/**
 * Subgraph monomorphism: an injective map from pattern vertices to target
 * vertices that sends every pattern edge onto a target edge (extra target
 * edges are allowed). VF2-style backtracking: vertices are matched in a
 * connectivity-first order and candidates come from the image of an already
 * matched neighbour.
 */
MatchResult find_subgraph_monomorphism(
    const ProblemGraph& pattern, const ProblemGraph& target,
    std::optional<std::chrono::steady_clock::time_point> deadline = {});

}  // namespace ctag
