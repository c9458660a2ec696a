#include "ctag/initial_mapping.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>

#include "ctag/pattern.hpp"
#include "ctag/random.hpp"
#include "ctag/subgraph_match.hpp"

namespace ctag {

namespace {

struct SearchContext {
  const ProblemGraph& g;
  const MeetTable& meet;
  int line_length;
  std::vector<int> order;      // vertex assignment order
  std::vector<int> scan;       // position scan order
};

// Cost of putting vertex q on position p given partial assignment `pos`
// (-1 for unplaced), as a meet cycle; -1 when no neighbour is placed.
int placement_cost(const SearchContext& ctx, const std::vector<int>& pos,
                   int q, int p) {
  int cost = -1;
  for (int m : ctx.g.neighbors(q)) {
    if (pos[m] >= 0) cost = std::max(cost, ctx.meet(p, pos[m]));
  }
  return cost;
}

struct BeamNode {
  int cost = -1;
  std::vector<int> pos;   // vertex -> position, -1 unplaced
  std::vector<char> used;
};

InitialMapping beam_search(const SearchContext& ctx, int beam) {
  const int n = ctx.g.num_vertices();
  std::vector<BeamNode> level(1);
  level[0].pos.assign(n, -1);
  level[0].used.assign(ctx.line_length, 0);

  struct Child {
    int cost;
    int parent;
    int pos;
  };
  std::vector<Child> children;
  for (int q : ctx.order) {
    children.clear();
    for (int k = 0; k < static_cast<int>(level.size()); ++k) {
      const auto& node = level[k];
      for (int p : ctx.scan) {
        if (node.used[p]) continue;
        const int c = std::max(node.cost, placement_cost(ctx, node.pos, q, p));
        children.push_back({c, k, p});
      }
    }
    std::stable_sort(children.begin(), children.end(),
                     [](const Child& a, const Child& b) {
                       return a.cost < b.cost;
                     });
    if (static_cast<int>(children.size()) > beam) children.resize(beam);
    std::vector<BeamNode> next;
    next.reserve(children.size());
    for (const auto& ch : children) {
      BeamNode node = level[ch.parent];
      node.cost = ch.cost;
      node.pos[q] = ch.pos;
      node.used[ch.pos] = 1;
      next.push_back(std::move(node));
    }
    level = std::move(next);
  }
  return {Mapping(level.front().pos), level.front().cost + 1};
}

std::optional<InitialMapping> best_first(const SearchContext& ctx,
                                         std::uint64_t max_expansions) {
  const int n = ctx.g.num_vertices();
  struct Node {
    int cost;
    int depth;
    std::uint64_t serial;
    std::vector<int> pos;
  };
  // Lowest cost first, then deepest, then oldest.
  auto worse = [](const Node& a, const Node& b) {
    if (a.cost != b.cost) return a.cost > b.cost;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.serial > b.serial;
  };
  std::priority_queue<Node, std::vector<Node>, decltype(worse)> open(worse);
  std::uint64_t serial = 0;
  open.push({-1, 0, serial++, std::vector<int>(n, -1)});
  std::uint64_t expansions = 0;
  std::vector<char> used(ctx.line_length);
  while (!open.empty()) {
    Node node = open.top();
    open.pop();
    if (node.depth == n) return InitialMapping{Mapping(node.pos), node.cost + 1};
    if (++expansions > max_expansions) return std::nullopt;
    std::fill(used.begin(), used.end(), 0);
    for (int v = 0; v < n; ++v) {
      if (node.pos[v] >= 0) used[node.pos[v]] = 1;
    }
    const int q = ctx.order[node.depth];
    for (int p : ctx.scan) {
      if (used[p]) continue;
      Node child{std::max(node.cost, placement_cost(ctx, node.pos, q, p)),
                 node.depth + 1, serial++, node.pos};
      child.pos[q] = p;
      open.push(std::move(child));
    }
  }
  return std::nullopt;
}

}  // namespace

int predicted_depth(const ProblemGraph& g, const Mapping& positions,
                    int line_length) {
  if (g.num_edges() == 0) return 0;
  const auto table = meet_table(line_length);
  int last = -1;
  for (const auto& e : g.edges()) {
    last = std::max(last, (*table)(positions[e.u], positions[e.v]));
  }
  return last + 1;
}

InitialMapping astar_initial_mapping(const ProblemGraph& g,
                                     const AstarOptions& options) {
  const int n = g.num_vertices();
  const int line = options.line_length > 0 ? options.line_length : n;
  if (n < 1 || line < n) {
    throw ValidationError(ErrorKind::InvalidArgument,
                          "line shorter than the problem graph");
  }
  if (options.beam < 0) {
    throw ValidationError(ErrorKind::InvalidArgument, "beam must be >= 0");
  }
  if (n == 1) return {Mapping::identity(1), 0};
  const auto table = meet_table(line);
  SearchContext ctx{g, *table, line, {}, {}};
  ctx.order.resize(n);
  std::iota(ctx.order.begin(), ctx.order.end(), 0);
  std::stable_sort(ctx.order.begin(), ctx.order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  ctx.scan.resize(line);
  std::iota(ctx.scan.begin(), ctx.scan.end(), 0);
  if (options.tie_seed != 0) {
    std::mt19937 rng(static_cast<std::uint32_t>(options.tie_seed));
    portable_shuffle(std::span<int>(ctx.scan), rng);
  }
  if (options.beam == 0) {
    if (auto exact = best_first(ctx, options.max_expansions)) return *exact;
    return beam_search(ctx, 64);
  }
  return beam_search(ctx, options.beam);
}

ProblemGraph pattern_graph(int n, int i) {
  if (n < 2 || i < 1 || i > 2 * n - 2) {
    throw ValidationError(ErrorKind::InvalidArgument,
                          "pattern_graph needs n >= 2 and 1 <= i <= 2n-2");
  }
  const auto table = meet_table(n);
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if ((*table)(a, b) < i) edges.emplace_back(a, b);
    }
  }
  return ProblemGraph(n, edges);
}

std::optional<IsoMapping> iso_initial_mapping(
    const ProblemGraph& g, std::chrono::milliseconds timeout) {
  const int n = g.num_vertices();
  if (n < 2 || g.num_edges() == 0) return IsoMapping{Mapping::identity(n), 0};
  const auto deadline = std::chrono::steady_clock::now() + timeout;
  for (int i = std::max(1, g.max_degree()); i <= 2 * n - 2; ++i) {
    const auto target = pattern_graph(n, i);
    if (target.num_edges() < g.num_edges()) continue;
    auto match = find_subgraph_monomorphism(g, target, deadline);
    if (match.status == MatchStatus::Timeout) return std::nullopt;
    if (match.status == MatchStatus::Found) {
      return IsoMapping{Mapping(std::move(match.assignment)), i};
    }
  }
  // The full pattern graph is a clique, so the scan always ends above.
  return IsoMapping{Mapping::identity(n), 2 * n - 2};
}

Mapping random_initial_mapping(int n, std::uint32_t seed) {
  if (n < 1) {
    throw ValidationError(ErrorKind::InvalidArgument,
                          "random_initial_mapping needs n >= 1");
  }
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  std::mt19937 rng(seed);
  portable_shuffle(std::span<int>(pi), rng);
  return Mapping(std::move(pi));
}

}  // namespace ctag
