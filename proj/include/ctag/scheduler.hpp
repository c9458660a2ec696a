#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ctag/circuit.hpp"
#include "ctag/embedding.hpp"
#include "ctag/graph.hpp"

namespace ctag {

enum class Strategy {
  CtagR,        // random mapping, pruned pattern
  CtagIAstar,   // A* mapping, pruned pattern
  CtagIIso,     // isomorphism mapping (A* on timeout), pruned pattern
  CtagH,        // heuristic scheduler
  PatternOnly,  // identity mapping, pruned pattern
  Ctag,         // shallower of CtagIAstar and CtagH
};

std::string_view strategy_name(Strategy s);
/// Accepts the names printed by strategy_name; also "ctag-i" for CtagIAstar.
Strategy parse_strategy(std::string_view name);

struct SchedulerConfig {
  Strategy strategy = Strategy::CtagH;
  double threshold = 0.5;
  int beam = 64;
  int max_paths = 4;
  std::uint32_t seed = 0;
  int timeout_ms = 10'000;
  bool fallback_guard = true;
  /// Line embeddings tried by CtagH; the shallowest schedule wins.
  int embeddings = 2;
  /// Exact maximum matching (n <= 64) instead of the greedy one.
  bool exact_matching = false;
};

/**
 * Flat "key = value" document, one pair per line ('#' comments, blank lines
 * and ';' separators allowed). Unknown keys and bad values throw
 * ValidationError.
 */
SchedulerConfig parse_config(std::string_view text);
std::string config_to_string(const SchedulerConfig& cfg);

struct SwapStrategy {
  int n_i = 0;
  int n_j = 0;
  int d1 = 0;           // hops taken by n_i
  int d2 = 0;           // hops taken by n_j
  std::vector<int> path;  // shortest physical path from n_i to n_j
  std::vector<std::pair<int, int>> swaps;  // in application order
  std::pair<int, int> new_positions;       // (p'_ni, p'_nj)
};

/// Mutable state of one CTAG-H run.
class SchedulerState {
 public:
  SchedulerState(const ProblemGraph& g, const Architecture& arch,
                 Mapping init);

  [[nodiscard]] const ProblemGraph& graph() const noexcept { return *g_; }
  [[nodiscard]] const Architecture& arch() const noexcept { return *arch_; }
  /// logical -> physical, current.
  [[nodiscard]] Mapping mapping() const { return Mapping(pi_); }
  [[nodiscard]] int position(int logical) const { return pi_[logical]; }
  /// physical -> logical, -1 when empty.
  [[nodiscard]] const std::vector<int>& occupant() const noexcept {
    return occupant_;
  }
  [[nodiscard]] const ScheduledCircuit& circuit() const noexcept {
    return circuit_;
  }
  [[nodiscard]] ScheduledCircuit& circuit() noexcept { return circuit_; }
  /// First cycle in which every qubit is idle.
  [[nodiscard]] int cycle_cursor() const noexcept { return cursor_; }

  [[nodiscard]] bool is_remaining(int edge_id) const {
    return remaining_[edge_id] != 0;
  }
  [[nodiscard]] int num_remaining() const noexcept { return num_remaining_; }
  [[nodiscard]] std::vector<int> remaining_edges() const;
  /// Unscheduled edges at logical vertex v.
  [[nodiscard]] int remaining_degree(int v) const { return rem_degree_[v]; }
  [[nodiscard]] bool executable(int edge_id) const;
  [[nodiscard]] int distance(int edge_id) const;

  /// First cycle in which a physical qubit is idle.
  [[nodiscard]] int ready(int physical) const { return ready_[physical]; }

  [[nodiscard]] bool is_protected(int physical) const {
    return protected_[physical] != 0;
  }
  void protect(int physical) { protected_[physical] = 1; }
  void clear_protection();

  /// Replays cycles verbatim at their own indices (the pattern prefix).
  void append_cycles(const std::vector<Cycle>& cycles);
  /// Places a CPHASE for edge_id at the earliest cycle both qubits are free.
  void execute(int edge_id);
  void apply(const SwapStrategy& ss);

 private:
  void place(Gate gate);
  void swap_physical(int a, int b);

  const ProblemGraph* g_;
  const Architecture* arch_;
  std::vector<int> pi_;
  std::vector<int> occupant_;
  std::vector<char> remaining_;
  std::vector<int> rem_degree_;
  int num_remaining_ = 0;
  ScheduledCircuit circuit_;
  std::vector<int> ready_;  // per physical qubit
  std::vector<char> protected_;
  int cursor_ = 0;
};

/**
 * Length of the pattern prefix to follow before switching to the heuristic:
 * the longest prefix ending on an execution layer in which every execution
 * layer fires at least threshold * floor(n/2) CPHASEs of g. `positions`
 * maps vertices onto an n-chain.
 */
int partial_pattern_cycles(const ProblemGraph& g, const Mapping& positions,
                           double threshold);

/**
 * Matching over the given executable edge ids. Greedy: fewest conflicting
 * executable edges first, then larger remaining degree of the endpoints,
 * then lower edge id. With exact set, Edmonds' maximum matching is used
 * instead.
 */
std::vector<int> maximal_matching(const ProblemGraph& g,
                                  std::span<const int> edge_ids,
                                  std::span<const int> remaining_degree,
                                  bool exact = false);

/**
 * Feasible swap strategies for edge (n_i, n_j): every split d1 + d2 =
 * dist - 1 over up to max_paths shortest paths (neighbours visited in
 * increasing id). A strategy is dropped if one of its SWAPs touches a
 * protected qubit.
 */
std::vector<SwapStrategy> enumerate_swap_strategies(
    std::pair<int, int> edge, const SchedulerState& state, int max_paths);

/// Sum of distances from both moved endpoints to their unscheduled
/// neighbours (the partner excluded), under the post-move mapping.
int score_strategy(const SwapStrategy& ss, const SchedulerState& state);

/// Cycle at which both endpoints are idle once the strategy's SWAPs are
/// placed as early as possible.
int strategy_ready_cycle(const SwapStrategy& ss, const SchedulerState& state);

/// Heuristic rounds (matching, then scored swap strategies) until no
/// edge remains. Throws std::logic_error if progress stalls.
void run_heuristic(SchedulerState& state, const SchedulerConfig& cfg);

/// Entry point for every strategy.
ScheduledCircuit schedule(const ProblemGraph& g, const Architecture& arch,
                          const SchedulerConfig& cfg = {});

}  // namespace ctag
