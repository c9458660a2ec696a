#pragma once

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "ctag/circuit.hpp"
#include "ctag/graph.hpp"

namespace ctag {

/// The four layer types of one outer iteration of the pattern.
enum class LayerKind {
  EvenOddCphase,  // P0-P1, P2-P3, ...
  OddEvenCphase,  // P1-P2, P3-P4, ...
  OddEvenSwap,
  EvenOddSwap,
};

[[nodiscard]] constexpr bool is_cphase_layer(LayerKind k) noexcept {
  return k == LayerKind::EvenOddCphase || k == LayerKind::OddEvenCphase;
}

/// Line-position pairs (i, i+1) acted on by a layer of a length-n chain.
std::vector<std::pair<int, int>> layer_pairs(int n, LayerKind kind);

/**
 * Layer sequence of the clique pattern on an n-chain, trailing SWAP layers
 * already dropped.
 *
 * Even n: n/2 iterations of [EO-CPHASE, OE-CPHASE, OE-SWAP, EO-SWAP]
 * minus the final two SWAP layers, 2n-2 layers.
 * Odd n: (n-1)/2 iterations where the last one omits its EO-SWAP, then a
 * closing EO-CPHASE layer; also 2n-2 layers. n = 2 is the lone EO-CPHASE
 * layer. Every pair meets exactly once.
 */
std::vector<LayerKind> clique_layer_sequence(int n);

/// Clique pattern on linear(n) with the identity mapping.
ScheduledCircuit generate_clique_pattern(int n);

/**
 * Clique pattern with CPHASEs whose logical pair is not an edge of g removed
 * and cycles after the last surviving CPHASE dropped. Interior layers keep
 * their index even when they end up empty, so the depth equals one plus the
 * latest meet cycle among g's edges. `init` maps g's vertices onto
 * positions 0..n-1 of linear(n).
 */
ScheduledCircuit prune_pattern(const ProblemGraph& g, const Mapping& init,
                               int n);

/// Result of running (a prefix of) the pattern along an embedded line.
struct PatternRun {
  ScheduledCircuit circuit;
  /// Logical qubit at each line position afterwards, -1 when empty.
  std::vector<int> occupant;
  /// Edges of g executed by the run, in emission order.
  std::vector<Edge> executed;
};

/**
 * Runs the pruned pattern on a chain of `line.size()` positions where line
 * position i is physical qubit line[i] of `arch`. `line_init` maps logical
 * vertices to line positions. With layer_limit >= 0 only that many layers
 * are emitted and nothing is trimmed.
 */
PatternRun run_pattern(const ProblemGraph& g, const Mapping& line_init,
                       std::span<const int> line, const Architecture& arch,
                       int layer_limit = -1);

/// One step of the two-stream position rule (one full outer iteration).
int stream_step(int n, int pos);

/**
 * Position after t outer iterations of a qubit starting at start_pos.
 * Even positions move up two (towards P0), odd ones down two; P0 enters the
 * odd stream and the far end turns around per the parity of n.
 */
int position_at(int n, int start_pos, int t);

/// Position snapshot with the qubit's rank in the cyclic ordering.
struct PatternPosition {
  int n = 0;
  int t = 0;
  int pos = 0;
  int cyclic_rank = 0;
};

PatternPosition pattern_position(int n, int start_pos, int t);

/**
 * Cyclic ordering C_0..C_{n-1}: entry k is the starting position of C_k.
 * C_0 starts on P1 and one iteration moves C_k onto C_{k+1}'s position.
 */
std::vector<int> cyclic_order(int n);

/**
 * Permutation of positions induced by one outer iteration (perm[p] is where
 * the qubit on p ends up). Throws std::logic_error if it is not a single
 * n-cycle.
 */
std::vector<int> cyclic_rank_shift(int n);

/// Cycle index at which each pair of starting positions executes.
class MeetTable {
 public:
  explicit MeetTable(int n);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] int operator()(int a, int b) const {
    return cycle_[static_cast<std::size_t>(a) * n_ + b];
  }
  /// Last cycle of the clique pattern, 2n-3 for n >= 3 and 0 for n = 2.
  [[nodiscard]] int max_cycle() const noexcept { return max_cycle_; }

 private:
  int n_;
  int max_cycle_ = -1;
  std::vector<int> cycle_;
};

/// Memoized, thread-safe; tables are immutable once built.
std::shared_ptr<const MeetTable> meet_table(int n);

int meet_cycle(int n, int pos_a, int pos_b);

/**
 * Clique pattern on grid(2, ceil(n/2)). Qubits start in boustrophedon order
 * down column 0, up column 1, and so on. Each EO-SWAP layer only flips the
 * columns, so it is replaced by relabelling the line; for odd n the lone
 * qubit of the last column hops into the spare site during the next
 * EO-CPHASE layer, where it is idle. Depth is 3n/2-1 (even) or
 * 3(n-1)/2+1 (odd).
 */
ScheduledCircuit generate_2xn_pattern(int n);

/// The starting boustrophedon line used by generate_2xn_pattern.
std::vector<int> boustrophedon_2xn(int n);

}  // namespace ctag
