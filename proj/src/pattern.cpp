#include "ctag/pattern.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace ctag {

std::vector<std::pair<int, int>> layer_pairs(int n, LayerKind kind) {
  const int first =
      (kind == LayerKind::EvenOddCphase || kind == LayerKind::EvenOddSwap) ? 0
                                                                           : 1;
  std::vector<std::pair<int, int>> pairs;
  for (int i = first; i + 1 < n; i += 2) pairs.emplace_back(i, i + 1);
  return pairs;
}

std::vector<LayerKind> clique_layer_sequence(int n) {
  using enum LayerKind;
  std::vector<LayerKind> seq;
  if (n < 2) return seq;
  if (n == 2) return {EvenOddCphase};
  const int full = n % 2 == 0 ? n / 2 : (n - 3) / 2;
  for (int t = 0; t < full; ++t) {
    seq.insert(seq.end(),
               {EvenOddCphase, OddEvenCphase, OddEvenSwap, EvenOddSwap});
  }
  if (n % 2 == 0) {
    seq.resize(seq.size() - 2);
  } else {
    seq.insert(seq.end(),
               {EvenOddCphase, OddEvenCphase, OddEvenSwap, EvenOddCphase});
  }
  return seq;
}

PatternRun run_pattern(const ProblemGraph& g, const Mapping& line_init,
                       std::span<const int> line, const Architecture& arch,
                       int layer_limit) {
  const int n = static_cast<int>(line.size());
  if (line_init.size() != g.num_vertices() || !line_init.is_valid(n)) {
    throw ValidationError(ErrorKind::InvalidArgument,
                          "initial mapping is not an injection into the line");
  }
  PatternRun run;
  run.occupant = line_init.inverse(n);
  std::vector<int> phys(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) phys[v] = line[line_init[v]];
  run.circuit.init = Mapping(std::move(phys));
  run.circuit.arch_name = arch.name();
  run.circuit.num_qubits = arch.num_qubits();

  auto layers = clique_layer_sequence(n);
  if (layer_limit >= 0 && layer_limit < static_cast<int>(layers.size())) {
    layers.resize(layer_limit);
  }
  auto& occ = run.occupant;
  for (LayerKind kind : layers) {
    Cycle cycle;
    for (auto [i, j] : layer_pairs(n, kind)) {
      if (is_cphase_layer(kind)) {
        if (occ[i] >= 0 && occ[j] >= 0 && g.has_edge(occ[i], occ[j])) {
          Edge e(occ[i], occ[j]);
          cycle.push_back(Gate::cphase(line[i], line[j], e));
          run.executed.push_back(e);
        }
      } else {
        cycle.push_back(Gate::swap(line[i], line[j]));
        std::swap(occ[i], occ[j]);
      }
    }
    run.circuit.cycles.push_back(std::move(cycle));
  }
  if (layer_limit < 0) trim_trailing_swaps(run.circuit);
  return run;
}

ScheduledCircuit prune_pattern(const ProblemGraph& g, const Mapping& init,
                               int n) {
  const auto arch = linear_architecture(n);
  std::vector<int> line(n);
  for (int i = 0; i < n; ++i) line[i] = i;
  return run_pattern(g, init, line, arch).circuit;
}

ScheduledCircuit generate_clique_pattern(int n) {
  if (n < 2) {
    throw ValidationError(ErrorKind::InvalidArgument,
                          "clique pattern needs n >= 2");
  }
  return prune_pattern(clique(n), Mapping::identity(n), n);
}

int stream_step(int n, int pos) {
  if (pos % 2 == 0) return pos == 0 ? (n > 1 ? 1 : 0) : pos - 2;
  if (pos + 2 < n) return pos + 2;
  if (pos + 1 < n) return pos + 1;  // odd n: P(n-2) drops to P(n-1)
  return pos - 1;                   // even n: P(n-1) turns to P(n-2)
}

std::vector<int> cyclic_order(int n) {
  std::vector<int> order;
  order.reserve(n);
  int pos = n > 1 ? 1 : 0;
  for (int k = 0; k < n; ++k) {
    order.push_back(pos);
    pos = stream_step(n, pos);
  }
  return order;
}

std::vector<int> cyclic_rank_shift(int n) {
  if (n < 2) {
    throw ValidationError(ErrorKind::InvalidArgument,
                          "cyclic_rank_shift needs n >= 2");
  }
  std::vector<int> perm(n);
  for (int p = 0; p < n; ++p) perm[p] = stream_step(n, p);
  int length = 0;
  int pos = 0;
  do {
    pos = perm[pos];
    ++length;
  } while (pos != 0 && length <= n);
  if (length != n) {
    throw std::logic_error("outer iteration is not a single " +
                           std::to_string(n) + "-cycle");
  }
  return perm;
}

PatternPosition pattern_position(int n, int start_pos, int t) {
  const auto order = cyclic_order(n);
  int rank = 0;
  while (order[rank] != start_pos) ++rank;
  const int pos = order[static_cast<std::size_t>((rank + t % n) % n)];
  return {n, t, pos, rank};
}

int position_at(int n, int start_pos, int t) {
  return pattern_position(n, start_pos, t).pos;
}

MeetTable::MeetTable(int n)
    : n_(n), cycle_(static_cast<std::size_t>(n) * n, -1) {
  std::vector<int> occ(n);
  for (int i = 0; i < n; ++i) occ[i] = i;
  const auto layers = clique_layer_sequence(n);
  for (int c = 0; c < static_cast<int>(layers.size()); ++c) {
    for (auto [i, j] : layer_pairs(n, layers[c])) {
      if (is_cphase_layer(layers[c])) {
        cycle_[static_cast<std::size_t>(occ[i]) * n + occ[j]] = c;
        cycle_[static_cast<std::size_t>(occ[j]) * n + occ[i]] = c;
        max_cycle_ = c;
      } else {
        std::swap(occ[i], occ[j]);
      }
    }
  }
}

std::shared_ptr<const MeetTable> meet_table(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const MeetTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const MeetTable>(n);
  return slot;
}

int meet_cycle(int n, int pos_a, int pos_b) {
  if (pos_a == pos_b) {
    throw ValidationError(ErrorKind::InvalidArgument,
                          "meet_cycle needs distinct positions");
  }
  return (*meet_table(n))(pos_a, pos_b);
}

std::vector<int> boustrophedon_2xn(int n) {
  const int cols = (n + 1) / 2;
  std::vector<int> order;
  order.reserve(2 * cols);
  for (int c = 0; c < cols; ++c) {
    const int top = c;
    const int bottom = cols + c;
    if (c % 2 == 0) {
      order.insert(order.end(), {top, bottom});
    } else {
      order.insert(order.end(), {bottom, top});
    }
  }
  return order;
}

ScheduledCircuit generate_2xn_pattern(int n) {
  if (n < 4) {
    throw ValidationError(ErrorKind::InvalidArgument,
                          "2xN pattern needs n >= 4");
  }
  const int cols = (n + 1) / 2;
  const bool odd = n % 2 == 1;
  auto line = boustrophedon_2xn(n);  // line[n] is the spare site when odd

  ScheduledCircuit circuit;
  circuit.arch_name = "grid:2x" + std::to_string(cols);
  circuit.num_qubits = 2 * cols;
  circuit.init = Mapping(std::vector<int>(line.begin(), line.begin() + n));

  bool pending_hop = false;
  for (LayerKind kind : clique_layer_sequence(n)) {
    if (kind == LayerKind::EvenOddSwap) {
      for (int i = 0; i + 1 < n; i += 2) std::swap(line[i], line[i + 1]);
      if (odd) {
        std::swap(line[n - 1], line[n]);
        pending_hop = true;
      }
      continue;
    }
    Cycle cycle;
    for (auto [i, j] : layer_pairs(n, kind)) {
      if (is_cphase_layer(kind)) {
        cycle.push_back(Gate::cphase(line[i], line[j]));
      } else {
        cycle.push_back(Gate::swap(line[i], line[j]));
      }
    }
    if (pending_hop && kind == LayerKind::EvenOddCphase) {
      cycle.push_back(Gate::swap(line[n], line[n - 1]));
      pending_hop = false;
    }
    circuit.cycles.push_back(std::move(cycle));
  }
  // Fill in logical provenance from a replay.
  auto occ = circuit.init.inverse(circuit.num_qubits);
  for (auto& cycle : circuit.cycles) {
    for (auto& gate : cycle) {
      if (gate.kind == GateKind::Swap) {
        std::swap(occ[gate.a], occ[gate.b]);
      } else {
        gate.logical = Edge(occ[gate.a], occ[gate.b]);
      }
    }
  }
  return circuit;
}

}  // namespace ctag
