#include "ctag/scheduler.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>
#include <charconv>
#include <chrono>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "ctag/initial_mapping.hpp"
#include "ctag/pattern.hpp"

namespace ctag {

// ---------------------------------------------------------------------------
// Configuration

namespace {

struct StrategyName {
  Strategy strategy;
  std::string_view name;
};

constexpr StrategyName kStrategyNames[] = {
    {Strategy::CtagR, "ctag-r"},
    {Strategy::CtagIAstar, "ctag-i-astar"},
    {Strategy::CtagIIso, "ctag-i-iso"},
    {Strategy::CtagH, "ctag-h"},
    {Strategy::PatternOnly, "pattern-only"},
    {Strategy::Ctag, "ctag"},
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
  throw ValidationError(ErrorKind::InvalidArgument,
                        "invalid value '" + std::string(value) + "' for " +
                            std::string(key));
}

template <typename Int>
Int parse_int(std::string_view key, std::string_view value) {
  Int out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    bad_value(key, value);
  }
  return out;
}

double parse_double(std::string_view key, std::string_view value) {
  const std::string s(value);
  std::size_t used = 0;
  double out = 0;
  try {
    out = std::stod(s, &used);
  } catch (const std::exception&) {
    bad_value(key, value);
  }
  if (used != s.size()) bad_value(key, value);
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") {
    return true;
  }
  if (value == "false" || value == "0" || value == "no" || value == "off") {
    return false;
  }
  bad_value(key, value);
}

}  // namespace

std::string_view strategy_name(Strategy s) {
  for (const auto& entry : kStrategyNames) {
    if (entry.strategy == s) return entry.name;
  }
  return "unknown";
}

Strategy parse_strategy(std::string_view name) {
  if (name == "ctag-i") return Strategy::CtagIAstar;
  for (const auto& entry : kStrategyNames) {
    if (entry.name == name) return entry.strategy;
  }
  throw ValidationError(ErrorKind::InvalidArgument,
                        "unknown strategy '" + std::string(name) + "'");
}

SchedulerConfig parse_config(std::string_view text) {
  SchedulerConfig cfg;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of("\n;", start);
    if (end == std::string_view::npos) end = text.size();
    auto item = text.substr(start, end - start);
    if (auto hash = item.find('#'); hash != std::string_view::npos) {
      item = item.substr(0, hash);
    }
    item = trim(item);
    start = end + 1;
    if (item.empty()) continue;
    const auto eq = item.find_first_of("=:");
    if (eq == std::string_view::npos) {
      throw ValidationError(ErrorKind::InvalidArgument,
                            "expected key = value, got '" + std::string(item) +
                                "'");
    }
    const auto key = trim(item.substr(0, eq));
    const auto value = trim(item.substr(eq + 1));
    if (key == "strategy") {
      cfg.strategy = parse_strategy(value);
    } else if (key == "threshold") {
      cfg.threshold = parse_double(key, value);
      if (!(cfg.threshold >= 0.0 && cfg.threshold <= 1.0)) {
        bad_value(key, value);
      }
    } else if (key == "beam") {
      cfg.beam = parse_int<int>(key, value);
      if (cfg.beam < 0) bad_value(key, value);
    } else if (key == "max_paths") {
      cfg.max_paths = parse_int<int>(key, value);
      if (cfg.max_paths < 1) bad_value(key, value);
    } else if (key == "seed") {
      cfg.seed = parse_int<std::uint32_t>(key, value);
    } else if (key == "timeout_ms") {
      cfg.timeout_ms = parse_int<int>(key, value);
      if (cfg.timeout_ms < 0) bad_value(key, value);
    } else if (key == "fallback_guard") {
      cfg.fallback_guard = parse_bool(key, value);
    } else if (key == "embeddings") {
      cfg.embeddings = parse_int<int>(key, value);
      if (cfg.embeddings < 1) bad_value(key, value);
    } else if (key == "exact_matching") {
      cfg.exact_matching = parse_bool(key, value);
    } else {
      throw ValidationError(ErrorKind::InvalidArgument,
                            "unknown config key '" + std::string(key) + "'");
    }
  }
  return cfg;
}

std::string config_to_string(const SchedulerConfig& cfg) {
  std::ostringstream out;
  out << "strategy = " << strategy_name(cfg.strategy) << '\n'
      << "threshold = " << cfg.threshold << '\n'
      << "beam = " << cfg.beam << '\n'
      << "max_paths = " << cfg.max_paths << '\n'
      << "seed = " << cfg.seed << '\n'
      << "timeout_ms = " << cfg.timeout_ms << '\n'
      << "fallback_guard = " << (cfg.fallback_guard ? "true" : "false") << '\n'
      << "embeddings = " << cfg.embeddings << '\n'
      << "exact_matching = " << (cfg.exact_matching ? "true" : "false")
      << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// SchedulerState

SchedulerState::SchedulerState(const ProblemGraph& g, const Architecture& arch,
                               Mapping init)
    : g_(&g), arch_(&arch) {
  if (g.num_vertices() > arch.num_qubits()) {
    throw ValidationError(ErrorKind::InvalidArgument,
                          "architecture has fewer qubits than the problem");
  }
  if (init.size() != g.num_vertices() || !init.is_valid(arch.num_qubits())) {
    throw ValidationError(ErrorKind::InvalidArgument,
                          "initial mapping is not an injection into the "
                          "architecture");
  }
  pi_ = init.values();
  occupant_ = init.inverse(arch.num_qubits());
  remaining_.assign(g.num_edges(), 1);
  num_remaining_ = g.num_edges();
  rem_degree_.resize(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) rem_degree_[v] = g.degree(v);
  ready_.assign(arch.num_qubits(), 0);
  protected_.assign(arch.num_qubits(), 0);
  circuit_.init = std::move(init);
  circuit_.arch_name = arch.name();
  circuit_.num_qubits = arch.num_qubits();
}

std::vector<int> SchedulerState::remaining_edges() const {
  std::vector<int> ids;
  ids.reserve(num_remaining_);
  for (int e = 0; e < static_cast<int>(remaining_.size()); ++e) {
    if (remaining_[e]) ids.push_back(e);
  }
  return ids;
}

bool SchedulerState::executable(int edge_id) const {
  const auto& e = g_->edges()[edge_id];
  return arch_->coupled(pi_[e.u], pi_[e.v]);
}

int SchedulerState::distance(int edge_id) const {
  const auto& e = g_->edges()[edge_id];
  return arch_->distance(pi_[e.u], pi_[e.v]);
}

void SchedulerState::clear_protection() {
  std::fill(protected_.begin(), protected_.end(), 0);
}

void SchedulerState::place(Gate gate) {
  const int t = std::max(ready_[gate.a], ready_[gate.b]);
  if (static_cast<int>(circuit_.cycles.size()) <= t) {
    circuit_.cycles.resize(t + 1);
  }
  circuit_.cycles[t].push_back(gate);
  ready_[gate.a] = ready_[gate.b] = t + 1;
  cursor_ = std::max(cursor_, t + 1);
}

void SchedulerState::swap_physical(int a, int b) {
  std::swap(occupant_[a], occupant_[b]);
  if (occupant_[a] >= 0) pi_[occupant_[a]] = a;
  if (occupant_[b] >= 0) pi_[occupant_[b]] = b;
}

void SchedulerState::append_cycles(const std::vector<Cycle>& cycles) {
  const int base = cursor_;
  circuit_.cycles.resize(base + cycles.size());
  for (int k = 0; k < static_cast<int>(cycles.size()); ++k) {
    for (const Gate& gate : cycles[k]) {
      if (gate.kind == GateKind::Swap) {
        swap_physical(gate.a, gate.b);
      } else {
        const int id = g_->edge_index(occupant_[gate.a], occupant_[gate.b]);
        if (occupant_[gate.a] < 0 || occupant_[gate.b] < 0 || id < 0 ||
            !remaining_[id]) {
          throw std::logic_error("prefix CPHASE does not match a remaining edge");
        }
        remaining_[id] = 0;
        --num_remaining_;
        --rem_degree_[occupant_[gate.a]];
        --rem_degree_[occupant_[gate.b]];
      }
      circuit_.cycles[base + k].push_back(gate);
      ready_[gate.a] = ready_[gate.b] = base + k + 1;
    }
  }
  cursor_ = base + static_cast<int>(cycles.size());
}

void SchedulerState::execute(int edge_id) {
  if (!remaining_[edge_id] || !executable(edge_id)) {
    throw std::logic_error("edge is not executable");
  }
  const auto& e = g_->edges()[edge_id];
  place(Gate::cphase(pi_[e.u], pi_[e.v], e));
  remaining_[edge_id] = 0;
  --num_remaining_;
  --rem_degree_[e.u];
  --rem_degree_[e.v];
}

void SchedulerState::apply(const SwapStrategy& ss) {
  for (auto [a, b] : ss.swaps) {
    place(Gate::swap(a, b));
    swap_physical(a, b);
  }
  protect(ss.new_positions.first);
  protect(ss.new_positions.second);
}

// ---------------------------------------------------------------------------
// Building blocks

int partial_pattern_cycles(const ProblemGraph& g, const Mapping& positions,
                           double threshold) {
  const int n = g.num_vertices();
  if (n < 2 || g.num_edges() == 0) return 0;
  const double need = threshold * (n / 2);
  auto occ = positions.inverse(n);
  int executed = 0;
  int k = 0;
  const auto layers = clique_layer_sequence(n);
  for (int t = 0; t < static_cast<int>(layers.size()); ++t) {
    const auto pairs = layer_pairs(n, layers[t]);
    if (!is_cphase_layer(layers[t])) {
      for (auto [i, j] : pairs) std::swap(occ[i], occ[j]);
      continue;
    }
    int fired = 0;
    for (auto [i, j] : pairs) fired += g.has_edge(occ[i], occ[j]);
    if (fired + 1e-9 < need) break;
    executed += fired;
    k = t + 1;
    if (executed == g.num_edges()) break;
  }
  return k;
}

std::vector<int> maximal_matching(const ProblemGraph& g,
                                  std::span<const int> edge_ids,
                                  std::span<const int> remaining_degree,
                                  bool exact) {
  const int n = g.num_vertices();
  std::vector<int> chosen;
  if (exact && n <= 64) {
    using BGraph = boost::adjacency_list<boost::vecS, boost::vecS,
                                         boost::undirectedS>;
    BGraph bg(n);
    for (int id : edge_ids) {
      boost::add_edge(g.edges()[id].u, g.edges()[id].v, bg);
    }
    std::vector<boost::graph_traits<BGraph>::vertex_descriptor> mate(n);
    boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
    const auto none = boost::graph_traits<BGraph>::null_vertex();
    for (int id : edge_ids) {
      const auto& e = g.edges()[id];
      if (mate[e.u] != none && static_cast<int>(mate[e.u]) == e.v) {
        chosen.push_back(id);
      }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
  }
  std::vector<int> exec_degree(n, 0);
  for (int id : edge_ids) {
    ++exec_degree[g.edges()[id].u];
    ++exec_degree[g.edges()[id].v];
  }
  struct Key {
    int conflicts;
    int weight;
    int id;
  };
  std::vector<Key> keys;
  keys.reserve(edge_ids.size());
  for (int id : edge_ids) {
    const auto& e = g.edges()[id];
    keys.push_back({exec_degree[e.u] + exec_degree[e.v] - 2,
                    remaining_degree[e.u] + remaining_degree[e.v], id});
  }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.conflicts != b.conflicts) return a.conflicts < b.conflicts;
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.id < b.id;
  });
  std::vector<char> used(n, 0);
  for (const auto& k : keys) {
    const auto& e = g.edges()[k.id];
    if (used[e.u] || used[e.v]) continue;
    used[e.u] = used[e.v] = 1;
    chosen.push_back(k.id);
  }
  return chosen;
}

namespace {

// Shortest paths from a to b, lexicographically smallest first.
std::vector<std::vector<int>> shortest_paths(const Architecture& arch, int a,
                                             int b, int limit) {
  std::vector<std::vector<int>> paths;
  std::vector<int> path{a};
  auto dfs = [&](auto&& self, int v) -> void {
    if (static_cast<int>(paths.size()) >= limit) return;
    if (v == b) {
      paths.push_back(path);
      return;
    }
    const int d = arch.distance(v, b);
    std::vector<int> next;
    for (int nb : arch.neighbors(v)) {
      if (arch.distance(nb, b) == d - 1) next.push_back(nb);
    }
    std::sort(next.begin(), next.end());
    for (int nb : next) {
      path.push_back(nb);
      self(self, nb);
      path.pop_back();
      if (static_cast<int>(paths.size()) >= limit) return;
    }
  };
  dfs(dfs, a);
  return paths;
}

}  // namespace

std::vector<SwapStrategy> enumerate_swap_strategies(
    std::pair<int, int> edge, const SchedulerState& state, int max_paths) {
  std::vector<SwapStrategy> out;
  const auto [ni, nj] = edge;
  const int pi = state.position(ni);
  const int pj = state.position(nj);
  const auto& arch = state.arch();
  const int dist = arch.distance(pi, pj);
  if (dist < 2) return out;
  // Every strategy moves at least one endpoint.
  if (state.is_protected(pi) && state.is_protected(pj)) return out;
  for (const auto& path : shortest_paths(arch, pi, pj, max_paths)) {
    for (int d1 = 0; d1 < dist; ++d1) {
      const int d2 = dist - 1 - d1;
      bool feasible = true;
      if (d1 > 0) {
        for (int k = 0; k <= d1 && feasible; ++k) {
          feasible = !state.is_protected(path[k]);
        }
      }
      if (d2 > 0) {
        for (int k = d1 + 1; k <= dist && feasible; ++k) {
          feasible = !state.is_protected(path[k]);
        }
      }
      if (!feasible) continue;
      SwapStrategy ss;
      ss.n_i = ni;
      ss.n_j = nj;
      ss.d1 = d1;
      ss.d2 = d2;
      ss.path = path;
      for (int k = 0; k < d1; ++k) ss.swaps.emplace_back(path[k], path[k + 1]);
      for (int k = 0; k < d2; ++k) {
        ss.swaps.emplace_back(path[dist - k], path[dist - k - 1]);
      }
      ss.new_positions = {path[d1], path[d1 + 1]};
      out.push_back(std::move(ss));
    }
  }
  return out;
}

int score_strategy(const SwapStrategy& ss, const SchedulerState& state) {
  const auto& g = state.graph();
  const auto& arch = state.arch();
  const auto& occ = state.occupant();
  // Occupants of the path after the swaps.
  std::vector<std::pair<int, int>> moved;  // (logical, new physical)
  {
    std::vector<int> local(ss.path.size());
    for (std::size_t k = 0; k < ss.path.size(); ++k) local[k] = occ[ss.path[k]];
    auto index_of = [&](int q) {
      return static_cast<std::size_t>(
          std::find(ss.path.begin(), ss.path.end(), q) - ss.path.begin());
    };
    for (auto [a, b] : ss.swaps) std::swap(local[index_of(a)], local[index_of(b)]);
    for (std::size_t k = 0; k < ss.path.size(); ++k) {
      if (local[k] >= 0) moved.emplace_back(local[k], ss.path[k]);
    }
  }
  auto where = [&](int logical) {
    for (auto [l, p] : moved) {
      if (l == logical) return p;
    }
    return state.position(logical);
  };
  int score = 0;
  auto sum_for = [&](int self, int partner) {
    const int from = where(self);
    for (int u : g.neighbors(self)) {
      if (u == partner || !state.is_remaining(g.edge_index(self, u))) continue;
      score += arch.distance(from, where(u));
    }
  };
  sum_for(ss.n_i, ss.n_j);
  sum_for(ss.n_j, ss.n_i);
  return score;
}

int strategy_ready_cycle(const SwapStrategy& ss, const SchedulerState& state) {
  std::vector<std::pair<int, int>> ready;  // (physical, cycle) on the path
  ready.reserve(ss.path.size());
  for (int q : ss.path) ready.emplace_back(q, state.ready(q));
  auto at = [&](int q) -> int& {
    return std::find_if(ready.begin(), ready.end(),
                        [q](const auto& r) { return r.first == q; })
        ->second;
  };
  for (auto [a, b] : ss.swaps) {
    const int t = std::max(at(a), at(b)) + 1;
    at(a) = at(b) = t;
  }
  return std::max(at(ss.new_positions.first), at(ss.new_positions.second));
}

void run_heuristic(SchedulerState& state, const SchedulerConfig& cfg) {
  const auto& g = state.graph();
  const int cap = 2 * state.num_remaining() + 4;
  int rounds = 0;
  std::vector<int> degree(g.num_vertices());
  while (state.num_remaining() > 0) {
    if (++rounds > cap) {
      throw std::logic_error("heuristic scheduler made no progress");
    }
    state.clear_protection();
    const auto remaining = state.remaining_edges();
    std::vector<int> executable;
    std::vector<int> blocked;
    for (int id : remaining) {
      (state.executable(id) ? executable : blocked).push_back(id);
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
      degree[v] = state.remaining_degree(v);
    }
    const auto matched =
        maximal_matching(g, executable, degree, cfg.exact_matching);
    for (int id : executable) {
      state.protect(state.position(g.edges()[id].u));
      state.protect(state.position(g.edges()[id].v));
    }
    for (int id : matched) state.execute(id);

    std::vector<std::pair<int, int>> order;  // (distance, id)
    order.reserve(blocked.size());
    for (int id : blocked) order.emplace_back(state.distance(id), id);
    std::sort(order.begin(), order.end());
    int applied = 0;
    for (auto [d0, id] : order) {
      if (state.distance(id) <= 1) continue;
      const auto& e = g.edges()[id];
      const auto options =
          enumerate_swap_strategies({e.u, e.v}, state, cfg.max_paths);
      if (options.empty()) continue;
      // Lowest score, then fewer SWAPs, then earliest ready cycle, then
      // lowest new positions.
      const SwapStrategy* best = nullptr;
      std::tuple<int, std::size_t, int, std::pair<int, int>> best_key;
      for (const auto& ss : options) {
        auto key = std::make_tuple(score_strategy(ss, state), ss.swaps.size(),
                                   strategy_ready_cycle(ss, state),
                                   ss.new_positions);
        if (!best || key < best_key) {
          best = &ss;
          best_key = key;
        }
      }
      state.apply(*best);
      ++applied;
    }
    if (matched.empty() && applied == 0) {
      throw std::logic_error("heuristic scheduler made no progress");
    }
  }
}

// ---------------------------------------------------------------------------
// Strategies

namespace {

bool better(const ScheduledCircuit& a, const ScheduledCircuit& b) {
  if (a.depth() != b.depth()) return a.depth() < b.depth();
  return a.count(GateKind::Swap) < b.count(GateKind::Swap);
}

void compact(ScheduledCircuit& c) {
  std::erase_if(c.cycles, [](const Cycle& cycle) { return cycle.empty(); });
  trim_trailing_swaps(c);
}

std::vector<int> require_line(const Architecture& arch, int n) {
  auto line = default_embedding(arch, n);
  if (!line) {
    throw ValidationError(ErrorKind::InvalidArgument,
                          "no line of " + std::to_string(n) +
                              " coupled qubits found in " + arch.name());
  }
  return line->order;
}

ScheduledCircuit pattern_along_line(const ProblemGraph& g,
                                    const Architecture& arch,
                                    const Mapping& positions) {
  const auto line = require_line(arch, g.num_vertices());
  return run_pattern(g, positions, line, arch).circuit;
}

Mapping astar_positions(const ProblemGraph& g, const SchedulerConfig& cfg) {
  AstarOptions opt;
  opt.beam = cfg.beam;
  return astar_initial_mapping(g, opt).mapping;
}

// Breadth-first order from qubit 0: a compact region used when the device
// has no line of the required length.
std::vector<int> bfs_region(const Architecture& arch, int n) {
  std::vector<int> order{0};
  std::vector<char> seen(arch.num_qubits(), 0);
  seen[0] = 1;
  for (std::size_t k = 0; k < order.size(); ++k) {
    std::vector<int> next(arch.neighbors(order[k]).begin(),
                          arch.neighbors(order[k]).end());
    std::sort(next.begin(), next.end());
    for (int nb : next) {
      if (!seen[nb]) {
        seen[nb] = 1;
        order.push_back(nb);
      }
    }
  }
  order.resize(n);
  return order;
}

ScheduledCircuit heuristic_on_line(const ProblemGraph& g,
                                   const Architecture& arch,
                                   const Mapping& positions,
                                   std::span<const int> line, int prefix,
                                   bool is_line, const SchedulerConfig& cfg) {
  const int n = g.num_vertices();
  std::vector<int> phys(n);
  for (int v = 0; v < n; ++v) phys[v] = line[positions[v]];
  SchedulerState state(g, arch, Mapping(std::move(phys)));
  if (is_line && prefix > 0) {
    state.append_cycles(run_pattern(g, positions, line, arch, prefix).circuit.cycles);
  }
  run_heuristic(state, cfg);
  ScheduledCircuit result = std::move(state.circuit());
  compact(result);
  if (is_line && cfg.fallback_guard) {
    auto pattern = run_pattern(g, positions, line, arch).circuit;
    if (better(pattern, result)) return pattern;
  }
  return result;
}

// Pattern prefix on line `a`, then the pruned pattern for what is left on
// line `b`, which must cover the same qubits.
ScheduledCircuit switch_lines(const ProblemGraph& g, const Architecture& arch,
                              const Mapping& positions,
                              std::span<const int> a, int prefix,
                              std::span<const int> b,
                              const SchedulerConfig& cfg) {
  const int n = g.num_vertices();
  std::vector<int> phys(n);
  for (int v = 0; v < n; ++v) phys[v] = a[positions[v]];
  SchedulerState state(g, arch, Mapping(std::move(phys)));
  state.append_cycles(run_pattern(g, positions, a, arch, prefix).circuit.cycles);
  std::vector<int> index_in_b(arch.num_qubits(), -1);
  for (int k = 0; k < static_cast<int>(b.size()); ++k) index_in_b[b[k]] = k;
  std::vector<int> on_b(n);
  for (int v = 0; v < n; ++v) on_b[v] = index_in_b[state.position(v)];
  std::vector<Edge> left;
  for (int id : state.remaining_edges()) left.push_back(g.edges()[id]);
  const ProblemGraph rest(n, left);
  state.append_cycles(run_pattern(rest, Mapping(on_b), b, arch).circuit.cycles);
  run_heuristic(state, cfg);
  ScheduledCircuit result = std::move(state.circuit());
  compact(result);
  return result;
}

bool same_qubits(const LineEmbedding& a, const LineEmbedding& b) {
  auto x = a.order, y = b.order;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

ScheduledCircuit ctag_h(const ProblemGraph& g, const Architecture& arch,
                        const SchedulerConfig& cfg) {
  const int n = g.num_vertices();
  // The A* mapping suits the pure pattern; the natural order often keeps a
  // denser prefix, so both are tried.
  std::vector<Mapping> starts{astar_positions(g, cfg)};
  if (!(starts.front() == Mapping::identity(n))) {
    starts.push_back(Mapping::identity(n));
  }

  std::vector<LineEmbedding> lines;
  if (auto line = default_embedding(arch, n)) lines.push_back(*line);
  if (cfg.embeddings > static_cast<int>(lines.size())) {
    EmbeddingSearchOptions opt;
    opt.length = n;
    opt.max_expansions = 100'000;
    for (auto& extra : multi_embeddings(arch, cfg.embeddings, cfg.seed, opt)) {
      if (static_cast<int>(lines.size()) >= cfg.embeddings) break;
      const bool dup = std::any_of(lines.begin(), lines.end(), [&](const auto& l) {
        return l.same_path(extra);
      });
      if (!dup) lines.push_back(std::move(extra));
    }
  }
  std::optional<ScheduledCircuit> best;
  auto consider = [&](ScheduledCircuit c) {
    if (!best || better(c, *best)) best = std::move(c);
  };
  for (const auto& positions : starts) {
    if (lines.empty()) {
      consider(heuristic_on_line(g, arch, positions, bfs_region(arch, n), 0,
                                 false, cfg));
      continue;
    }
    const int prefix = partial_pattern_cycles(g, positions, cfg.threshold);
    for (const auto& line : lines) {
      consider(heuristic_on_line(g, arch, positions, line.order, prefix, true,
                                 cfg));
      if (prefix == 0) continue;
      for (const auto& other : lines) {
        if (&other == &line || !same_qubits(line, other)) continue;
        consider(switch_lines(g, arch, positions, line.order, prefix,
                              other.order, cfg));
      }
    }
  }
  return std::move(*best);
}

}  // namespace

ScheduledCircuit schedule(const ProblemGraph& g, const Architecture& arch,
                          const SchedulerConfig& cfg) {
  const int n = g.num_vertices();
  if (n > arch.num_qubits()) {
    throw ValidationError(ErrorKind::InvalidArgument,
                          "architecture " + arch.name() + " has " +
                              std::to_string(arch.num_qubits()) +
                              " qubits, the problem needs " +
                              std::to_string(n));
  }
  if (n < 2 || g.num_edges() == 0) {
    ScheduledCircuit empty;
    auto line = default_embedding(arch, n);
    empty.init = Mapping(line ? line->order : bfs_region(arch, n));
    empty.arch_name = arch.name();
    empty.num_qubits = arch.num_qubits();
    return empty;
  }
  switch (cfg.strategy) {
    case Strategy::PatternOnly:
      return pattern_along_line(g, arch, Mapping::identity(n));
    case Strategy::CtagR:
      return pattern_along_line(g, arch, random_initial_mapping(n, cfg.seed));
    case Strategy::CtagIAstar:
      return pattern_along_line(g, arch, astar_positions(g, cfg));
    case Strategy::CtagIIso: {
      auto iso = iso_initial_mapping(
          g, std::chrono::milliseconds(cfg.timeout_ms));
      return pattern_along_line(g, arch,
                                iso ? iso->mapping : astar_positions(g, cfg));
    }
    case Strategy::CtagH:
      return ctag_h(g, arch, cfg);
    case Strategy::Ctag: {
      auto h = ctag_h(g, arch, cfg);
      auto line = default_embedding(arch, n);
      if (!line) return h;
      auto a = run_pattern(g, astar_positions(g, cfg), line->order, arch).circuit;
      return better(h, a) ? h : a;
    }
  }
  throw std::logic_error("unhandled strategy");
}

}  // namespace ctag
