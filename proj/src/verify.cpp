#include "ctag/verify.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <unordered_map>

namespace ctag {

VerificationReport verify(const ScheduledCircuit& c, const ProblemGraph& g,
                          const Architecture& arch) {
  VerificationReport report;
  const int q = arch.num_qubits();
  if (c.init.size() != g.num_vertices() || !c.init.is_valid(q)) {
    report.illegal_gates.push_back(
        {-1, 0, Gate{}, "initial mapping is not an injection into the "
                        "architecture"});
    report.missing = g.edges();
    report.final_mapping = c.init;
    return report;
  }
  std::vector<int> occ = c.init.inverse(q);
  std::vector<int> busy(q, -1);
  for (int t = 0; t < static_cast<int>(c.cycles.size()); ++t) {
    const auto& cycle = c.cycles[t];
    for (int k = 0; k < static_cast<int>(cycle.size()); ++k) {
      const Gate& gate = cycle[k];
      auto illegal = [&](const char* why) {
        report.illegal_gates.push_back({t, k, gate, why});
      };
      if (!arch.valid_qubit(gate.a) || !arch.valid_qubit(gate.b)) {
        illegal("qubit out of range");
        continue;
      }
      if (gate.a == gate.b) {
        illegal("gate acts twice on one qubit");
        continue;
      }
      if (!arch.coupled(gate.a, gate.b)) {
        illegal("qubits are not coupled");
        continue;
      }
      if (busy[gate.a] == t || busy[gate.b] == t) {
        illegal("qubit already used in this cycle");
        continue;
      }
      busy[gate.a] = busy[gate.b] = t;
      if (gate.kind == GateKind::Swap) {
        std::swap(occ[gate.a], occ[gate.b]);
        continue;
      }
      if (occ[gate.a] < 0 || occ[gate.b] < 0) {
        illegal("CPHASE on an unoccupied qubit");
        continue;
      }
      const Edge pair(occ[gate.a], occ[gate.b]);
      if (gate.logical && *gate.logical != pair) {
        illegal("recorded logical pair does not match the live mapping");
      }
      report.executed_pairs.push_back(pair);
    }
  }
  std::map<Edge, int> count;
  for (const auto& e : report.executed_pairs) ++count[e];
  for (const auto& e : g.edges()) {
    if (!count.contains(e)) report.missing.push_back(e);
  }
  for (const auto& [e, k] : count) {
    if (k > (g.has_edge(e.u, e.v) ? 1 : 0)) report.duplicated.push_back(e);
  }
  std::vector<int> final_pi(g.num_vertices(), -1);
  for (int p = 0; p < q; ++p) {
    if (occ[p] >= 0) final_pi[occ[p]] = p;
  }
  report.final_mapping = Mapping(std::move(final_pi));
  report.ok = report.missing.empty() && report.duplicated.empty() &&
              report.illegal_gates.empty();
  return report;
}

Metrics metrics(const ScheduledCircuit& c, int n) {
  Metrics m;
  m.abstract_depth = c.depth();
  m.decomposed_depth = 3 * m.abstract_depth + 2;
  m.cphase_count = c.count(GateKind::CPhase);
  m.swap_count = c.count(GateKind::Swap);
  m.decomposed_gate_count = 3 * m.cphase_count + 3 * m.swap_count + 2 * n;
  return m;
}

namespace {

nlohmann::ordered_json pairs_json(const std::vector<Edge>& edges) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : edges) arr.push_back({e.u, e.v});
  return arr;
}

}  // namespace

std::string to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["ok"] = report.ok;
  j["executed_pairs"] = pairs_json(report.executed_pairs);
  j["missing"] = pairs_json(report.missing);
  j["duplicated"] = pairs_json(report.duplicated);
  auto illegal = nlohmann::ordered_json::array();
  for (const auto& ig : report.illegal_gates) {
    nlohmann::ordered_json item;
    item["cycle"] = ig.cycle;
    item["index"] = ig.index;
    item["gate"] = ig.gate.kind == GateKind::CPhase ? "CPHASE" : "SWAP";
    item["a"] = ig.gate.a;
    item["b"] = ig.gate.b;
    item["reason"] = ig.reason;
    illegal.push_back(std::move(item));
  }
  j["illegal_gates"] = std::move(illegal);
  j["final_mapping"] = report.final_mapping.values();
  return j.dump(1);
}

std::string to_json(const Metrics& m) {
  nlohmann::ordered_json j;
  j["abstract_depth"] = m.abstract_depth;
  j["decomposed_depth"] = m.decomposed_depth;
  j["cphase_count"] = m.cphase_count;
  j["swap_count"] = m.swap_count;
  j["decomposed_gate_count"] = m.decomposed_gate_count;
  return j.dump(1);
}

namespace {

class BruteForce {
 public:
  BruteForce(const ProblemGraph& g, const Architecture& arch)
      : g_(g), arch_(arch), q_(arch.num_qubits()) {}

  bool solvable(std::vector<int>& occ, std::uint32_t remaining, int budget) {
    if (remaining == 0) return true;
    if (budget <= 0 || lower_bound(remaining) > budget) return false;
    const std::uint64_t key = encode(occ, remaining);
    if (auto it = failed_.find(key); it != failed_.end() && it->second >= budget)
      return false;
    std::vector<Action> chosen;
    const bool ok = enumerate(occ, remaining, budget, 0, 0, chosen, false);
    if (!ok) {
      auto& slot = failed_[key];
      slot = std::max(slot, budget);
    }
    return ok;
  }

 private:
  struct Action {
    int coupling;
    bool swap;
  };

  int lower_bound(std::uint32_t remaining) const {
    std::vector<int> deg(g_.num_vertices(), 0);
    int count = 0;
    for (int e = 0; e < g_.num_edges(); ++e) {
      if (remaining >> e & 1U) {
        ++deg[g_.edges()[e].u];
        ++deg[g_.edges()[e].v];
        ++count;
      }
    }
    const int per_cycle = std::max(1, q_ / 2);
    return std::max(*std::max_element(deg.begin(), deg.end()),
                    (count + per_cycle - 1) / per_cycle);
  }

  std::uint64_t encode(const std::vector<int>& occ,
                       std::uint32_t remaining) const {
    std::uint64_t key = remaining;
    for (int p = 0; p < q_; ++p) key = key * 8 + static_cast<unsigned>(occ[p] + 1);
    return key;
  }

  // Chooses a set of disjoint gates over couplings[from..], then recurses
  // into the next cycle.
  bool enumerate(std::vector<int>& occ, std::uint32_t remaining, int budget,
                 std::size_t from, std::uint32_t busy,
                 std::vector<Action>& chosen, bool any) {
    const auto& couplings = arch_.couplings();
    if (from == couplings.size()) {
      if (!any) return false;
      std::uint32_t next = remaining;
      std::vector<int> after = occ;
      for (const auto& act : chosen) {
        const auto& c = couplings[act.coupling];
        if (act.swap) {
          std::swap(after[c.u], after[c.v]);
        } else {
          next &= ~(1U << g_.edge_index(occ[c.u], occ[c.v]));
        }
      }
      return solvable(after, next, budget - 1);
    }
    if (enumerate(occ, remaining, budget, from + 1, busy, chosen, any)) {
      return true;
    }
    const auto& c = couplings[from];
    if ((busy >> c.u & 1U) || (busy >> c.v & 1U)) return false;
    const std::uint32_t taken = busy | (1U << c.u) | (1U << c.v);
    const int a = occ[c.u], b = occ[c.v];
    if (a >= 0 && b >= 0) {
      const int e = g_.edge_index(a, b);
      if (e >= 0 && (remaining >> e & 1U)) {
        chosen.push_back({static_cast<int>(from), false});
        if (enumerate(occ, remaining, budget, from + 1, taken, chosen, true)) {
          return true;
        }
        chosen.pop_back();
      }
    }
    if (a >= 0 || b >= 0) {
      chosen.push_back({static_cast<int>(from), true});
      if (enumerate(occ, remaining, budget, from + 1, taken, chosen, true)) {
        return true;
      }
      chosen.pop_back();
    }
    return false;
  }

  const ProblemGraph& g_;
  const Architecture& arch_;
  int q_;
  std::unordered_map<std::uint64_t, int> failed_;
};

}  // namespace

std::optional<int> brute_force_optimal(const ProblemGraph& g,
                                       const Architecture& arch,
                                       int depth_cap) {
  if (arch.num_qubits() > 5 || depth_cap > 12 || depth_cap < 0 ||
      g.num_vertices() > arch.num_qubits()) {
    throw ValidationError(ErrorKind::InvalidArgument,
                          "brute force needs at most 5 qubits, depth_cap <= 12 "
                          "and a graph that fits the architecture");
  }
  if (g.num_edges() == 0) return 0;
  const int n = g.num_vertices();
  const int q = arch.num_qubits();
  const std::uint32_t all = (1U << g.num_edges()) - 1;
  BruteForce search(g, arch);
  // Every injective placement of the n logical qubits.
  std::vector<std::vector<int>> placements;
  std::vector<int> phys(q);
  for (int i = 0; i < q; ++i) phys[i] = i;
  std::vector<char> pick(q, 0);
  std::fill(pick.begin(), pick.begin() + n, 1);
  do {
    std::vector<int> subset;
    for (int i = 0; i < q; ++i) {
      if (pick[i]) subset.push_back(i);
    }
    do {
      std::vector<int> occ(q, -1);
      for (int v = 0; v < n; ++v) occ[subset[v]] = v;
      placements.push_back(std::move(occ));
    } while (std::next_permutation(subset.begin(), subset.end()));
  } while (std::prev_permutation(pick.begin(), pick.end()));

  for (int depth = 1; depth <= depth_cap; ++depth) {
    for (auto& occ : placements) {
      if (search.solvable(occ, all, depth)) return depth;
    }
  }
  return std::nullopt;
}

}  // namespace ctag
