#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctag/circuit.hpp"
#include "ctag/graph.hpp"

namespace ctag {

struct IllegalGate {
  int cycle = 0;  // -1 for problems with the initial mapping
  int index = 0;  // position inside the cycle
  Gate gate;
  std::string reason;
};

struct VerificationReport {
  bool ok = false;
  /// Every CPHASE pair in execution order (a multiset).
  std::vector<Edge> executed_pairs;
  std::vector<Edge> missing;
  /// Pairs executed more often than required (non-edges at least once).
  std::vector<Edge> duplicated;
  std::vector<IllegalGate> illegal_gates;
  Mapping final_mapping;
};

/// Replays the circuit and checks it against g on arch. Never throws.
VerificationReport verify(const ScheduledCircuit& c, const ProblemGraph& g,
                          const Architecture& arch);

struct Metrics {
  int abstract_depth = 0;
  int decomposed_depth = 0;
  int cphase_count = 0;
  int swap_count = 0;
  int decomposed_gate_count = 0;
};

/// CPHASE and SWAP each decompose into three one-cycle gates; the H and
/// RX layers add two cycles and 2n single-qubit gates.
Metrics metrics(const ScheduledCircuit& c, int n);

std::string to_json(const VerificationReport& report);
std::string to_json(const Metrics& m);

/**
 * Minimum abstract depth over all initial mappings and gate choices, by
 * iterative deepening. nullopt when the optimum exceeds depth_cap.
 * Requires arch.num_qubits() <= 5 and depth_cap <= 12.
 */
std::optional<int> brute_force_optimal(const ProblemGraph& g,
                                       const Architecture& arch,
                                       int depth_cap);

}  // namespace ctag
