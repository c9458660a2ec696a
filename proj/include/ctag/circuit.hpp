#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctag/graph.hpp"

namespace ctag {

enum class GateKind { CPhase, Swap };

/// A two-qubit gate on physical qubits a and b.
struct Gate {
  GateKind kind = GateKind::CPhase;
  int a = 0;
  int b = 0;
  /// Logical pair a CPHASE was emitted for, when known.
  std::optional<Edge> logical;

  static Gate cphase(int a, int b, std::optional<Edge> logical = {}) {
    return {GateKind::CPhase, a, b, logical};
  }
  static Gate swap(int a, int b) { return {GateKind::Swap, a, b, {}}; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

using Cycle = std::vector<Gate>;

/**
 * Cycle-by-cycle schedule. Gates inside one cycle touch disjoint physical
 * qubits and sit on coupling edges of the target architecture; `init` is
 * the logical-to-physical mapping before cycle 0.
 */
struct ScheduledCircuit {
  std::vector<Cycle> cycles;
  Mapping init;
  std::string arch_name;
  int num_qubits = 0;

  [[nodiscard]] int depth() const noexcept {
    return static_cast<int>(cycles.size());
  }
  [[nodiscard]] int count(GateKind kind) const;

  friend bool operator==(const ScheduledCircuit&,
                         const ScheduledCircuit&) = default;
};

/// Removes trailing cycles that contain no CPHASE.
void trim_trailing_swaps(ScheduledCircuit& circuit);

}  // namespace ctag
