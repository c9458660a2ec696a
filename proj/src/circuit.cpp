#include "ctag/circuit.hpp"

#include <algorithm>

namespace ctag {

int ScheduledCircuit::count(GateKind kind) const {
  int total = 0;
  for (const auto& cycle : cycles) {
    total += static_cast<int>(std::count_if(
        cycle.begin(), cycle.end(),
        [kind](const Gate& g) { return g.kind == kind; }));
  }
  return total;
}

void trim_trailing_swaps(ScheduledCircuit& circuit) {
  auto has_cphase = [](const Cycle& c) {
    return std::any_of(c.begin(), c.end(), [](const Gate& g) {
      return g.kind == GateKind::CPhase;
    });
  };
  while (!circuit.cycles.empty() && !has_cphase(circuit.cycles.back())) {
    circuit.cycles.pop_back();
  }
}

}  // namespace ctag
