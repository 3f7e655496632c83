#pragma once

#include <vector>

#include "qcsp/count128.hpp"

namespace qcsp::factory {

enum class FactoryKind {
  kToffoli,  // distance-halving head consuming distilled T states
  kT,        // plain 15-to-1 distillation stack
};

enum class Layout {
  kHalved,    // interleaved layout, half the footprint per round
  kStandard,  // full-footprint rounds
};

struct RoundSpec {
  int distance = 0;
  std::uint64_t qubits = 0;  // physical qubits for this round's factories
  std::uint64_t cycles = 0;  // surface-code cycles per output batch
  double tolerance = 0.0;    // output error budget this round must meet
};

struct FactoryReport {
  FactoryKind kind = FactoryKind::kToffoli;
  Layout layout = Layout::kHalved;
  double gate_error = 0.0;
  double n_states = 0.0;  // magic states the algorithm consumes
  std::vector<RoundSpec> rounds;
  Count space_time;  // sum over rounds of qubits * cycles
};

// Sizes a distillation pipeline whose total output error stays below
// 1/3 per run across n_states magic states at physical gate error
// gate_error. Throws std::invalid_argument for gate_error >= 1/100 (the
// distillation inequalities become unsatisfiable) or n_states < 1.
FactoryReport design_factory(FactoryKind kind, double n_states,
                             double gate_error,
                             Layout layout = Layout::kHalved);

// Physical qubits needed to keep magic-state production abreast of an
// algorithm running for t_algo_cycles surface-code cycles.
double factory_qubits(const FactoryReport& report, double t_algo_cycles);

}  // namespace qcsp::factory
