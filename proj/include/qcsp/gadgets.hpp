#pragma once

#include <string>

#include "qcsp/resources.hpp"

namespace qcsp::gadgets {

// Tunable gadget constants. Defaults are compiled in; a versioned key=value
// config file can override individual entries (see data/gadget_costs.conf).
struct GadgetTable {
  int version = 1;

  // Out-of-place carry-lookahead adder on b-bit inputs.
  // depth(1) = 1; depth(b) = floor(log2 b) + max(0, floor(log2(b/3))) + 4,
  // anchored at depth(10) = 8. count(1) = 1; count(b) = 5b - 6.
  double adder_depth_offset = 4.0;
  double adder_count_slope = 5.0;
  double adder_count_offset = -6.0;

  // In-place comparator from the same carry-lookahead family: the carry chain
  // is computed, the flag extracted; depth follows the adder family.
  double comparator_count_slope = 2.0;
  double comparator_count_offset = 1.0;

  // Fixed-width increment circuit (carry-save style): 38 Toffolis at
  // Toffoli-depth 14, independent of the (small) register width.
  int increment_toffoli = 38;
  int increment_depth = 14;

  // Rotation synthesis: T-count ~= ceil(synthesis_slope * log2(1/eps) +
  // synthesis_offset), sequential (T-depth = T-count).
  double synthesis_slope = 1.15;
  double synthesis_offset = 9.2;

  static const GadgetTable& defaults();
};

// Loads overrides from a key=value file ("#" comments). Unknown keys are an
// error; a "version" key must be present and match a supported version.
GadgetTable load_gadget_table(const std::string& path);

// Multi-controlled Toffoli over c controls.
//   kMeasured: compute-only c-1 Toffolis (ancilla cleanup deferred to a
//     measurement-assisted step), depth 2*ceil(log2 c) - 1.
//   kCoherent: 2c-3 Toffolis, same depth; internal ancillas are uncomputed
//     unitarily inside the gadget (no measurement available mid-circuit).
// with_uncompute doubles both figures (re-running the gadget to restore the
// target/ancillas). extra_controls widens c before costing, for gates that
// acquire an additional global control.
enum class MctKind { kMeasured, kCoherent };
Resources mct_cost(int controls, MctKind kind, bool with_uncompute = false,
                   int extra_controls = 0);

// Fan-out of `bits` source bits to any number of copies, one direction.
// Uncontrolled fan-out is CNOT-only (free); a controlled fan-out costs one
// Toffoli per source bit at depth 1 (copies then propagate via CNOTs).
Resources fanout_cost(int bits, bool controlled);

Resources adder_cost(int bits, const GadgetTable& g = GadgetTable::defaults());

Resources comparator_cost(int bits,
                          const GadgetTable& g = GadgetTable::defaults());

// Controlled swap of two b-bit registers. With the control on a dedicated
// ancilla flag the middle gate of each bit-swap is one Toffoli (depth 3
// including the CNOT shells); demanding an extra control raises it to 3
// Toffolis per bit.
Resources cswap_cost(int bits, bool extra_control = false);

// comparator + flag-controlled swap + comparator inverse. The flag ancilla
// cannot stay live, so the comparator runs twice.
Resources compare_swap_cost(int key_bits, int payload_bits,
                            const GadgetTable& g = GadgetTable::defaults());

Resources increment_cost(const GadgetTable& g = GadgetTable::defaults());

// T-count/T-depth of one Z-rotation synthesized to accuracy eps. A controlled
// rotation costs +8 T / +2 depth on top.
Resources rotation_cost(double eps, bool controlled,
                        const GadgetTable& g = GadgetTable::defaults());

// Controlled Hadamard via T H T^dag conjugation: 2 T gates, T-depth 2.
Resources controlled_h_cost();

// Controlled H'' primitive used by the walk diffusion: a controlled rotation,
// a controlled T, and two controlled Hadamards. Relative to the uncontrolled
// rotation base this adds +8 T-depth and +20 T-count.
Resources controlled_hpp_cost(double eps,
                              const GadgetTable& g = GadgetTable::defaults());

}  // namespace qcsp::gadgets
