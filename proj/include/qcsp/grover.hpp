#pragma once

#include "qcsp/gadgets.hpp"
#include "qcsp/resources.hpp"

namespace qcsp::grover {

// Iterations guaranteeing failure probability <= delta on any number of
// marked items: ceil(1.582 * ln(1/delta) * 2^(n/2)).
Count iterations(int n, double delta = 0.1);
double iteration_multiplier(double delta = 0.1);  // 1.582 * ln(1/delta)

// Two ways to count the clause-check Toffolis. The constructive count charges
// each clause MCT at the measured rate with uncompute, 2(k-1) per clause plus
// the m-ary AND tree, total m(2k-2) + (m-1). The closed-form variant uses the
// aggregate m(2k+1) - 3. Depths agree; only counts differ.
enum class OracleCountVariant { kConstructive, kClosedForm };

// Phase oracle for a k-SAT formula on n variables with m clauses: fan-out of
// the variables to per-clause copies (uncontrolled, free), all clause MCTs in
// parallel (computed and uncomputed), and the AND of all clause bits
// (compute-only; its cleanup is measurement-assisted).
struct OracleCost {
  Resources fanout;
  Resources clauses;
  Resources global_and;
  Resources total() const { return seq_all({fanout, clauses, global_and}); }
};

OracleCost oracle_cost(int k, Count m,
                       OracleCountVariant variant = OracleCountVariant::kConstructive);

// Diffusion: MCT over the n input bits, compute-only.
Resources diffusion_cost(int n);

struct Estimate {
  int n = 0;
  int k = 0;
  Count m;
  Count iterations;
  OracleCost oracle;
  Resources diffusion;
  Resources per_iteration;
  Resources total;
};

Estimate estimate(int n, int k, Count m, double delta = 0.1,
                  OracleCountVariant variant = OracleCountVariant::kConstructive);

}  // namespace qcsp::grover
