#include "qcsp/grover.hpp"

#include <cmath>
#include <stdexcept>

namespace qcsp::grover {

double iteration_multiplier(double delta) {
  if (!(delta > 0.0) || delta >= 1.0) {
    throw std::invalid_argument("iteration_multiplier: delta in (0, 1)");
  }
  return 1.582 * std::log(1.0 / delta);
}

Count iterations(int n, double delta) {
  if (n < 1) throw std::invalid_argument("iterations: n must be >= 1");
  long double its = static_cast<long double>(iteration_multiplier(delta)) *
                    std::exp2(static_cast<long double>(n) / 2.0L);
  return Count::from_double(static_cast<double>(std::ceil(its)));
}

OracleCost oracle_cost(int k, Count m, OracleCountVariant variant) {
  if (k < 2) throw std::invalid_argument("oracle_cost: k must be >= 2");
  if (m < Count{1}) throw std::invalid_argument("oracle_cost: m must be >= 1");
  OracleCost oc;
  oc.fanout = gadgets::fanout_cost(0, false);  // uncontrolled: Clifford only

  Resources one_clause =
      gadgets::mct_cost(k, gadgets::MctKind::kMeasured, /*with_uncompute=*/true);
  oc.clauses = one_clause.fanned(m);
  if (variant == OracleCountVariant::kClosedForm) {
    // m(2k+1) - 3 for clauses + AND together; keep the AND row's m-1 and give
    // the clause row the remainder, preserving the published aggregate.
    Count aggregate = m * Count{2 * static_cast<std::uint64_t>(k) + 1} - Count{3};
    Count and_part = m - Count{1};
    oc.clauses.toffoli = aggregate - and_part;
  }

  // AND of all m clause bits: MCT over m controls, compute-only.
  if (m > Count{static_cast<std::uint64_t>(1) << 62}) {
    throw std::invalid_argument("oracle_cost: m out of supported range");
  }
  std::uint64_t m64 = m.to_u64();
  if (m64 >= 2) {
    std::uint64_t lg = 0;
    while ((static_cast<std::uint64_t>(1) << lg) < m64) ++lg;
    oc.global_and =
        Resources{Count{2 * lg - 1}, m - Count{1}, Count{}, m - Count{2}};
  }
  return oc;
}

Resources diffusion_cost(int n) {
  return gadgets::mct_cost(n, gadgets::MctKind::kMeasured);
}

Estimate estimate(int n, int k, Count m, double delta,
                  OracleCountVariant variant) {
  Estimate e;
  e.n = n;
  e.k = k;
  e.m = m;
  e.iterations = iterations(n, delta);
  e.oracle = oracle_cost(k, m, variant);
  e.diffusion = diffusion_cost(n);
  e.per_iteration = e.oracle.total().seq(e.diffusion);
  e.total = Resources{e.per_iteration.t_depth * e.iterations,
                      e.per_iteration.toffoli * e.iterations,
                      e.per_iteration.t_count * e.iterations,
                      e.per_iteration.ancillas};
  return e;
}

}  // namespace qcsp::grover
