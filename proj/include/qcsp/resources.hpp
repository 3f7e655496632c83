#pragma once

#include <initializer_list>

#include "qcsp/count128.hpp"

namespace qcsp {

// Fault-tolerant cost bundle. t_depth counts T stages (a Toffoli layer
// contributes 1 via the usual T-depth-1 construction; each sequential raw-T
// stage from rotation synthesis contributes 1). toffoli and t_count are kept
// separate; magic-state demand is their sum (one injected state per unit).
// ancillas is workspace high-water: sequential composition reuses space
// (max), parallel composition sums it.
struct Resources {
  Count t_depth{};
  Count toffoli{};
  Count t_count{};
  Count ancillas{};

  Count total_count() const { return toffoli + t_count; }

  // this, then other.
  Resources seq(const Resources& o) const {
    return Resources{t_depth + o.t_depth, toffoli + o.toffoli,
                     t_count + o.t_count, max(ancillas, o.ancillas)};
  }

  // this alongside other (disjoint qubits).
  Resources par(const Resources& o) const {
    return Resources{max(t_depth, o.t_depth), toffoli + o.toffoli,
                     t_count + o.t_count, ancillas + o.ancillas};
  }

  Resources times(Count reps) const {
    return Resources{t_depth * reps, toffoli * reps, t_count * reps, ancillas};
  }

  // Same circuit on many disjoint copies at once.
  Resources fanned(Count copies) const {
    return Resources{t_depth, toffoli * copies, t_count * copies,
                     ancillas * copies};
  }

  friend bool operator==(const Resources&, const Resources&) = default;
};

inline Resources seq_all(std::initializer_list<Resources> rs) {
  Resources acc{};
  for (const auto& r : rs) acc = acc.seq(r);
  return acc;
}

inline Resources par_all(std::initializer_list<Resources> rs) {
  Resources acc{};
  for (const auto& r : rs) acc = acc.par(r);
  return acc;
}

}  // namespace qcsp
