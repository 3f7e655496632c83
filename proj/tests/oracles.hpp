#pragma once

// Reference implementations used only by tests. Deliberately written with
// different algorithms and orders than the library so the two can disagree:
// plain index-order colouring search and full truth-table SAT evaluation.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "qcsp/instances.hpp"

namespace test_oracles {

inline bool colourable_rec(const qcsp::instances::Graph& g, int k, int v,
                           std::vector<int>& colour, int used) {
  if (v == g.n) return true;
  // Canonical colour order: first unused colour tried once.
  int cmax = std::min(k, used + 1);
  for (int c = 1; c <= cmax; ++c) {
    bool ok = true;
    for (int u = 0; u < v; ++u) {
      if (colour[static_cast<std::size_t>(u)] == c && g.adjacent(u, v)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    colour[static_cast<std::size_t>(v)] = c;
    if (colourable_rec(g, k, v + 1, colour, std::max(used, c))) return true;
    colour[static_cast<std::size_t>(v)] = 0;
  }
  return false;
}

inline bool brute_colourable(const qcsp::instances::Graph& g, int k) {
  std::vector<int> colour(static_cast<std::size_t>(g.n), 0);
  return colourable_rec(g, k, 0, colour, 0);
}

inline int brute_chromatic(const qcsp::instances::Graph& g) {
  if (g.n == 0) return 0;
  for (int k = 1; k <= g.n; ++k) {
    if (brute_colourable(g, k)) return k;
  }
  return g.n;
}

// Exhaustive satisfiability over every variable that appears in the formula
// (n_vars may be larger; absent variables cannot affect the outcome).
inline bool truth_table_sat(const qcsp::instances::CnfFormula& f) {
  std::vector<int> vars;
  std::vector<int> index(static_cast<std::size_t>(f.n_vars) + 1, -1);
  for (const auto& c : f.clauses) {
    if (c.empty()) return false;
    for (int lit : c) {
      int v = lit > 0 ? lit : -lit;
      if (index[static_cast<std::size_t>(v)] < 0) {
        index[static_cast<std::size_t>(v)] = static_cast<int>(vars.size());
        vars.push_back(v);
      }
    }
  }
  std::uint64_t total = std::uint64_t{1} << vars.size();
  for (std::uint64_t a = 0; a < total; ++a) {
    bool all = true;
    for (const auto& c : f.clauses) {
      bool sat = false;
      for (int lit : c) {
        int v = lit > 0 ? lit : -lit;
        bool val = (a >> index[static_cast<std::size_t>(v)]) & 1;
        if ((lit > 0) == val) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

}  // namespace test_oracles
