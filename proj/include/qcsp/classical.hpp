#pragma once

#include <cstdint>
#include <vector>

#include "qcsp/instances.hpp"

namespace qcsp::classical {

using instances::CnfFormula;
using instances::Graph;

// Greedy clique: scan vertices by descending degree (ties by index), keep
// each vertex adjacent to everything already kept.
std::vector<int> greedy_clique(const Graph& g);

struct SearchStats {
  std::uint64_t nodes = 0;  // every visited node, root and failed leaves included
  bool found = false;
};

struct ChromaticResult {
  int chromatic_number = 0;
  std::uint64_t nodes = 0;
  std::vector<int> colouring;  // 1-based colours, empty for n = 0
};

// Exact chromatic number: DSATUR branch-and-bound (branch vertex by maximum
// saturation, ties by degree then index; greedy clique pre-coloured; initial
// upper bound from the non-backtracking DSATUR colouring).
ChromaticResult dsatur_chromatic(const Graph& g);

// Decision search for a proper k-colouring, colours restricted to the prefix
// 1..min(used+1, k). Candidate colours present in the vertex's neighbourhood
// are skipped without descending.
SearchStats dsatur_colourable(const Graph& g, int k);

// Same tree policy, but every candidate colour becomes a child node; the
// conflict with the neighbourhood is only detected at the child (the form of
// the search a backtracking walk explores, where the predicate is evaluated
// at each node).
SearchStats dsatur_colourable_simplified(const Graph& g, int k);

// DPLL-free pure backtracking over variables in a static order (descending
// occurrence count, ties by variable index), value true tried first. A clause
// is checked at the moment its last variable (in the static order) is
// assigned. Stops at the first satisfying assignment.
SearchStats sat_backtrack(const CnfFormula& f);

bool proper_colouring(const Graph& g, const std::vector<int>& colour);

}  // namespace qcsp::classical
