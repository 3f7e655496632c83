#pragma once

#include <string>
#include <vector>

#include "qcsp/gadgets.hpp"
#include "qcsp/resources.hpp"

namespace qcsp::walk {

enum class Problem { kColouring, kSat };

// Amplitude-threshold phase estimation schedule: K independent repetitions,
// accept when at least L report the marked outcome. beta is the per-step
// precision budget (walk length multiplier 1/beta); the unmarked acceptance
// probability per repetition is 2*sqrt(beta), the marked one 1/2. K and L are
// the smallest values whose exact binomial tails both stay within delta.
struct PhaseEstimationParams {
  int repetitions = 0;   // K
  int threshold = 0;     // L
  double beta = 0.0;
  double p_marked = 0.5;
  double p_unmarked = 0.0;
  double tail_marked = 0.0;    // P[accepts < L | marked]
  double tail_unmarked = 0.0;  // P[accepts >= L | unmarked]
};

PhaseEstimationParams pe_params(double delta = 0.1, double beta = 1.0 / 32.0);

// Walk lengths for a backtracking tree of T nodes over n levels. Each
// repetition walks ceil((1/beta) * sqrt(T*n)) steps; repetitions run on
// parallel copies, so depth follows sequential_steps while counts follow
// total_steps = K * sequential_steps.
struct WalkCounts {
  Count sequential_steps;
  Count total_steps;
};

WalkCounts walk_counts(double tree_size, int n,
                       const PhaseEstimationParams& pe);

// Tree explored by the quantum walk, from the classical median fit
// 2^(slope*n + intercept): the colouring walk runs the simplified search
// (penalty factor 4); the SAT walk carries fictitious values (factor 3/2).
double quantum_tree_size(Problem problem, int n, double fit_slope,
                         double fit_intercept);

// The two reflections of one walk step. kWalkB differs from kWalkA only in
// the diffusion row: the root-case machinery (ancilla rotation synthesis,
// controlled diffusion, phase fix) is absent.
enum class StepOperator { kWalkA, kWalkB };

struct StepRow {
  std::string name;
  Resources cost;
};

struct StepBreakdown {
  std::vector<StepRow> rows;
  Resources total;  // seq of conversion/fanout, par of computes, diffusion, par of uncomputes, other
  int n = 0;
  int k = 0;
  Count m;  // SAT clause count; 0 for colouring
};

// Reflection cost for graph colouring: n vertices, colours 1..k (register
// width ceil(log2(k+1))), tree_size sets the rotation-synthesis tolerance
// eps = 1/(64*sqrt(tree_size*n)).
StepBreakdown step_cost_colouring(
    int n, int k, double tree_size, StepOperator op,
    const gadgets::GadgetTable& g = gadgets::GadgetTable::defaults());

// Reflection cost for k-SAT with m clauses (ternary cell encoding, 2 bits).
StepBreakdown step_cost_sat(
    int n, int k, Count m, double tree_size, StepOperator op,
    const gadgets::GadgetTable& g = gadgets::GadgetTable::defaults());

struct BacktrackingEstimate {
  Problem problem = Problem::kColouring;
  int n = 0;
  int k = 0;
  Count m;
  double tree_size = 0.0;
  PhaseEstimationParams pe;
  WalkCounts counts;
  StepBreakdown walk_a;
  StepBreakdown walk_b;
  Resources per_step;  // walk_a then walk_b
  Resources total;     // depth from sequential steps, counts from total steps
};

BacktrackingEstimate backtracking_estimate(
    Problem problem, int n, int k, Count m, double fit_slope,
    double fit_intercept, double delta = 0.1,
    const gadgets::GadgetTable& g = gadgets::GadgetTable::defaults());

// Per-classical-node depth overhead of the walk: per-step T-depth times the
// 32*sqrt(n) step blow-up. Nondecreasing in n for fixed k.
double step_depth_overhead(Problem problem, int n, int k, Count m,
                           double tree_size);

}  // namespace qcsp::walk
