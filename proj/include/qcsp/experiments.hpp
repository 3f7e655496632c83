#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qcsp/classical.hpp"

namespace qcsp::experiments {

// One benchmark observation. CSV schema (in this order):
// kind,n,k_or_p,m,seed,nodes,found,wall_ms
// kind: dsatur | dsatur_simplified | ksat
// k_or_p: clause width for ksat, edge probability for graphs
// m: clause count (ksat) or edge count (graphs)
// seed: base seed of the run; instance stream is (n << 32) | index
// wall_ms is informational only and never asserted against.
struct ExperimentRow {
  std::string kind;
  int n = 0;
  double k_or_p = 0.0;
  std::uint64_t m = 0;
  std::uint64_t seed = 0;
  std::uint64_t nodes = 0;
  bool found = false;
  double wall_ms = 0.0;
};

struct ExperimentConfig {
  std::vector<int> ns;
  int instances = 0;
  std::uint64_t seed = 1;
  int threads = 0;  // 0: hardware concurrency
};

// For each G(n, 1/2) instance: exact chromatic number, then the refutation
// of (chi - 1)-colourability (row "dsatur"). with_simplified additionally
// refutes the same k without neighbour-colour pruning (row
// "dsatur_simplified"); the pair shares one tree root, so the node ratio is
// the pruning penalty.
std::vector<ExperimentRow> run_dsatur_experiment(const ExperimentConfig& cfg,
                                                 double p = 0.5,
                                                 bool with_simplified = false);

// Random k-SAT at the threshold clause count m = ceil(alpha_k n).
std::vector<ExperimentRow> run_sat_experiment(const ExperimentConfig& cfg,
                                              int k);

void write_csv(const std::string& path,
               const std::vector<ExperimentRow>& rows);
std::vector<ExperimentRow> read_csv(const std::string& path);

// Median of nodes per n for the selected kind (even sizes: mean of middles).
std::vector<std::pair<int, double>> medians_by_n(
    const std::vector<ExperimentRow>& rows, const std::string& kind);

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  int points = 0;
};

// Least squares of log2(median) against n.
FitResult fit_scaling(const std::vector<std::pair<int, double>>& medians);

}  // namespace qcsp::experiments
