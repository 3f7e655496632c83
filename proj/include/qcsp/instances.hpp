#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qcsp/rng.hpp"

namespace qcsp::instances {

// Simple undirected graph with packed adjacency rows for fast neighbourhood
// scans in the solvers.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<std::uint64_t>> adj;  // n rows of ceil(n/64) words

  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

  bool adjacent(int u, int v) const {
    return (adj[u][static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
  }
  int degree(int v) const;
};

// CNF formula; clauses hold signed 1-based DIMACS literals.
struct CnfFormula {
  int n_vars = 0;
  int k = 0;  // literals per clause (0 when mixed, e.g. after file load)
  std::vector<std::vector<int>> clauses;
};

// Erdos-Renyi G(n, p): each pair independently an edge.
Graph gen_gnp(int n, double p, CounterRng& rng);

// Random k-SAT: each clause picks k distinct variables (partial Fisher-Yates)
// and independent fair polarity coins.
CnfFormula gen_ksat(int n, int k, std::uint64_t m, CounterRng& rng);

// Estimated chromatic number of G(n, 1/2):
// n / (2 log2 n - 2 log2 log2 n - 1). Defined for n >= 4 (denominator
// positive; equals exactly 1 at n = 4).
double chromatic_estimate(int n);

// Number of colours the quantum colouring pipeline budgets for G(n, 1/2).
int colours_for(int n);

// Satisfiability threshold ratio alpha_k for random k-SAT. Tabulated for
// k = 3..15; for k > 15, the midpoint of the rigorous bracket
// [2^k ln 2 - (3/2) ln 2, 2^k ln 2 - (1 + ln 2)/2], which collapses to
// 2^k ln 2 - (ln 2 + 1/4) = 2^k ln 2 - 0.9431472.
double ksat_threshold(int k);

// Clause count at the threshold: ceil(alpha_k * n).
std::uint64_t clauses_at_threshold(int k, int n);

// DIMACS CNF round-trip. Parse errors throw std::runtime_error prefixed
// "path:line:".
void write_dimacs_cnf(const std::string& path, const CnfFormula& f);
CnfFormula read_dimacs_cnf(const std::string& path);

// DIMACS colouring format ("p edge n m", "e u v", 1-based). The reader also
// accepts bare whitespace edge lists (auto-detected).
void write_dimacs_graph(const std::string& path, const Graph& g);
Graph read_dimacs_graph(const std::string& path);

}  // namespace qcsp::instances
