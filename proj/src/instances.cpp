#include "qcsp/instances.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qcsp::instances {

namespace {

[[noreturn]] void parse_error(const std::string& path, int line,
                              const std::string& what) {
  throw std::runtime_error(path + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  Graph g;
  g.n = n;
  std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  g.adj.assign(static_cast<std::size_t>(n),
               std::vector<std::uint64_t>(words, 0));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw std::invalid_argument("Graph: edge endpoint out of range");
    }
    g.adj[u][static_cast<std::size_t>(v) >> 6] |= 1ULL << (v & 63);
    g.adj[v][static_cast<std::size_t>(u) >> 6] |= 1ULL << (u & 63);
  }
  g.edges = std::move(edges);
  return g;
}

int Graph::degree(int v) const {
  int d = 0;
  for (std::uint64_t w : adj[v]) d += std::popcount(w);
  return d;
}

Graph gen_gnp(int n, double p, CounterRng& rng) {
  if (n < 0) throw std::invalid_argument("gen_gnp: negative n");
  if (!(p >= 0.0) || p > 1.0) {
    throw std::invalid_argument("gen_gnp: p must be in [0, 1]");
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.next_double() < p) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

CnfFormula gen_ksat(int n, int k, std::uint64_t m, CounterRng& rng) {
  if (n < 1) throw std::invalid_argument("gen_ksat: n must be >= 1");
  if (k < 1 || k > n) {
    throw std::invalid_argument("gen_ksat: need 1 <= k <= n");
  }
  CnfFormula f;
  f.n_vars = n;
  f.k = k;
  f.clauses.reserve(m);
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  for (std::uint64_t c = 0; c < m; ++c) {
    // Partial Fisher-Yates: the first k slots become the clause variables.
    std::vector<int> clause(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
      std::uint64_t r = j + rng.below(static_cast<std::uint64_t>(n - j));
      std::swap(pool[static_cast<std::size_t>(j)],
                pool[static_cast<std::size_t>(r)]);
      int lit = pool[static_cast<std::size_t>(j)];
      clause[static_cast<std::size_t>(j)] =
          (rng.next_u64() & 1) ? lit : -lit;
    }
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

double chromatic_estimate(int n) {
  if (n < 4) throw std::invalid_argument("chromatic_estimate: n must be >= 4");
  double lg = std::log2(static_cast<double>(n));
  double denom = 2.0 * lg - 2.0 * std::log2(lg) - 1.0;
  return static_cast<double>(n) / denom;
}

int colours_for(int n) {
  return static_cast<int>(std::ceil(chromatic_estimate(n)));
}

double ksat_threshold(int k) {
  // Reported threshold estimates for small k.
  static constexpr double kTable[] = {
      4.27,    9.93,    21.12,   43.37,   87.79,    176.54,  354.01,
      708.92,  1418.71, 2838.28, 5677.41, 11355.67, 22712.20};
  if (k < 3) throw std::invalid_argument("ksat_threshold: k must be >= 3");
  if (k <= 15) return kTable[k - 3];
  return std::exp2(static_cast<double>(k)) * std::numbers::ln2 -
         (std::numbers::ln2 + 0.25);
}

std::uint64_t clauses_at_threshold(int k, int n) {
  if (n < 1) throw std::invalid_argument("clauses_at_threshold: n must be >= 1");
  double m = std::ceil(ksat_threshold(k) * static_cast<double>(n));
  return static_cast<std::uint64_t>(m);
}

void write_dimacs_cnf(const std::string& path, const CnfFormula& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "p cnf " << f.n_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (int lit : c) out << lit << ' ';
    out << "0\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

CnfFormula read_dimacs_cnf(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  CnfFormula f;
  bool header = false;
  std::size_t expected = 0;
  std::vector<int> current;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ss(line);
    if (!header) {
      std::string p, fmt;
      long long nv = -1, nc = -1;
      if (!(ss >> p >> fmt >> nv >> nc) || p != "p" || fmt != "cnf" ||
          nv < 0 || nc < 0) {
        parse_error(path, lineno, "expected 'p cnf <vars> <clauses>'");
      }
      f.n_vars = static_cast<int>(nv);
      expected = static_cast<std::size_t>(nc);
      header = true;
      continue;
    }
    long long lit;
    while (ss >> lit) {
      if (lit == 0) {
        if (current.empty()) parse_error(path, lineno, "empty clause");
        f.clauses.push_back(current);
        current.clear();
      } else {
        if (std::llabs(lit) > f.n_vars) {
          parse_error(path, lineno, "literal out of range: " +
                                        std::to_string(lit));
        }
        current.push_back(static_cast<int>(lit));
      }
    }
    if (!ss.eof()) parse_error(path, lineno, "expected integer literal");
  }
  if (!header) throw std::runtime_error(path + ": missing 'p cnf' header");
  if (!current.empty()) {
    parse_error(path, lineno, "clause not terminated by 0");
  }
  if (f.clauses.size() != expected) {
    throw std::runtime_error(
        path + ": clause count mismatch: header says " +
        std::to_string(expected) + ", found " +
        std::to_string(f.clauses.size()));
  }
  std::size_t k = f.clauses.empty() ? 0 : f.clauses.front().size();
  for (const auto& c : f.clauses) {
    if (c.size() != k) {
      k = 0;
      break;
    }
  }
  f.k = static_cast<int>(k);
  return f;
}

void write_dimacs_graph(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "p edge " << g.n << ' ' << g.edges.size() << '\n';
  for (auto [u, v] : g.edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

Graph read_dimacs_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::pair<int, int>> edges;
  int n = -1;
  std::size_t expected = 0;
  bool dimacs = false, saw_any = false;
  int max_vertex = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ss(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      long long nv = -1, ne = -1;
      if (!(ss >> p >> fmt >> nv >> ne) || fmt != "edge" || nv < 0 || ne < 0) {
        parse_error(path, lineno, "expected 'p edge <vertices> <edges>'");
      }
      n = static_cast<int>(nv);
      expected = static_cast<std::size_t>(ne);
      dimacs = true;
      continue;
    }
    if (line[0] == 'e') {
      if (!dimacs) parse_error(path, lineno, "'e' line before 'p edge' header");
      std::string e;
      long long u = 0, v = 0;
      if (!(ss >> e >> u >> v) || u < 1 || v < 1) {
        parse_error(path, lineno, "expected 'e <u> <v>' with 1-based vertices");
      }
      if (u > n || v > n) parse_error(path, lineno, "vertex out of range");
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
      saw_any = true;
      continue;
    }
    // Bare edge list: "u v" per line, 0-based.
    long long u = 0, v = 0;
    if (!(ss >> u >> v) || u < 0 || v < 0) {
      parse_error(path, lineno, "expected edge 'u v'");
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_vertex = std::max({max_vertex, static_cast<int>(u),
                           static_cast<int>(v)});
    saw_any = true;
  }
  if (dimacs) {
    if (edges.size() != expected) {
      throw std::runtime_error(path + ": edge count mismatch: header says " +
                               std::to_string(expected) + ", found " +
                               std::to_string(edges.size()));
    }
    return Graph::from_edges(n, std::move(edges));
  }
  if (!saw_any) throw std::runtime_error(path + ": no edges or header found");
  return Graph::from_edges(max_vertex + 1, std::move(edges));
}

}  // namespace qcsp::instances
