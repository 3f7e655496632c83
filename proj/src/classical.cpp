#include "qcsp/classical.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace qcsp::classical {

namespace {

constexpr int kMaxColours = 64;  // saturation masks are single words

// Shared DSATUR machinery. Colours are 1-based; nbr_cc[v][c] counts coloured
// neighbours of v holding colour c, so saturation survives unassignment.
struct DsaturState {
  const Graph& g;
  int n;
  std::vector<int> colour;          // 0 = uncoloured
  std::vector<std::uint64_t> sat_mask;
  std::vector<int> sat_count;
  std::vector<int> degree;
  std::vector<std::uint16_t> nbr_cc;  // n * (kMaxColours + 1)
  int coloured = 0;
  int used = 0;  // highest colour index in use along the current path
  std::uint64_t nodes = 0;

  explicit DsaturState(const Graph& graph)
      : g(graph),
        n(graph.n),
        colour(static_cast<std::size_t>(graph.n), 0),
        sat_mask(static_cast<std::size_t>(graph.n), 0),
        sat_count(static_cast<std::size_t>(graph.n), 0),
        degree(static_cast<std::size_t>(graph.n), 0),
        nbr_cc(static_cast<std::size_t>(graph.n) * (kMaxColours + 1), 0) {
    for (int v = 0; v < n; ++v) degree[static_cast<std::size_t>(v)] = g.degree(v);
  }

  std::uint16_t& cc(int v, int c) {
    return nbr_cc[static_cast<std::size_t>(v) * (kMaxColours + 1) +
                  static_cast<std::size_t>(c)];
  }

  template <typename F>
  void for_neighbours(int v, F&& f) {
    const auto& row = g.adj[static_cast<std::size_t>(v)];
    for (std::size_t w = 0; w < row.size(); ++w) {
      std::uint64_t bits = row[w];
      while (bits) {
        int u = static_cast<int>(w * 64) + std::countr_zero(bits);
        bits &= bits - 1;
        f(u);
      }
    }
  }

  void assign(int v, int c) {
    colour[static_cast<std::size_t>(v)] = c;
    ++coloured;
    for_neighbours(v, [&](int u) {
      if (++cc(u, c) == 1) {
        sat_mask[static_cast<std::size_t>(u)] |= 1ULL << (c - 1);
        ++sat_count[static_cast<std::size_t>(u)];
      }
    });
  }

  void unassign(int v, int c) {
    colour[static_cast<std::size_t>(v)] = 0;
    --coloured;
    for_neighbours(v, [&](int u) {
      if (--cc(u, c) == 0) {
        sat_mask[static_cast<std::size_t>(u)] &= ~(1ULL << (c - 1));
        --sat_count[static_cast<std::size_t>(u)];
      }
    });
  }

  // Max saturation, ties by degree, then lowest index.
  int select() const {
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (colour[static_cast<std::size_t>(v)] != 0) continue;
      int s = sat_count[static_cast<std::size_t>(v)];
      int d = degree[static_cast<std::size_t>(v)];
      if (s > best_sat || (s == best_sat && d > best_deg)) {
        best = v;
        best_sat = s;
        best_deg = d;
      }
    }
    return best;
  }

  bool conflicts(int v, int c) { return cc(v, c) != 0; }

  // Symmetry breaking: a maximal greedy clique takes colours 1..q up front.
  // Valid for any k >= q since colours of any proper colouring can be
  // relabelled to match.
  int precolour_clique() {
    auto clique = greedy_clique(g);
    int c = 0;
    for (int v : clique) {
      ++c;
      assign(v, c);
      used = std::max(used, c);
    }
    return c;
  }
};

// Non-backtracking DSATUR sweep; returns colours used (upper bound) and the
// colouring itself.
int greedy_colouring(const Graph& g, std::vector<int>& out) {
  DsaturState st(g);
  int used = 0;
  for (int i = 0; i < st.n; ++i) {
    int v = st.select();
    int c = 1;
    while (st.conflicts(v, c)) ++c;
    if (c > kMaxColours) throw std::runtime_error("greedy_colouring: > 64 colours");
    st.assign(v, c);
    used = std::max(used, c);
  }
  out = st.colour;
  return used;
}

struct ChromaticSearch {
  DsaturState st;
  int best;
  std::vector<int> best_colouring;

  explicit ChromaticSearch(const Graph& g) : st(g), best(0) {}

  void rec() {
    ++st.nodes;
    if (st.coloured == st.n) {
      if (st.used < best) {
        best = st.used;
        best_colouring = st.colour;
      }
      return;
    }
    int v = st.select();
    int cmax = std::min(st.used + 1, best - 1);
    for (int c = 1; c <= cmax; ++c) {
      if (st.conflicts(v, c)) continue;
      int prev_used = st.used;
      st.used = std::max(st.used, c);
      st.assign(v, c);
      rec();
      st.unassign(v, c);
      st.used = prev_used;
      if (best <= prev_used) return;  // bound already met by a clique subtree
    }
  }
};

struct DecisionSearch {
  DsaturState st;
  int k;
  bool simplified;

  DecisionSearch(const Graph& g, int k_, bool simpl)
      : st(g), k(k_), simplified(simpl) {}

  bool rec(bool conflict) {
    ++st.nodes;
    if (conflict) return false;
    if (st.coloured == st.n) return true;
    int v = st.select();
    int cmax = std::min(st.used + 1, k);
    for (int c = 1; c <= cmax; ++c) {
      bool child_conflict = st.conflicts(v, c);
      if (!simplified && child_conflict) continue;  // pruned, never visited
      int prev_used = st.used;
      st.used = std::max(st.used, c);
      st.assign(v, c);
      bool ok = rec(simplified && child_conflict);
      st.unassign(v, c);
      st.used = prev_used;
      if (ok) return true;
    }
    return false;
  }
};

}  // namespace

std::vector<int> greedy_clique(const Graph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> deg(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
  });
  std::vector<int> clique;
  for (int v : order) {
    bool ok = true;
    for (int u : clique) {
      if (!g.adjacent(u, v)) {
        ok = false;
        break;
      }
    }
    if (ok) clique.push_back(v);
  }
  return clique;
}

ChromaticResult dsatur_chromatic(const Graph& g) {
  if (g.n == 0) return ChromaticResult{0, 1, {}};
  std::vector<int> greedy;
  int ub = greedy_colouring(g, greedy);
  ChromaticSearch search(g);
  search.best = ub;
  search.best_colouring = greedy;
  int q = search.st.precolour_clique();
  if (q == ub) {
    // clique size meets the greedy bound: chromatic number is settled
    return ChromaticResult{ub, 1, greedy};
  }
  search.rec();
  return ChromaticResult{search.best, search.st.nodes, search.best_colouring};
}

SearchStats dsatur_colourable(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("dsatur_colourable: negative k");
  if (k > kMaxColours) throw std::invalid_argument("dsatur_colourable: k > 64");
  if (g.n == 0) return SearchStats{1, true};
  if (k == 0) return SearchStats{1, false};
  DecisionSearch search(g, k, /*simpl=*/false);
  if (search.st.precolour_clique() > k) return SearchStats{1, false};
  bool found = search.rec(false);
  return SearchStats{search.st.nodes, found};
}

SearchStats dsatur_colourable_simplified(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("dsatur_colourable_simplified: negative k");
  if (k > kMaxColours) throw std::invalid_argument("dsatur_colourable_simplified: k > 64");
  if (g.n == 0) return SearchStats{1, true};
  if (k == 0) return SearchStats{1, false};
  DecisionSearch search(g, k, /*simpl=*/true);
  if (search.st.precolour_clique() > k) return SearchStats{1, false};
  bool found = search.rec(false);
  return SearchStats{search.st.nodes, found};
}

namespace {

// Static variable order: descending occurrence count, ties by index.
std::vector<int> static_order(const CnfFormula& f) {
  std::vector<int> occ(static_cast<std::size_t>(f.n_vars) + 1, 0);
  for (const auto& c : f.clauses) {
    for (int lit : c) ++occ[static_cast<std::size_t>(std::abs(lit))];
  }
  std::vector<int> vars(static_cast<std::size_t>(f.n_vars));
  std::iota(vars.begin(), vars.end(), 1);
  std::stable_sort(vars.begin(), vars.end(), [&](int a, int b) {
    return occ[static_cast<std::size_t>(a)] > occ[static_cast<std::size_t>(b)];
  });
  return vars;  // vars[pos] = variable assigned at position pos
}

// Fast path: n <= 64, clause masks in position space, clauses bucketed by the
// position of their last-assigned variable.
struct FastSat {
  int n;
  std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> bucket;
  std::uint64_t value = 0;
  std::uint64_t nodes = 0;

  explicit FastSat(const CnfFormula& f) : n(f.n_vars), bucket(f.n_vars) {
    std::vector<int> order = static_order(f);
    std::vector<int> pos(static_cast<std::size_t>(f.n_vars) + 1, 0);
    for (int p = 0; p < f.n_vars; ++p) {
      pos[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = p;
    }
    for (const auto& c : f.clauses) {
      std::uint64_t pos_mask = 0, neg_mask = 0;
      int last = 0;
      for (int lit : c) {
        int p = pos[static_cast<std::size_t>(std::abs(lit))];
        last = std::max(last, p);
        if (lit > 0) {
          pos_mask |= 1ULL << p;
        } else {
          neg_mask |= 1ULL << p;
        }
      }
      bucket[static_cast<std::size_t>(last)].emplace_back(pos_mask, neg_mask);
    }
  }

  bool violated_at(int p) const {
    for (auto [pm, nm] : bucket[static_cast<std::size_t>(p)]) {
      if ((pm & value) == 0 && (nm & value) == nm) return true;
    }
    return false;
  }

  bool rec(int p, bool conflict) {
    ++nodes;
    if (conflict) return false;
    if (p == n) return true;
    value |= 1ULL << p;
    if (rec(p + 1, violated_at(p))) return true;
    value &= ~(1ULL << p);
    if (rec(p + 1, violated_at(p))) return true;
    return false;
  }
};

// Portable path for n > 64 (file inputs); literal lists in position space.
struct WideSat {
  int n;
  std::vector<std::vector<std::vector<int>>> bucket;  // signed position lits
  std::vector<signed char> value;
  std::uint64_t nodes = 0;

  explicit WideSat(const CnfFormula& f)
      : n(f.n_vars),
        bucket(static_cast<std::size_t>(f.n_vars)),
        value(static_cast<std::size_t>(f.n_vars), 0) {
    std::vector<int> order = static_order(f);
    std::vector<int> pos(static_cast<std::size_t>(f.n_vars) + 1, 0);
    for (int p = 0; p < f.n_vars; ++p) {
      pos[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = p;
    }
    for (const auto& c : f.clauses) {
      std::vector<int> lits;
      int last = 0;
      for (int lit : c) {
        int p = pos[static_cast<std::size_t>(std::abs(lit))];
        last = std::max(last, p);
        lits.push_back(lit > 0 ? p + 1 : -(p + 1));
      }
      bucket[static_cast<std::size_t>(last)].push_back(std::move(lits));
    }
  }

  bool violated_at(int p) const {
    for (const auto& lits : bucket[static_cast<std::size_t>(p)]) {
      bool sat = false;
      for (int lit : lits) {
        int q = std::abs(lit) - 1;
        if (value[static_cast<std::size_t>(q)] == (lit > 0 ? 1 : -1)) {
          sat = true;
          break;
        }
      }
      if (!sat) return true;
    }
    return false;
  }

  bool rec(int p, bool conflict) {
    ++nodes;
    if (conflict) return false;
    if (p == n) return true;
    for (signed char val : {static_cast<signed char>(1),
                            static_cast<signed char>(-1)}) {
      value[static_cast<std::size_t>(p)] = val;
      if (rec(p + 1, violated_at(p))) return true;
    }
    value[static_cast<std::size_t>(p)] = 0;
    return false;
  }
};

}  // namespace

SearchStats sat_backtrack(const CnfFormula& f) {
  if (f.n_vars < 0) throw std::invalid_argument("sat_backtrack: negative n");
  for (const auto& c : f.clauses) {
    if (c.empty()) return SearchStats{1, false};  // empty clause: trivially unsat
  }
  if (f.n_vars <= 64) {
    FastSat s(f);
    bool found = s.rec(0, false);
    return SearchStats{s.nodes, found};
  }
  WideSat s(f);
  bool found = s.rec(0, false);
  return SearchStats{s.nodes, found};
}

bool proper_colouring(const Graph& g, const std::vector<int>& colour) {
  if (colour.size() != static_cast<std::size_t>(g.n)) return false;
  for (int v = 0; v < g.n; ++v) {
    if (colour[static_cast<std::size_t>(v)] < 1) return false;
  }
  for (auto [u, v] : g.edges) {
    if (colour[static_cast<std::size_t>(u)] ==
        colour[static_cast<std::size_t>(v)]) {
      return false;
    }
  }
  return true;
}

}  // namespace qcsp::classical
