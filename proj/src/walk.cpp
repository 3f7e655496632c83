#include "qcsp/walk.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace qcsp::walk {

namespace {

using gadgets::GadgetTable;
using gadgets::MctKind;

int ceil_log2(int x) {
  if (x < 1) throw std::invalid_argument("ceil_log2: x must be >= 1");
  return std::bit_width(static_cast<unsigned>(x - 1));
}

std::uint64_t ceil_log2_u64(std::uint64_t x) {
  if (x < 1) throw std::invalid_argument("ceil_log2: x must be >= 1");
  std::uint64_t lg = 0;
  while ((static_cast<std::uint64_t>(1) << lg) < x && lg < 63) ++lg;
  return lg;
}

Resources mcoh(int controls, const GadgetTable&) {
  return gadgets::mct_cost(controls, MctKind::kCoherent);
}

// Exact binomial tail P[X >= threshold], X ~ Bin(k, p), by incremental pmf.
long double binomial_upper_tail(int k, long double p, int threshold) {
  if (threshold <= 0) return 1.0L;
  if (threshold > k) return 0.0L;
  long double q = 1.0L - p;
  // pmf(0) = q^k, ratio pmf(i+1)/pmf(i) = (k-i)/(i+1) * p/q
  long double pmf = std::pow(q, static_cast<long double>(k));
  long double tail = threshold == 0 ? pmf : 0.0L;
  for (int i = 0; i < k; ++i) {
    pmf *= static_cast<long double>(k - i) /
           static_cast<long double>(i + 1) * (p / q);
    if (i + 1 >= threshold) tail += pmf;
  }
  return tail;
}

// Summands of the popcount adder tree: k single bits pairwise summed, widths
// growing by one per level; odd summand passes through.
Resources popcount_tree_cost(int k, const GadgetTable& g) {
  if (k <= 1) return Resources{};
  std::vector<int> widths(static_cast<std::size_t>(k), 1);
  Resources acc{};
  while (widths.size() > 1) {
    std::vector<int> next;
    Resources level{};
    std::size_t i = 0;
    for (; i + 1 < widths.size(); i += 2) {
      int w = std::max(widths[i], widths[i + 1]);
      level = level.par(gadgets::adder_cost(w, g));
      next.push_back(w + 1);
    }
    if (i < widths.size()) next.push_back(widths[i]);
    acc = acc.seq(level);
    widths = std::move(next);
  }
  return acc;
}

// One controlled decrement-or-increment bookkeeping step on an r-bit value
// register: flag MCTs plus three fixed-width increment circuits.
Resources counter_step_cost(int r, const GadgetTable& g) {
  int lg = ceil_log2(std::max(r, 2));
  Resources flags = mcoh(r + 1, g).times(Count{2});
  Resources incs = gadgets::increment_cost(g).times(Count{3});
  std::uint64_t depth = 4 * static_cast<std::uint64_t>(lg) +
                        incs.t_depth.to_u64() + 5;
  return Resources{Count{depth}, flags.toffoli + incs.toffoli, Count{},
                   incs.ancillas};
}

// Binary tournament of n leaves: levels of compare-and-swap units.
Resources selection_tree_cost(int n, int key_bits, const GadgetTable& g) {
  if (n < 2) return Resources{};
  Resources unit = gadgets::compare_swap_cost(key_bits, 0, g);
  std::uint64_t levels = static_cast<std::uint64_t>(ceil_log2(n));
  return Resources{unit.t_depth * Count{levels},
                   unit.toffoli * Count{static_cast<std::uint64_t>(n - 1)},
                   unit.t_count * Count{static_cast<std::uint64_t>(n - 1)},
                   unit.ancillas};
}

double synthesis_eps(double tree_size, int n) {
  return 1.0 / (64.0 * std::sqrt(tree_size * static_cast<double>(n)));
}

// H' = controlled-H'' on one register bit plus controlled-H on the rest.
Resources hprime_cost(double eps, int reg_bits, const GadgetTable& g) {
  Resources hpp = gadgets::controlled_hpp_cost(eps, g);
  Resources ch = gadgets::controlled_h_cost().fanned(
      Count{static_cast<std::uint64_t>(reg_bits)});
  return hpp.seq(ch);
}

// Phase flip conditioned on a comparator outcome; the comparator runs twice
// to free its flag.
Resources comparator_phase_cost(int bits, const GadgetTable& g) {
  Resources cmp = gadgets::comparator_cost(bits, g);
  Resources kick{Count{1}, Count{2}, Count{}, Count{}};
  return seq_all({cmp, kick, cmp});
}

// Diffusion core D = V U* V^dag with V = H' U* H'^dag U_{<=c+1} H'.
Resources diffusion_core_colouring(double eps, int r, const GadgetTable& g) {
  Resources hp = hprime_cost(eps, r, g);
  Resources ustar = mcoh(r + 2, g);
  Resources cphase = comparator_phase_cost(r, g);
  Resources v = seq_all({hp, ustar, hp, cphase, hp});
  return seq_all({v, ustar, v});
}

// SAT registers hold k+1 = 4 values: V is two controlled-H per bit.
Resources diffusion_core_sat(const GadgetTable& g) {
  Resources ch_layer = gadgets::controlled_h_cost().fanned(Count{2});
  Resources ustar = mcoh(4, g);
  return seq_all({ch_layer, ustar, ch_layer});
}

// Root-case branch: synthesized interior-amplitude rotation (amplitude
// 1/sqrt(1 + (c+1)n)), controlled diffusion core, two controlled-H, phase fix.
Resources root_case_cost(double eps, Resources core, int phase_controls,
                         const GadgetTable& g) {
  Resources rot = gadgets::rotation_cost(eps, /*controlled=*/true, g);
  Resources ch = gadgets::controlled_h_cost();
  Resources phase = mcoh(phase_controls, g);
  return seq_all({rot, core, ch, ch, phase});
}

struct NamedRows {
  std::vector<StepRow> rows;
  void add(std::string name, Resources r) {
    rows.push_back(StepRow{std::move(name), r});
  }
  const Resources& get(const std::string& name) const {
    for (const auto& r : rows) {
      if (r.name == name) return r.cost;
    }
    throw std::logic_error("missing row " + name);
  }
};

Resources compose_total(const NamedRows& rows, bool has_c_rows) {
  Resources computes = rows.get("compute_p").par(rows.get("compute_h"));
  Resources uncomputes = rows.get("uncompute_p").par(rows.get("uncompute_h"));
  if (has_c_rows) {
    computes = computes.par(rows.get("compute_c"));
    uncomputes = uncomputes.par(rows.get("uncompute_c"));
  }
  return seq_all({rows.get("conversion"), rows.get("fanout"), computes,
                  rows.get("diffusion"), uncomputes, rows.get("other")});
}

}  // namespace

PhaseEstimationParams pe_params(double delta, double beta) {
  if (!(delta > 0.0) || delta >= 1.0) {
    throw std::invalid_argument("pe_params: delta must be in (0, 1)");
  }
  if (!(beta > 0.0) || beta >= 0.25) {
    throw std::invalid_argument("pe_params: beta must be in (0, 1/4)");
  }
  long double p_unmarked = 2.0L * std::sqrt(static_cast<long double>(beta));
  constexpr int kMaxRepetitions = 10000;
  for (int k = 1; k <= kMaxRepetitions; ++k) {
    // Smallest L rejecting unmarked runs; then check marked acceptance.
    for (int l = 1; l <= k; ++l) {
      long double unmarked = binomial_upper_tail(k, p_unmarked, l);
      if (unmarked > static_cast<long double>(delta)) continue;
      long double marked = 1.0L - binomial_upper_tail(k, 0.5L, l);
      if (marked > static_cast<long double>(delta)) break;  // larger l only worse
      PhaseEstimationParams pe;
      pe.repetitions = k;
      pe.threshold = l;
      pe.beta = beta;
      pe.p_marked = 0.5;
      pe.p_unmarked = static_cast<double>(p_unmarked);
      pe.tail_marked = static_cast<double>(marked);
      pe.tail_unmarked = static_cast<double>(unmarked);
      return pe;
    }
  }
  throw std::runtime_error("pe_params: no feasible schedule found");
}

WalkCounts walk_counts(double tree_size, int n,
                       const PhaseEstimationParams& pe) {
  if (!(tree_size >= 1.0)) {
    throw std::invalid_argument("walk_counts: tree_size must be >= 1");
  }
  if (n < 1) throw std::invalid_argument("walk_counts: n must be >= 1");
  double steps = std::ceil(std::sqrt(tree_size * static_cast<double>(n)) /
                           pe.beta);
  WalkCounts wc;
  wc.sequential_steps = Count::from_double(steps);
  wc.total_steps =
      wc.sequential_steps * Count{static_cast<std::uint64_t>(pe.repetitions)};
  return wc;
}

double quantum_tree_size(Problem problem, int n, double fit_slope,
                         double fit_intercept) {
  double base = std::exp2(fit_slope * static_cast<double>(n) + fit_intercept);
  double penalty = problem == Problem::kColouring ? 4.0 : 1.5;
  return penalty * base;
}

StepBreakdown step_cost_colouring(int n, int k, double tree_size,
                                  StepOperator op, const GadgetTable& g) {
  if (n < 2) throw std::invalid_argument("step_cost_colouring: n must be >= 2");
  if (k < 2 || k > n) {
    throw std::invalid_argument("step_cost_colouring: need 2 <= k <= n");
  }
  if (!(tree_size >= 1.0)) {
    throw std::invalid_argument("step_cost_colouring: tree_size must be >= 1");
  }
  int r = ceil_log2(k + 1);
  int s = ceil_log2(n + 1);
  double eps = synthesis_eps(tree_size, n);
  auto count = [](std::uint64_t v) { return Count{v}; };
  std::uint64_t un = static_cast<std::uint64_t>(n);

  NamedRows rows;

  // Conversion between vertex-ordered and colouring-sequence layouts, both
  // directions: controlled fan-outs, per-position flags, register copies,
  // half-position swaps and the position sum tree.
  {
    Resources fan_x = gadgets::fanout_cost(n * (r + s), true);
    Resources fan_l = gadgets::fanout_cost(s, true);
    Resources flags = mcoh(s + 1, g).fanned(count(un));
    Resources copies = mcoh(s + 2, g).fanned(count(un * un * r));
    Resources swaps = gadgets::cswap_cost(r + s).fanned(count((un + 1) / 2));
    Resources sum_tree{
        Count{4 * static_cast<std::uint64_t>(ceil_log2(n))},
        count(un * static_cast<std::uint64_t>(r) * 4 * (un - 1)), Count{},
        Count{}};
    Resources dir = seq_all({fan_x, fan_l, flags, copies, swaps, sum_tree,
                             copies, flags, fan_l, fan_x});
    rows.add("conversion", dir.times(Count{2}));
  }

  rows.add("fanout", gadgets::fanout_cost(n * r, true).times(Count{2}));

  // Highest colour in use: tournament over colour registers, result copied,
  // order restored; prefix-equality bits feed the diffusion swap tree.
  {
    Resources tree = selection_tree_cost(n, r, g);
    Resources copy = gadgets::fanout_cost(r, true);
    Resources c_fan = gadgets::fanout_cost(r, true);
    Resources prefix{};
    for (int len = 1; len <= r; ++len) {
      prefix = prefix.par(
          mcoh(len + 1, g).fanned(count(static_cast<std::uint64_t>(1) << len)));
    }
    Resources row = seq_all({tree, copy, tree, c_fan, prefix});
    rows.add("compute_c", row);
    rows.add("uncompute_c", row);
  }

  // Predicate: all-pairs colour-equality conflicts, OR over pairs, plus the
  // completeness check; pair/flag ancillas cleaned inside the row.
  {
    std::uint64_t pairs = un * (un - 1) / 2;
    Resources eq_bits{Count{2}, count(2 * static_cast<std::uint64_t>(r)),
                      Count{}, Count{}};
    Resources pair_chain = seq_all(
        {eq_bits, mcoh(r + 1, g), mcoh(r + 1, g), mcoh(3, g)});
    Resources pair_layer = pair_chain.fanned(count(pairs));
    Resources col_flags = mcoh(r + 1, g).fanned(count(un));
    Resources or_gate{Count{2 * ceil_log2_u64(pairs + 1) - 1},
                      count(2 * (pairs + 1) - 3), Count{}, Count{}};
    Resources complete = mcoh(n + 2, g);
    Resources combine = mcoh(3, g);
    Resources row = seq_all({pair_layer, col_flags, or_gate, complete, combine,
                             col_flags, pair_layer});
    rows.add("compute_p", row);
    rows.add("uncompute_p", row);
  }

  // Saturation heuristic: adjacency triples, per-vertex-colour ORs, popcount
  // trees, uncoloured masking, tournament over (saturation, index) keys.
  {
    Resources a_layer = mcoh(r + 1, g).fanned(
        count(un * un * static_cast<std::uint64_t>(k)));
    Resources c_layer =
        mcoh(n + 1, g).fanned(count(un * static_cast<std::uint64_t>(k)));
    Resources b_layer = popcount_tree_cost(k, g).fanned(count(un));
    Resources mask_unit =
        mcoh(r + 1, g).seq(Resources{Count{3}, count(static_cast<std::uint64_t>(r)),
                                     Count{}, Count{}});
    Resources mask_layer = mask_unit.fanned(count(un));
    Resources tree = selection_tree_cost(n, r + s, g);
    Resources copy = gadgets::fanout_cost(s, true);
    Resources row =
        seq_all({a_layer, c_layer, b_layer, mask_layer, tree, copy, tree});
    rows.add("compute_h", row);
    rows.add("uncompute_h", row);
  }

  // Colour diffusion: level/root flags, swap tree routing the active colour
  // register, core D, and (walk A only) the root case D'.
  {
    Resources set_b = mcoh(s + 1, g);
    Resources set_a = mcoh(4, g);
    Resources route{Count{3 * static_cast<std::uint64_t>(r)},
                    count(((static_cast<std::uint64_t>(1) << r) - 1) *
                          static_cast<std::uint64_t>(r + 2)),
                    Count{}, Count{}};
    Resources core = diffusion_core_colouring(eps, r, g);
    Resources row = seq_all({set_b, set_a, route, core});
    if (op == StepOperator::kWalkA) {
      row = row.seq(root_case_cost(eps, core, r + 3, g));
    }
    row = seq_all({row, route, set_a, set_b});
    rows.add("diffusion", row);
  }

  rows.add("other", seq_all({counter_step_cost(r, g), counter_step_cost(r, g),
                             mcoh(s + 2, g)}));

  StepBreakdown bd;
  bd.n = n;
  bd.k = k;
  bd.m = Count{};
  // Row order mirrors execution.
  for (const char* name :
       {"conversion", "fanout", "compute_c", "compute_p", "compute_h",
        "diffusion", "uncompute_c", "uncompute_p", "uncompute_h", "other"}) {
    bd.rows.push_back(StepRow{name, rows.get(name)});
  }
  bd.total = compose_total(rows, /*has_c_rows=*/true);
  return bd;
}

StepBreakdown step_cost_sat(int n, int k, Count m, double tree_size,
                            StepOperator op, const GadgetTable& g) {
  if (n < 2) throw std::invalid_argument("step_cost_sat: n must be >= 2");
  if (k < 2) throw std::invalid_argument("step_cost_sat: k must be >= 2");
  if (m < Count{1}) throw std::invalid_argument("step_cost_sat: m must be >= 1");
  if (!(tree_size >= 1.0)) {
    throw std::invalid_argument("step_cost_sat: tree_size must be >= 1");
  }
  constexpr int kEnc = 2;  // ternary cell: 0 / 1 / unassigned
  int s = ceil_log2(n + 1);
  double eps = synthesis_eps(tree_size, n);
  auto count = [](std::uint64_t v) { return Count{v}; };
  std::uint64_t un = static_cast<std::uint64_t>(n);

  NamedRows rows;

  {
    Resources fan_x = gadgets::fanout_cost(n * (kEnc + s), true);
    Resources fan_l = gadgets::fanout_cost(s, true);
    Resources flags = mcoh(s + 1, g).fanned(count(un));
    Resources copies = mcoh(s + 2, g).fanned(count(un * un * kEnc));
    Resources swaps =
        gadgets::cswap_cost(kEnc + s).fanned(count((un + 1) / 2));
    Resources sum_tree{
        Count{4 * static_cast<std::uint64_t>(ceil_log2(n))},
        count(un * static_cast<std::uint64_t>(kEnc) * 4 * (un - 1)), Count{},
        Count{}};
    Resources dir = seq_all({fan_x, fan_l, flags, copies, swaps, sum_tree,
                             copies, flags, fan_l, fan_x});
    rows.add("conversion", dir.times(Count{2}));
  }

  rows.add("fanout", gadgets::fanout_cost(kEnc * n, true).times(Count{2}));

  // Predicate: per-clause MCTs over k cells, fictitious-value flags, OR over
  // all failure bits, completeness check; ancillas cleaned inside the row.
  {
    Resources clause_layer = mcoh(k + 1, g).fanned(m);
    Resources fict_layer = mcoh(3, g).fanned(count(un));
    Count or_controls = m + Count{2};
    if (or_controls > Count{static_cast<std::uint64_t>(1) << 62}) {
      throw std::invalid_argument("step_cost_sat: m out of supported range");
    }
    Resources or_gate{Count{2 * ceil_log2_u64(or_controls.to_u64()) - 1},
                      m * Count{2} + Count{1}, Count{}, Count{}};
    Resources complete_flags = mcoh(3, g).fanned(count(un));
    Resources complete_gate = mcoh(n + 2, g);
    Resources combine = mcoh(3, g);
    Resources row = seq_all({clause_layer, fict_layer, or_gate, complete_flags,
                             complete_gate, combine, complete_gate,
                             complete_flags, fict_layer, clause_layer});
    rows.add("compute_p", row);
    rows.add("uncompute_p", row);
  }

  // Branch depth bookkeeping: copy the level counter and bump it.
  {
    Resources row =
        gadgets::fanout_cost(s, true).seq(counter_step_cost(kEnc, g));
    rows.add("compute_h", row);
    rows.add("uncompute_h", row);
  }

  {
    Resources set_b = mcoh(s + 1, g);
    Resources set_a = mcoh(4, g);
    Resources core = diffusion_core_sat(g);
    Resources row = seq_all({set_b, set_a, core});
    if (op == StepOperator::kWalkA) {
      row = row.seq(root_case_cost(eps, core, kEnc + 3, g));
    }
    row = seq_all({row, set_a, set_b});
    rows.add("diffusion", row);
  }

  rows.add("other",
           seq_all({counter_step_cost(kEnc, g), counter_step_cost(kEnc, g),
                    mcoh(s + 2, g)}));

  StepBreakdown bd;
  bd.n = n;
  bd.k = k;
  bd.m = m;
  for (const char* name :
       {"conversion", "fanout", "compute_p", "compute_h", "diffusion",
        "uncompute_p", "uncompute_h", "other"}) {
    bd.rows.push_back(StepRow{name, rows.get(name)});
  }
  bd.total = compose_total(rows, /*has_c_rows=*/false);
  return bd;
}

BacktrackingEstimate backtracking_estimate(Problem problem, int n, int k,
                                           Count m, double fit_slope,
                                           double fit_intercept, double delta,
                                           const GadgetTable& g) {
  BacktrackingEstimate est;
  est.problem = problem;
  est.n = n;
  est.k = k;
  est.m = m;
  est.tree_size = quantum_tree_size(problem, n, fit_slope, fit_intercept);
  est.pe = pe_params(delta);
  est.counts = walk_counts(est.tree_size, n, est.pe);
  if (problem == Problem::kColouring) {
    est.walk_a = step_cost_colouring(n, k, est.tree_size, StepOperator::kWalkA, g);
    est.walk_b = step_cost_colouring(n, k, est.tree_size, StepOperator::kWalkB, g);
  } else {
    est.walk_a = step_cost_sat(n, k, m, est.tree_size, StepOperator::kWalkA, g);
    est.walk_b = step_cost_sat(n, k, m, est.tree_size, StepOperator::kWalkB, g);
  }
  est.per_step = est.walk_a.total.seq(est.walk_b.total);
  est.total = Resources{
      est.per_step.t_depth * est.counts.sequential_steps,
      est.per_step.toffoli * est.counts.total_steps,
      est.per_step.t_count * est.counts.total_steps,
      est.per_step.ancillas *
          Count{static_cast<std::uint64_t>(est.pe.repetitions)}};
  return est;
}

double step_depth_overhead(Problem problem, int n, int k, Count m,
                           double tree_size) {
  StepBreakdown a, b;
  if (problem == Problem::kColouring) {
    a = step_cost_colouring(n, k, tree_size, StepOperator::kWalkA);
    b = step_cost_colouring(n, k, tree_size, StepOperator::kWalkB);
  } else {
    a = step_cost_sat(n, k, m, tree_size, StepOperator::kWalkA);
    b = step_cost_sat(n, k, m, tree_size, StepOperator::kWalkB);
  }
  double per_step = a.total.t_depth.to_double() + b.total.t_depth.to_double();
  return per_step * 32.0 * std::sqrt(static_cast<double>(n));
}

}  // namespace qcsp::walk
