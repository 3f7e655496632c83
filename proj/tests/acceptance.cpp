// Acceptance gate: one criterion per invocation (argv[1] = 1..13), one
// [PASS]/[FAIL] line per check, exit status = number of failed checks.
// Criteria 10 and 12 default to a smoke profile; set QCSP_FULL_BENCH=1 for
// the full sample counts and tighter tolerances.

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <map>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qcsp/classical.hpp"
#include "qcsp/experiments.hpp"
#include "qcsp/factory.hpp"
#include "qcsp/grover.hpp"
#include "qcsp/instances.hpp"
#include "qcsp/pipeline.hpp"
#include "qcsp/walk.hpp"

using namespace qcsp;

namespace {

int g_failed = 0;

void report(bool ok, const std::string& line) {
  std::printf("[%s] %s\n", ok ? "PASS" : "FAIL", line.c_str());
  if (!ok) ++g_failed;
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof(buf), f, args);
  va_end(args);
  return std::string(buf);
}

// |got/want - 1| <= tol
void check_rel(double got, double want, double tol, const std::string& what) {
  double rel = std::abs(got / want - 1.0);
  report(rel <= tol, fmt("%s: %.5g vs %.4g (off by %.2f%%, tol %.0f%%)",
                         what.c_str(), got, want, rel * 100.0, tol * 100.0));
}

// got within [want/factor, want*factor]
void check_factor(double got, double want, double factor,
                  const std::string& what) {
  double ratio = got / want;
  bool ok = ratio >= 1.0 / factor && ratio <= factor;
  report(ok, fmt("%s: %.5g vs %.4g (ratio %.3g, window x%.2g)", what.c_str(),
                 got, want, ratio, factor));
}

void check_near_int(int got, int want, int slack, const std::string& what) {
  report(std::abs(got - want) <= slack,
         fmt("%s: %d vs %d (slack %d)", what.c_str(), got, want, slack));
}

void check_eq_u64(std::uint64_t got, std::uint64_t want,
                  const std::string& what) {
  report(got == want, fmt("%s: %llu vs %llu", what.c_str(),
                          static_cast<unsigned long long>(got),
                          static_cast<unsigned long long>(want)));
}

double to_2sf(double x) {
  double mag = std::pow(10.0, std::floor(std::log10(x)) - 1.0);
  return std::round(x / mag) * mag;
}

bool full_profile() { return std::getenv("QCSP_FULL_BENCH") != nullptr; }

// ---------------------------------------------------------------------------

// Nine spacetime cells under the halved layout, 2% tolerance.
void criterion_factory_table() {
  struct Cell {
    double n, p, want;
  };
  const Cell cells[] = {
      {1e12, 1e-3, 4.10e7}, {1e12, 1e-4, 4.22e6}, {1e12, 1e-5, 8.98e5},
      {1e18, 1e-3, 2.45e8}, {1e18, 1e-4, 9.86e6}, {1e18, 1e-5, 2.30e6},
      {1e24, 1e-3, 4.51e8}, {1e24, 1e-4, 4.60e7}, {1e24, 1e-5, 4.69e6},
  };
  for (const auto& c : cells) {
    auto r = factory::design_factory(factory::FactoryKind::kToffoli, c.n, c.p);
    check_rel(r.space_time.to_double(), c.want, 0.02,
              fmt("factory spacetime (N=%.0e, p=%.0e)", c.n, c.p));
  }
}

// Nine decode-cost cells, processor-days, 2% tolerance.
void criterion_decode_table() {
  struct Cell {
    double n;
    const char* regime;
    double want;
  };
  const Cell cells[] = {
      {1e12, "Realistic", 4.17e7},  {1e12, "Plausible", 4.30e4},
      {1e12, "Optimistic", 9.15e-1}, {1e16, "Realistic", 2.29e12},
      {1e16, "Plausible", 7.76e8},  {1e16, "Optimistic", 2.23e4},
      {1e20, "Realistic", 3.10e16}, {1e20, "Plausible", 3.07e13},
      {1e20, "Optimistic", 3.28e8},
  };
  for (const auto& c : cells) {
    auto cell =
        pipeline::decode_cost_cell(c.n, pipeline::regime_by_name(c.regime));
    check_rel(cell.processor_days, c.want, 0.02,
              fmt("decode days (N=%.0e, %s)", c.n, c.regime));
  }
}

// Oracle breakdown at k=14, m=885743: depths exact, counts to 2 significant
// figures, total depth cross-checked against the aggregate formula.
void criterion_grover_rows() {
  const Count m{885743};
  auto oc = grover::oracle_cost(14, m);
  check_eq_u64(oc.fanout.t_depth.to_u64(), 0, "fanout T-depth");
  check_eq_u64(oc.fanout.toffoli.to_u64(), 0, "fanout Toffolis");
  check_eq_u64(oc.clauses.t_depth.to_u64(), 14, "clause-check T-depth");
  check_eq_u64(oc.global_and.t_depth.to_u64(), 39, "AND T-depth");
  check_eq_u64(oc.total().t_depth.to_u64(), 53, "oracle total T-depth");

  check_rel(to_2sf(oc.clauses.toffoli.to_double()), 2.3e7, 1e-9,
            "clause-check Toffolis (2 s.f.)");
  check_rel(to_2sf(oc.global_and.toffoli.to_double()), 8.9e5, 1e-9,
            "AND Toffolis (2 s.f.)");

  // Depth recomposed from the clause width and clause count alone:
  // compute+uncompute of a k-control gate, then one m-control gate.
  auto lg = [](std::uint64_t x) {
    std::uint64_t b = 0;
    while ((std::uint64_t{1} << b) < x) ++b;
    return b;
  };
  std::uint64_t formula = 2 * (2 * lg(14) - 1) + (2 * lg(885743) - 1);
  check_eq_u64(oc.total().t_depth.to_u64(), formula,
               "total depth matches closed formula");

  // Aggregate count variant keeps the published identity m(2k+1) - 3.
  auto agg = grover::oracle_cost(14, m, grover::OracleCountVariant::kClosedForm);
  Count want = m * Count{29} - Count{3};
  check_eq_u64((agg.clauses.toffoli + agg.global_and.toffoli).to_u64(),
               want.to_u64(), "aggregate count variant");
}

// delta = 0.1 iteration constant to 4 significant figures.
void criterion_iteration_constant() {
  double got = grover::iteration_multiplier(0.1);
  report(std::floor(got * 1000.0) / 1000.0 == 3.642,
         fmt("multiplier truncates to 3.642 (got %.9f)", got));
  report(std::abs(got - 3.642) < 1e-3,
         fmt("multiplier within 1e-3 of 3.642 (diff %.2e)",
             std::abs(got - 3.642)));
}

// Phase-estimation schedule and the walk-length multipliers.
void criterion_pe_constants() {
  auto pe = walk::pe_params(0.1, 1.0 / 32.0);
  check_eq_u64(static_cast<std::uint64_t>(pe.repetitions), 79,
               "repetitions K");
  report(pe.tail_marked <= 0.1,
         fmt("marked tail %.6f <= 0.1 at L=%d", pe.tail_marked, pe.threshold));
  report(pe.tail_unmarked <= 0.1,
         fmt("unmarked tail %.6f <= 0.1 at L=%d", pe.tail_unmarked,
             pe.threshold));
  auto wc = walk::walk_counts(1.0, 1, pe);
  check_eq_u64(wc.sequential_steps.to_u64(), 32, "sequential multiplier");
  check_eq_u64(wc.total_steps.to_u64(), 2528, "total-step multiplier");
}

// Idealized-speedup table: n exact, all other values within 1%.
void criterion_idealized_table() {
  struct Col {
    const char* regime;
    double max_depth;
    int n_small, n_big;
    double cl_small, sp_small, cl_big, sp_big;
  };
  // n_big etc. refer to oracle depth 1000, n_small to depth 5e5.
  const Col cols[] = {
      {"Realistic", 2.88e12, 44, 62, 1.76e7, 2.80e2, 4.61e12, 7.16e7},
      {"Plausible", 2.88e13, 51, 69, 2.25e9, 3.16e4, 5.90e14, 8.10e9},
      {"Optimistic", 2.88e14, 58, 76, 2.88e11, 3.58e6, 7.56e16, 9.16e11},
  };
  for (const auto& c : cols) {
    const auto& regime = pipeline::regime_by_name(c.regime);
    auto deep = pipeline::idealized_speedup(regime, 1000.0);
    auto sha = pipeline::idealized_speedup(regime, 5e5);
    check_rel(deep.max_depth, c.max_depth, 0.01,
              fmt("%s max depth", c.regime));
    check_near_int(deep.max_n, c.n_big, 0, fmt("%s n (depth 1e3)", c.regime));
    check_rel(deep.classical_s, c.cl_big, 0.01,
              fmt("%s classical s (depth 1e3)", c.regime));
    check_rel(deep.speedup, c.sp_big, 0.01,
              fmt("%s speedup (depth 1e3)", c.regime));
    check_near_int(sha.max_n, c.n_small, 0, fmt("%s n (depth 5e5)", c.regime));
    check_rel(sha.classical_s, c.cl_small, 0.01,
              fmt("%s classical s (depth 5e5)", c.regime));
    check_rel(sha.speedup, c.sp_small, 0.01,
              fmt("%s speedup (depth 5e5)", c.regime));
  }
}

// End-to-end Grover 14-SAT sweep against the published column values.
void criterion_grover_end_to_end() {
  auto fits = pipeline::FitRegistry::defaults();
  pipeline::AlgorithmSpec spec{pipeline::Algorithm::kGrover,
                               walk::Problem::kSat, 14};
  struct Col {
    int n;
    double t_depth, count, fq, speedup;
  };
  const Col want[] = {
      {65, 1.46e12, 4.41e17, 3.14e13, 1.62e3},
      {72, 1.65e13, 5.52e18, 5.15e12, 1.73e4},
      {78, 1.32e14, 4.79e19, 1.38e12, 1.83e5},
  };
  auto got = pipeline::sweep_regimes(spec, fits);
  for (std::size_t i = 0; i < got.size(); ++i) {
    const auto& regime = got[i].regime.name;
    check_near_int(got[i].n, want[i].n, 1, fmt("%s max n", regime.c_str()));
    check_factor(got[i].total.t_depth.to_double(), want[i].t_depth, 1.5,
                 fmt("%s T-depth", regime.c_str()));
    check_factor(got[i].total.total_count().to_double(), want[i].count, 1.5,
                 fmt("%s Toffoli count", regime.c_str()));
    check_factor(got[i].speedup, want[i].speedup, 2.0,
                 fmt("%s speedup", regime.c_str()));
    check_factor(got[i].factory_qubits, want[i].fq, 10.0,
                 fmt("%s factory qubits", regime.c_str()));
  }
}

// End-to-end backtracking sweeps (12-SAT, colouring), shipped fits.
void criterion_backtracking_end_to_end() {
  auto fits = pipeline::FitRegistry::defaults();
  struct Col {
    int n;
    double t_depth, count, fq, speedup;
  };

  {
    pipeline::AlgorithmSpec spec{pipeline::Algorithm::kBacktracking,
                                 walk::Problem::kSat, 12};
    const Col want[] = {
        {55, 1.63e12, 4.72e18, 3.85e14, 1.50e1},
        {63, 1.43e13, 4.72e19, 5.03e13, 3.92e2},
        {72, 1.63e14, 6.16e20, 2.17e13, 1.16e4},
    };
    auto got = pipeline::sweep_regimes(spec, fits);
    for (std::size_t i = 0; i < got.size(); ++i) {
      std::string tag = "12-SAT " + got[i].regime.name;
      check_near_int(got[i].n, want[i].n, 2, tag + " max n");
      check_factor(got[i].total.t_depth.to_double(), want[i].t_depth, 2.0,
                   tag + " T-depth");
      check_factor(got[i].total.total_count().to_double(), want[i].count, 2.0,
                   tag + " count");
      check_factor(got[i].speedup, want[i].speedup, 3.0, tag + " speedup");
      check_factor(got[i].factory_qubits, want[i].fq, 10.0,
                   tag + " factory qubits");
    }
  }

  {
    pipeline::AlgorithmSpec spec{pipeline::Algorithm::kBacktracking,
                                 walk::Problem::kColouring, 0};
    const Col want[] = {
        {113, 1.70e12, 8.24e17, 6.29e13, 7.25e0},
        {128, 1.53e13, 9.94e18, 9.26e12, 5.17e2},
        {144, 1.62e14, 1.24e20, 3.59e12, 4.16e4},
    };
    auto got = pipeline::sweep_regimes(spec, fits);
    for (std::size_t i = 0; i < got.size(); ++i) {
      std::string tag = "colouring " + got[i].regime.name;
      check_near_int(got[i].n, want[i].n, 4, tag + " max n");
      check_factor(got[i].total.t_depth.to_double(), want[i].t_depth, 2.0,
                   tag + " T-depth");
      check_factor(got[i].total.total_count().to_double(), want[i].count, 2.0,
                   tag + " count");
      check_factor(got[i].speedup, want[i].speedup, 3.0, tag + " speedup");
      check_factor(got[i].factory_qubits, want[i].fq, 10.0,
                   tag + " factory qubits");
    }
  }
}

Resources recompose_rows(const walk::StepBreakdown& bd) {
  std::map<std::string, Resources> by_name;
  for (const auto& r : bd.rows) by_name[r.name] = r.cost;
  Resources computes = by_name["compute_p"].par(by_name["compute_h"]);
  Resources uncomputes = by_name["uncompute_p"].par(by_name["uncompute_h"]);
  if (by_name.count("compute_c") != 0) {
    computes = computes.par(by_name["compute_c"]);
    uncomputes = uncomputes.par(by_name["uncompute_c"]);
  }
  return seq_all({by_name["conversion"], by_name["fanout"], computes,
                  by_name["diffusion"], uncomputes, by_name["other"]});
}

// Representative reflection tables: totals near the published anchors, rows
// recombining exactly.
void criterion_reflection_tables() {
  double col_tree =
      walk::quantum_tree_size(walk::Problem::kColouring, 136, 0.40, -7.43);
  auto col_a = walk::step_cost_colouring(136, 19, col_tree,
                                         walk::StepOperator::kWalkA);
  check_factor(col_a.total.t_depth.to_double(), 3114.0, 2.0,
               "colouring reflection T-depth (n=136, k=19)");
  check_factor(col_a.total.total_count().to_double(), 2.5e7, 2.0,
               "colouring reflection count");

  double sat_tree =
      walk::quantum_tree_size(walk::Problem::kSat, 71, 0.75, 3.68);
  auto sat_a = walk::step_cost_sat(71, 12, Count{201518}, sat_tree,
                                   walk::StepOperator::kWalkA);
  check_factor(sat_a.total.t_depth.to_double(), 524.0, 2.0,
               "SAT reflection T-depth (n=71, k=12)");
  check_factor(sat_a.total.total_count().to_double(), 2.3e7, 2.0,
               "SAT reflection count");

  auto col_b = walk::step_cost_colouring(136, 19, col_tree,
                                         walk::StepOperator::kWalkB);
  auto sat_b = walk::step_cost_sat(71, 12, Count{201518}, sat_tree,
                                   walk::StepOperator::kWalkB);
  for (const auto* bd : {&col_a, &col_b}) {
    report(recompose_rows(*bd) == bd->total,
           fmt("colouring rows recombine exactly (depth %llu)",
               static_cast<unsigned long long>(bd->total.t_depth.to_u64())));
  }
  for (const auto* bd : {&sat_a, &sat_b}) {
    report(recompose_rows(*bd) == bd->total,
           fmt("SAT rows recombine exactly (depth %llu)",
               static_cast<unsigned long long>(bd->total.t_depth.to_u64())));
  }
}

void check_slope(const std::vector<experiments::ExperimentRow>& rows,
                 const std::string& kind, double want, double tol,
                 const std::string& what) {
  auto med = experiments::medians_by_n(rows, kind);
  auto fit = experiments::fit_scaling(med);
  report(std::abs(fit.slope - want) <= tol,
         fmt("%s slope %.4f vs %.2f +- %.2f (r2 %.3f, %d points)",
             what.c_str(), fit.slope, want, tol, fit.r2, fit.points));
}

// Scaling experiments on desk-size ranges. The full profile matches the
// stated sample counts; the smoke profile keeps the ranges but trims
// instances and loosens the slope windows.
void criterion_experiments() {
  bool full = full_profile();
  std::printf("profile: %s\n", full ? "full" : "smoke");

  std::vector<int> dsatur_ns(26);
  for (int i = 0; i < 26; ++i) dsatur_ns[static_cast<std::size_t>(i)] = 30 + i;
  experiments::ExperimentConfig dsatur_cfg{dsatur_ns, 200, 1, 0};
  check_slope(experiments::run_dsatur_experiment(dsatur_cfg), "dsatur", 0.40,
              full ? 0.05 : 0.08, "DSATUR tree");

  experiments::ExperimentConfig sat12_cfg{{15, 17, 19, 21, 23, 25},
                                          full ? 7 : 5, 1, 0};
  check_slope(experiments::run_sat_experiment(sat12_cfg, 12), "ksat", 0.75,
              full ? 0.08 : 0.12, "12-SAT tree");

  experiments::ExperimentConfig sat3_cfg{{20, 25, 30, 35, 40},
                                         full ? 50 : 20, 1, 0};
  check_slope(experiments::run_sat_experiment(sat3_cfg, 3), "ksat", 0.35,
              full ? 0.05 : 0.08, "3-SAT tree");
}

// The production solvers against the test oracles, zero disagreements.
void criterion_oracle_equivalence() {
  int chromatic_bad = 0;
  for (int i = 0; i < 500; ++i) {
    CounterRng rng(101, static_cast<std::uint64_t>(i));
    int n = 4 + i % 5;  // 4..8
    double p = 0.3 + 0.1 * (i % 5);
    auto g = instances::gen_gnp(n, p, rng);
    if (classical::dsatur_chromatic(g).chromatic_number !=
        test_oracles::brute_chromatic(g)) {
      ++chromatic_bad;
    }
  }
  report(chromatic_bad == 0,
         fmt("chromatic number matches exhaustive search on 500 graphs "
             "(%d disagreements)",
             chromatic_bad));

  int sat_bad = 0;
  for (int i = 0; i < 500; ++i) {
    CounterRng rng(202, static_cast<std::uint64_t>(i));
    int n = 8 + i % 8;  // 8..15
    auto m = static_cast<std::uint64_t>((3 + i % 4) * n);
    auto f = instances::gen_ksat(n, 3, m, rng);
    if (classical::sat_backtrack(f).found != test_oracles::truth_table_sat(f)) {
      ++sat_bad;
    }
  }
  report(sat_bad == 0,
         fmt("satisfiability matches truth table on 500 formulas "
             "(%d disagreements)",
             sat_bad));
}

// Simplified-to-optimized node ratio stays within the modelled window, and
// the shipped walk penalty is exactly 4.
void criterion_tree_penalty() {
  bool full = full_profile();
  std::printf("profile: %s\n", full ? "full" : "smoke");
  experiments::ExperimentConfig cfg{{20, 25, 30, 35, 40, 45},
                                    full ? 100 : 25, 1, 0};
  auto rows = experiments::run_dsatur_experiment(cfg, 0.5, true);
  std::map<int, std::vector<double>> ratios;
  for (std::size_t i = 0; i + 1 < rows.size(); i += 2) {
    if (rows[i].kind != "dsatur" || rows[i + 1].kind != "dsatur_simplified") {
      report(false, fmt("unexpected row pairing at index %zu", i));
      return;
    }
    double opt = static_cast<double>(rows[i].nodes);
    double simpl = static_cast<double>(rows[i + 1].nodes);
    ratios[rows[i].n].push_back(simpl / opt);
  }
  for (auto& [n, v] : ratios) {
    std::sort(v.begin(), v.end());
    double med = v.size() % 2 == 1
                     ? v[v.size() / 2]
                     : 0.5 * (v[v.size() / 2 - 1] + v[v.size() / 2]);
    report(med >= 1.0 && med <= 15.0,
           fmt("median simplified/optimized ratio at n=%d: %.3f in [1, 15]",
               n, med));
  }

  double base = std::exp2(0.40 * 30 - 7.43);
  double penalty =
      walk::quantum_tree_size(walk::Problem::kColouring, 30, 0.40, -7.43) /
      base;
  report(std::abs(penalty - 4.0) < 1e-12,
         fmt("shipped tree-size penalty is %.1f (want 4)", penalty));
}

// Colour-count estimate against exact chromatic numbers at n = 30.
void criterion_chromatic_estimate() {
  double estimate = instances::chromatic_estimate(30);
  int within = 0;
  const int kGraphs = 100;
  for (int i = 0; i < kGraphs; ++i) {
    CounterRng rng(303, static_cast<std::uint64_t>(i));
    auto g = instances::gen_gnp(30, 0.5, rng);
    int chi = classical::dsatur_chromatic(g).chromatic_number;
    if (std::abs(static_cast<double>(chi) - estimate) <= 2.0) ++within;
  }
  report(within >= 95,
         fmt("%d/%d exact chromatic numbers within +-2 of estimate %.3f",
             within, kGraphs, estimate));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <criterion 1-13>\n", argv[0]);
    return 2;
  }
  int criterion = std::atoi(argv[1]);
  switch (criterion) {
    case 1: criterion_factory_table(); break;
    case 2: criterion_decode_table(); break;
    case 3: criterion_grover_rows(); break;
    case 4: criterion_iteration_constant(); break;
    case 5: criterion_pe_constants(); break;
    case 6: criterion_idealized_table(); break;
    case 7: criterion_grover_end_to_end(); break;
    case 8: criterion_backtracking_end_to_end(); break;
    case 9: criterion_reflection_tables(); break;
    case 10: criterion_experiments(); break;
    case 11: criterion_oracle_equivalence(); break;
    case 12: criterion_tree_penalty(); break;
    case 13: criterion_chromatic_estimate(); break;
    default:
      std::fprintf(stderr, "unknown criterion %d\n", criterion);
      return 2;
  }
  if (g_failed != 0) {
    std::printf("%d check(s) failed\n", g_failed);
  }
  return g_failed == 0 ? 0 : 1;
}
