#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcsp/classical.hpp"
#include "qcsp/experiments.hpp"
#include "qcsp/factory.hpp"
#include "qcsp/gadgets.hpp"
#include "qcsp/grover.hpp"
#include "qcsp/instances.hpp"
#include "qcsp/pipeline.hpp"
#include "qcsp/walk.hpp"

namespace {

using json = nlohmann::json;
using namespace qcsp;

json count_json(const Count& c) {
  return json{{"value", c.to_double()}, {"decimal", c.str()}};
}

json resources_json(const Resources& r) {
  return json{{"t_depth", count_json(r.t_depth)},
              {"toffoli", count_json(r.toffoli)},
              {"t_count", count_json(r.t_count)},
              {"ancillas", count_json(r.ancillas)},
              {"magic_states", count_json(r.total_count())}};
}

json regime_json(const pipeline::Regime& r) {
  return json{{"name", r.name},
              {"measurement_s", r.measurement_s},
              {"gate_s", r.gate_s},
              {"cycle_s", r.cycle_s},
              {"gate_error", r.gate_error},
              {"decode_speedup", r.decode_speedup}};
}

json estimate_json(const pipeline::EstimateReport& r) {
  json j;
  j["algorithm"] = r.spec.algorithm == pipeline::Algorithm::kGrover
                       ? "grover"
                       : "backtracking";
  j["problem"] =
      r.spec.problem == walk::Problem::kSat ? "sat" : "colouring";
  j["regime"] = r.regime.name;
  j["n"] = r.n;
  j["k"] = r.k;
  j["m"] = r.m.to_double();
  j["total"] = resources_json(r.total);
  j["magic_states"] = r.magic_states;
  j["quantum_s"] = r.quantum_s;
  j["classical_s"] = r.classical_s;
  j["speedup"] = r.speedup;
  j["t_algo_cycles"] = r.t_algo_cycles;
  j["factory_space_time"] = count_json(r.factory.space_time);
  json rounds = json::array();
  for (const auto& round : r.factory.rounds) {
    rounds.push_back({{"distance", round.distance},
                      {"qubits", round.qubits},
                      {"cycles", round.cycles}});
  }
  j["factory_rounds"] = rounds;
  j["factory_qubits"] = r.factory_qubits;
  return j;
}

void print_estimate_text(const pipeline::EstimateReport& r) {
  std::printf("%-12s %-10s n=%-4d k=%-3d",
              r.spec.algorithm == pipeline::Algorithm::kGrover
                  ? "grover"
                  : "backtracking",
              r.regime.name.c_str(), r.n, r.k);
  if (r.spec.problem == walk::Problem::kSat) {
    std::printf(" m=%-9.0f", r.m.to_double());
  }
  std::printf("  T-depth %.3e  magic states %.3e\n",
              r.total.t_depth.to_double(), r.magic_states);
  std::printf("  quantum %.3e s  classical %.3e s  speedup %.3e\n",
              r.quantum_s, r.classical_s, r.speedup);
  std::printf("  factory: S=%.4e  rounds",
              r.factory.space_time.to_double());
  for (const auto& round : r.factory.rounds) {
    std::printf(" d=%d", round.distance);
  }
  std::printf("  qubits %.3e\n", r.factory_qubits);
}

std::vector<int> parse_ns(const std::vector<int>& ns, std::vector<int> dflt) {
  return ns.empty() ? dflt : ns;
}

struct GlobalOpts {
  bool as_json = false;
  std::string fits_path;
  std::string gadgets_path;
};

pipeline::FitRegistry load_fits(const GlobalOpts& g) {
  return g.fits_path.empty() ? pipeline::FitRegistry::defaults()
                             : pipeline::FitRegistry::load_csv(g.fits_path);
}

gadgets::GadgetTable load_gadgets(const GlobalOpts& g) {
  return g.gadgets_path.empty() ? gadgets::GadgetTable::defaults()
                                : gadgets::load_gadget_table(g.gadgets_path);
}

void emit(const GlobalOpts& g, const json& j, const std::string& text) {
  if (g.as_json) {
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::fputs(text.c_str(), stdout);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resource estimates for quantum search on constraint problems"};
  app.require_subcommand(1);
  GlobalOpts global;
  app.add_flag("--json", global.as_json, "emit JSON instead of text");
  app.add_option("--fits", global.fits_path, "fit registry CSV");
  app.add_option("--gadgets", global.gadgets_path, "gadget cost config");

  // gen
  auto* gen = app.add_subcommand("gen", "generate random instances");
  gen->require_subcommand(1);
  auto* gen_graph = gen->add_subcommand("graph", "random graph, DIMACS col");
  int gg_n = 30;
  double gg_p = 0.5;
  std::uint64_t gg_seed = 1;
  std::string gg_out;
  gen_graph->add_option("--n", gg_n, "vertices")->required();
  gen_graph->add_option("--p", gg_p, "edge probability");
  gen_graph->add_option("--seed", gg_seed, "rng seed");
  gen_graph->add_option("--out", gg_out, "output path")->required();
  auto* gen_ksat = gen->add_subcommand("ksat", "random k-SAT, DIMACS cnf");
  int gk_n = 20, gk_k = 3;
  std::uint64_t gk_m = 0, gk_seed = 1;
  std::string gk_out;
  gen_ksat->add_option("--n", gk_n, "variables")->required();
  gen_ksat->add_option("--k", gk_k, "clause width")->required();
  gen_ksat->add_option("--m", gk_m, "clauses (default: threshold)");
  gen_ksat->add_option("--seed", gk_seed, "rng seed");
  gen_ksat->add_option("--out", gk_out, "output path")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "run the classical solvers");
  solve->require_subcommand(1);
  auto* solve_col = solve->add_subcommand("colour", "chromatic number");
  std::string sc_in;
  int sc_k = 0;
  solve_col->add_option("--in", sc_in, "DIMACS col file")->required();
  solve_col->add_option("--k", sc_k, "decision variant at k colours");
  auto* solve_sat = solve->add_subcommand("sat", "satisfiability");
  std::string ss_in;
  solve_sat->add_option("--in", ss_in, "DIMACS cnf file")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "tree-size experiments");
  bench->require_subcommand(1);
  auto* bench_d = bench->add_subcommand("dsatur", "graph colouring trees");
  std::vector<int> bd_ns;
  int bd_instances = 200, bd_threads = 0;
  std::uint64_t bd_seed = 1;
  bool bd_simplified = false;
  std::string bd_out;
  bench_d->add_option("--ns", bd_ns, "instance sizes")->delimiter(',');
  bench_d->add_option("--instances", bd_instances, "graphs per size");
  bench_d->add_option("--seed", bd_seed, "base seed");
  bench_d->add_option("--threads", bd_threads, "0 = all cores");
  bench_d->add_flag("--simplified", bd_simplified,
                    "also run the variant without neighbour-colour pruning");
  bench_d->add_option("--out", bd_out, "write rows CSV");
  auto* bench_s = bench->add_subcommand("sat", "k-SAT backtracking trees");
  std::vector<int> bs_ns;
  int bs_k = 12, bs_instances = 7, bs_threads = 0;
  std::uint64_t bs_seed = 1;
  std::string bs_out;
  bench_s->add_option("--k", bs_k, "clause width");
  bench_s->add_option("--ns", bs_ns, "instance sizes")->delimiter(',');
  bench_s->add_option("--instances", bs_instances, "formulas per size");
  bench_s->add_option("--seed", bs_seed, "base seed");
  bench_s->add_option("--threads", bs_threads, "0 = all cores");
  bench_s->add_option("--out", bs_out, "write rows CSV");

  // fit
  auto* fit = app.add_subcommand("fit", "fit 2^(slope n + intercept)");
  std::string fit_in, fit_kind = "dsatur", fit_save;
  int fit_k = 0;
  fit->add_option("--in", fit_in, "rows CSV from bench")->required();
  fit->add_option("--kind", fit_kind, "dsatur | dsatur_simplified | ksat");
  fit->add_option("--k", fit_k, "clause width label for the registry");
  fit->add_option("--save", fit_save, "append to fit registry CSV");

  // regimes / idealized
  app.add_subcommand("regimes", "list hardware regimes");
  auto* ideal = app.add_subcommand("idealized", "no-fault-tolerance bounds");
  std::vector<double> ideal_depths;
  ideal->add_option("--depth", ideal_depths, "oracle depths")->delimiter(',');

  // estimate
  auto* est = app.add_subcommand("estimate", "fault-tolerant estimates");
  est->require_subcommand(1);
  auto* est_grover = est->add_subcommand("grover", "Grover on k-SAT");
  int eg_k = 14, eg_n = 0;
  std::string eg_regime;
  est_grover->add_option("--k", eg_k, "clause width");
  est_grover->add_option("--n", eg_n, "instance size (default: max in a day)");
  est_grover->add_option("--regime", eg_regime, "single regime");
  auto* est_bt = est->add_subcommand("backtracking", "walk-based backtracking");
  std::string eb_problem = "sat", eb_regime;
  int eb_k = 12, eb_n = 0;
  est_bt->add_option("--problem", eb_problem, "sat | colouring");
  est_bt->add_option("--k", eb_k, "clause width (sat)");
  est_bt->add_option("--n", eb_n, "instance size (default: max in a day)");
  est_bt->add_option("--regime", eb_regime, "single regime");

  // factory
  auto* fac = app.add_subcommand("factory", "magic-state factory sizing");
  double fac_states = 1e12, fac_error = 1e-3;
  std::string fac_kind = "toffoli", fac_layout = "halved";
  fac->add_option("--states", fac_states, "magic states consumed")->required();
  fac->add_option("--error", fac_error, "physical gate error")->required();
  fac->add_option("--kind", fac_kind, "toffoli | t");
  fac->add_option("--layout", fac_layout, "halved | standard");

  // decode-cost
  auto* dec = app.add_subcommand("decode-cost", "decoder processor-days");
  std::vector<double> dec_states;
  dec->add_option("--states", dec_states, "Toffoli counts")->delimiter(',');

  // report
  auto* rep = app.add_subcommand("report", "aggregate reports");
  rep->require_subcommand(1);
  rep->add_subcommand("all", "all algorithms across all regimes");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen_graph->parsed()) {
      CounterRng rng(gg_seed);
      instances::Graph g = instances::gen_gnp(gg_n, gg_p, rng);
      instances::write_dimacs_graph(gg_out, g);
      emit(global,
           json{{"n", g.n}, {"edges", g.edges.size()}, {"path", gg_out}},
           "wrote " + gg_out + " with " + std::to_string(g.edges.size()) +
               " edges\n");
    } else if (gen_ksat->parsed()) {
      if (gk_m == 0) gk_m = instances::clauses_at_threshold(gk_k, gk_n);
      CounterRng rng(gk_seed);
      instances::CnfFormula f =
          instances::gen_ksat(gk_n, gk_k, gk_m, rng);
      instances::write_dimacs_cnf(gk_out, f);
      emit(global,
           json{{"n", f.n_vars},
                {"k", f.k},
                {"m", f.clauses.size()},
                {"path", gk_out}},
           "wrote " + gk_out + " with " + std::to_string(f.clauses.size()) +
               " clauses\n");
    } else if (solve_col->parsed()) {
      instances::Graph g = instances::read_dimacs_graph(sc_in);
      if (sc_k > 0) {
        classical::SearchStats st = classical::dsatur_colourable(g, sc_k);
        emit(global,
             json{{"k", sc_k},
                  {"colourable", st.found},
                  {"nodes", st.nodes}},
             std::string(st.found ? "colourable" : "not colourable") +
                 " with " + std::to_string(sc_k) + " colours, " +
                 std::to_string(st.nodes) + " nodes\n");
      } else {
        classical::ChromaticResult r = classical::dsatur_chromatic(g);
        emit(global,
             json{{"chromatic_number", r.chromatic_number},
                  {"nodes", r.nodes},
                  {"estimate", g.n >= 4 ? instances::chromatic_estimate(g.n)
                                        : 0.0}},
             "chromatic number " + std::to_string(r.chromatic_number) +
                 ", " + std::to_string(r.nodes) + " nodes\n");
      }
    } else if (solve_sat->parsed()) {
      instances::CnfFormula f = instances::read_dimacs_cnf(ss_in);
      classical::SearchStats st = classical::sat_backtrack(f);
      emit(global,
           json{{"satisfiable", st.found}, {"nodes", st.nodes}},
           std::string(st.found ? "satisfiable" : "unsatisfiable") + ", " +
               std::to_string(st.nodes) + " nodes\n");
    } else if (bench_d->parsed() || bench_s->parsed()) {
      experiments::ExperimentConfig cfg;
      std::vector<experiments::ExperimentRow> rows;
      std::string kind;
      if (bench_d->parsed()) {
        cfg.ns = parse_ns(bd_ns, {30, 35, 40, 45, 50, 55});
        cfg.instances = bd_instances;
        cfg.seed = bd_seed;
        cfg.threads = bd_threads;
        rows = experiments::run_dsatur_experiment(cfg, 0.5, bd_simplified);
        kind = "dsatur";
        if (!bd_out.empty()) experiments::write_csv(bd_out, rows);
      } else {
        cfg.ns = parse_ns(bs_ns, {15, 17, 19, 21, 23, 25});
        cfg.instances = bs_instances;
        cfg.seed = bs_seed;
        cfg.threads = bs_threads;
        rows = experiments::run_sat_experiment(cfg, bs_k);
        kind = "ksat";
        if (!bs_out.empty()) experiments::write_csv(bs_out, rows);
      }
      auto med = experiments::medians_by_n(rows, kind);
      experiments::FitResult f = experiments::fit_scaling(med);
      json jm = json::array();
      std::string text;
      for (auto& [n, m] : med) {
        jm.push_back({{"n", n}, {"median_nodes", m}});
        text += "n=" + std::to_string(n) +
                " median=" + std::to_string(m) + "\n";
      }
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "fit: slope %.4f intercept %.4f r2 %.4f (%d points)\n",
                    f.slope, f.intercept, f.r2, f.points);
      emit(global,
           json{{"rows", rows.size()},
                {"medians", jm},
                {"fit",
                 {{"slope", f.slope},
                  {"intercept", f.intercept},
                  {"r2", f.r2},
                  {"points", f.points}}}},
           text + buf);
    } else if (fit->parsed()) {
      auto rows = experiments::read_csv(fit_in);
      auto med = experiments::medians_by_n(rows, fit_kind);
      experiments::FitResult f = experiments::fit_scaling(med);
      if (!fit_save.empty()) {
        pipeline::FitRegistry reg =
            std::filesystem::exists(fit_save)
                ? pipeline::FitRegistry::load_csv(fit_save)
                : pipeline::FitRegistry::defaults();
        std::string problem = fit_kind == "ksat" ? "sat_tree" : "colouring";
        reg.set({problem, fit_kind == "ksat" ? fit_k : 0, f.slope,
                 f.intercept, "log2_nodes", "measured"});
        reg.save_csv(fit_save);
      }
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "fit: slope %.4f intercept %.4f r2 %.4f (%d points)\n",
                    f.slope, f.intercept, f.r2, f.points);
      emit(global,
           json{{"slope", f.slope},
                {"intercept", f.intercept},
                {"r2", f.r2},
                {"points", f.points}},
           buf);
    } else if (app.get_subcommand("regimes")->parsed()) {
      json j = json::array();
      std::string text;
      for (const auto& r : pipeline::regimes()) {
        j.push_back(regime_json(r));
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "%-10s meas %5.1fns gate %5.1fns cycle %6.1fns "
                      "error %.0e decode x%.0e\n",
                      r.name.c_str(), r.measurement_s * 1e9, r.gate_s * 1e9,
                      r.cycle_s * 1e9, r.gate_error, r.decode_speedup);
        text += buf;
      }
      emit(global, j, text);
    } else if (ideal->parsed()) {
      if (ideal_depths.empty()) ideal_depths = {1000.0, 5e5};
      json j = json::array();
      std::string text;
      for (double d : ideal_depths) {
        for (const auto& r : pipeline::regimes()) {
          auto row = pipeline::idealized_speedup(r, d);
          j.push_back({{"regime", row.regime},
                       {"oracle_depth", row.oracle_depth},
                       {"max_depth", row.max_depth},
                       {"max_n", row.max_n},
                       {"quantum_s", row.quantum_s},
                       {"classical_s", row.classical_s},
                       {"speedup", row.speedup}});
          char buf[200];
          std::snprintf(buf, sizeof buf,
                        "depth %7.0f %-10s max_n %-3d classical %.3e s "
                        "speedup %.3e\n",
                        d, row.regime.c_str(), row.max_n, row.classical_s,
                        row.speedup);
          text += buf;
        }
      }
      emit(global, j, text);
    } else if (est_grover->parsed() || est_bt->parsed()) {
      pipeline::AlgorithmSpec spec;
      std::string regime_name;
      int fixed_n = 0;
      if (est_grover->parsed()) {
        spec = {pipeline::Algorithm::kGrover, walk::Problem::kSat, eg_k};
        regime_name = eg_regime;
        fixed_n = eg_n;
      } else {
        spec.algorithm = pipeline::Algorithm::kBacktracking;
        if (eb_problem == "sat") {
          spec.problem = walk::Problem::kSat;
          spec.k = eb_k;
        } else if (eb_problem == "colouring") {
          spec.problem = walk::Problem::kColouring;
          spec.k = 0;
        } else {
          throw std::invalid_argument("unknown problem " + eb_problem);
        }
        regime_name = eb_regime;
        fixed_n = eb_n;
      }
      pipeline::FitRegistry fits = load_fits(global);
      gadgets::GadgetTable table = load_gadgets(global);
      std::vector<pipeline::EstimateReport> reports;
      if (!regime_name.empty()) {
        const auto& regime = pipeline::regime_by_name(regime_name);
        reports.push_back(fixed_n > 0
                              ? pipeline::estimate_at(spec, fixed_n, regime,
                                                      fits, table)
                              : pipeline::max_instance(spec, regime, fits,
                                                       table));
      } else if (fixed_n > 0) {
        for (const auto& regime : pipeline::regimes()) {
          reports.push_back(
              pipeline::estimate_at(spec, fixed_n, regime, fits, table));
        }
      } else {
        reports = pipeline::sweep_regimes(spec, fits, table);
      }
      if (global.as_json) {
        json j = json::array();
        for (const auto& r : reports) j.push_back(estimate_json(r));
        std::printf("%s\n", j.dump(2).c_str());
      } else {
        for (const auto& r : reports) print_estimate_text(r);
      }
    } else if (fac->parsed()) {
      factory::FactoryKind kind = fac_kind == "t" ? factory::FactoryKind::kT
                                                  : factory::FactoryKind::kToffoli;
      factory::Layout layout = fac_layout == "standard"
                                   ? factory::Layout::kStandard
                                   : factory::Layout::kHalved;
      auto repf = factory::design_factory(kind, fac_states, fac_error, layout);
      json rounds = json::array();
      std::string text;
      for (const auto& r : repf.rounds) {
        rounds.push_back({{"distance", r.distance},
                          {"qubits", r.qubits},
                          {"cycles", r.cycles},
                          {"tolerance", r.tolerance}});
        char buf[120];
        std::snprintf(buf, sizeof buf,
                      "round d=%-3d qubits %-10llu cycles %-6llu tol %.3e\n",
                      r.distance,
                      static_cast<unsigned long long>(r.qubits),
                      static_cast<unsigned long long>(r.cycles), r.tolerance);
        text += buf;
      }
      char buf[80];
      std::snprintf(buf, sizeof buf, "spacetime %s qubit-cycles\n",
                    repf.space_time.str().c_str());
      emit(global,
           json{{"kind", fac_kind},
                {"layout", fac_layout},
                {"rounds", rounds},
                {"space_time", count_json(repf.space_time)}},
           text + buf);
    } else if (dec->parsed()) {
      if (dec_states.empty()) dec_states = {1e12, 1e16, 1e20};
      json j = json::array();
      std::string text;
      for (double n : dec_states) {
        for (const auto& r : pipeline::regimes()) {
          auto cell = pipeline::decode_cost_cell(n, r);
          j.push_back({{"n_toffoli", n},
                       {"regime", cell.regime},
                       {"space_time", count_json(cell.space_time)},
                       {"processor_days", cell.processor_days}});
          char buf[120];
          std::snprintf(buf, sizeof buf,
                        "N %.0e %-10s S %.4e  %.3e processor-days\n", n,
                        cell.regime.c_str(), cell.space_time.to_double(),
                        cell.processor_days);
          text += buf;
        }
      }
      emit(global, j, text);
    } else if (rep->parsed()) {
      pipeline::FitRegistry fits = load_fits(global);
      gadgets::GadgetTable table = load_gadgets(global);
      const pipeline::AlgorithmSpec specs[] = {
          {pipeline::Algorithm::kGrover, walk::Problem::kSat, 14},
          {pipeline::Algorithm::kBacktracking, walk::Problem::kSat, 12},
          {pipeline::Algorithm::kBacktracking, walk::Problem::kColouring, 0},
      };
      json j = json::array();
      for (const auto& spec : specs) {
        auto reports = pipeline::sweep_regimes(spec, fits, table);
        for (const auto& r : reports) {
          if (global.as_json) {
            j.push_back(estimate_json(r));
          } else {
            print_estimate_text(r);
          }
        }
      }
      if (global.as_json) std::printf("%s\n", j.dump(2).c_str());
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
