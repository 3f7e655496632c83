#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "qcsp/grover.hpp"
#include "qcsp/instances.hpp"
#include "qcsp/pipeline.hpp"
#include "qcsp/walk.hpp"

using namespace qcsp;
using namespace qcsp::pipeline;

namespace {

std::filesystem::path repo_data(const char* name) {
  return std::filesystem::path(__FILE__).parent_path().parent_path() / "data" /
         name;
}

}  // namespace

TEST_CASE("the three hardware regimes carry the stated parameters") {
  const auto& rs = regimes();
  REQUIRE(rs.size() == 3u);
  CHECK(rs[0].name == "Realistic");
  CHECK(rs[0].measurement_s == 50e-9);
  CHECK(rs[0].gate_s == 30e-9);
  CHECK(rs[0].cycle_s == 200e-9);
  CHECK(rs[0].gate_error == 1e-3);
  CHECK(rs[0].decode_speedup == 1.0);
  CHECK(rs[1].name == "Plausible");
  CHECK(rs[1].measurement_s == 5e-9);
  CHECK(rs[1].gate_error == 1e-4);
  CHECK(rs[1].decode_speedup == 100.0);
  CHECK(rs[2].name == "Optimistic");
  CHECK(rs[2].gate_s == 0.3e-9);
  CHECK(rs[2].gate_error == 1e-5);
  CHECK(rs[2].decode_speedup == 1e6);

  CHECK(&regime_by_name("Plausible") == &rs[1]);
  CHECK_THROWS_AS(regime_by_name("Pessimistic"), std::invalid_argument);
}

TEST_CASE("idealized row maximizes n against the one-day depth budget") {
  for (const auto& regime : regimes()) {
    for (double depth : {1000.0, 5e5}) {
      IdealizedRow row = idealized_speedup(regime, depth);
      CHECK(row.max_depth == kSecondsPerDay / regime.gate_s);

      // Brute-force the largest n with depth * 2^(n/2) <= max_depth.
      int n = 0;
      while (depth * std::exp2((n + 1) / 2.0) <= row.max_depth) ++n;
      CHECK(row.max_n == n);

      CHECK(row.quantum_s ==
            doctest::Approx(depth * std::exp2(row.max_n / 2.0) *
                            regime.gate_s));
      CHECK(row.classical_s ==
            doctest::Approx(1000.0 * std::exp2(row.max_n) / 1e9));
      CHECK(row.speedup == doctest::Approx(row.classical_s / row.quantum_s));
    }
  }
  CHECK_THROWS_AS(idealized_speedup(regimes()[0], 0.5),
                  std::invalid_argument);
}

TEST_CASE("fit registry defaults cover both problems at every clause width") {
  FitRegistry reg = FitRegistry::defaults();
  for (int k = 3; k <= 15; ++k) {
    CHECK(reg.has("sat_runtime", k));
    CHECK(reg.has("sat_tree", k));
  }
  CHECK(reg.has("colouring", 0));
  CHECK(reg.has("colouring_p90", 0));
  CHECK(reg.has("colouring_runtime", 0));
  CHECK(reg.get("sat_tree", 12).slope == doctest::Approx(0.75));
  CHECK(reg.get("sat_tree", 12).intercept == doctest::Approx(3.68));
  CHECK(reg.get("colouring", 0).slope == doctest::Approx(0.40));
  // Runtime line folds the per-node cost into the intercept.
  CHECK(reg.get("colouring_runtime", 0).intercept ==
        doctest::Approx(-7.43 + std::log2(2.5e-6)));
  CHECK(!reg.has("sat_tree", 2));
  CHECK_THROWS_AS(reg.get("sat_tree", 2), std::out_of_range);
}

TEST_CASE("fit registry round-trips through csv and accepts overrides") {
  FitRegistry reg = FitRegistry::defaults();
  reg.set({"sat_tree", 12, 0.77, 3.10, "log2_nodes", "measured"});
  std::filesystem::path path = "pipeline_fits_tmp.csv";
  reg.save_csv(path);
  FitRegistry back = FitRegistry::load_csv(path);
  CHECK(back.lines().size() == reg.lines().size());
  CHECK(back.get("sat_tree", 12).slope == doctest::Approx(0.77));
  CHECK(back.get("sat_tree", 12).source == "measured");
  CHECK(back.get("sat_runtime", 9).intercept == doctest::Approx(-13.51));
  std::filesystem::remove(path);
}

TEST_CASE("shipped fits file matches the built-in defaults") {
  FitRegistry file = FitRegistry::load_csv(repo_data("fits.csv"));
  FitRegistry built = FitRegistry::defaults();
  REQUIRE(file.lines().size() == built.lines().size());
  for (const auto& line : built.lines()) {
    REQUIRE(file.has(line.problem, line.k));
    const FitLine& other = file.get(line.problem, line.k);
    CHECK(other.slope == doctest::Approx(line.slope));
    CHECK(other.intercept == doctest::Approx(line.intercept).epsilon(1e-4));
    CHECK(other.units == line.units);
  }
}

TEST_CASE("fit csv loader rejects malformed files") {
  std::filesystem::path path = "pipeline_bad_tmp.csv";
  {
    std::ofstream out(path);
    out << "wrong,header\n";
  }
  CHECK_THROWS_AS(FitRegistry::load_csv(path), std::runtime_error);
  {
    std::ofstream out(path);
    out << "problem,k,slope,intercept,units,source\n";
    out << "sat_tree,notanumber,0.5,1.0,log2_nodes,reference\n";
  }
  bool threw = false;
  try {
    FitRegistry::load_csv(path);
  } catch (const std::runtime_error& e) {
    threw = true;
    CHECK(std::string(e.what()).find(":2:") != std::string::npos);
  }
  CHECK(threw);
  std::filesystem::remove(path);
}

TEST_CASE("classical runtime follows the registry fit") {
  FitRegistry reg = FitRegistry::defaults();
  CHECK(classical_seconds(reg, walk::Problem::kSat, 12, 50) ==
        doctest::Approx(std::exp2(0.56 * 50 - 10.86)));
  CHECK(classical_seconds(reg, walk::Problem::kColouring, 0, 100) ==
        doctest::Approx(std::exp2(0.40 * 100 - 7.43 + std::log2(2.5e-6))));
}

TEST_CASE("grover estimate report repackages the module output unchanged") {
  FitRegistry reg = FitRegistry::defaults();
  AlgorithmSpec spec{Algorithm::kGrover, walk::Problem::kSat, 12};
  const Regime& regime = regime_by_name("Realistic");
  EstimateReport r = estimate_at(spec, 30, regime, reg);

  Count m{instances::clauses_at_threshold(12, 30)};
  CHECK(r.m == m);
  grover::Estimate g = grover::estimate(30, 12, m);
  CHECK(r.total == g.total);
  CHECK(r.magic_states ==
        doctest::Approx(g.total.total_count().to_double()));
  CHECK(r.quantum_s ==
        doctest::Approx(r.total.t_depth.to_double() * regime.measurement_s));
  CHECK(r.t_algo_cycles == doctest::Approx(r.quantum_s / regime.cycle_s));
  CHECK(r.classical_s ==
        doctest::Approx(classical_seconds(reg, walk::Problem::kSat, 12, 30)));
  CHECK(r.speedup == doctest::Approx(r.classical_s / r.quantum_s));

  // Factory sized for exactly this run's magic states and error rate.
  factory::FactoryReport f = factory::design_factory(
      factory::FactoryKind::kToffoli, r.magic_states, regime.gate_error);
  CHECK(r.factory.space_time == f.space_time);
  CHECK(r.factory_qubits ==
        doctest::Approx(factory::factory_qubits(f, r.t_algo_cycles)));
}

TEST_CASE("backtracking estimate reports repackage the walk totals") {
  FitRegistry reg = FitRegistry::defaults();
  const Regime& regime = regime_by_name("Plausible");

  AlgorithmSpec sat{Algorithm::kBacktracking, walk::Problem::kSat, 12};
  EstimateReport rs = estimate_at(sat, 40, regime, reg);
  walk::BacktrackingEstimate es = walk::backtracking_estimate(
      walk::Problem::kSat, 40, 12,
      Count{instances::clauses_at_threshold(12, 40)}, 0.75, 3.68);
  CHECK(rs.total == es.total);
  CHECK(rs.k == 12);

  AlgorithmSpec col{Algorithm::kBacktracking, walk::Problem::kColouring, 0};
  EstimateReport rc = estimate_at(col, 60, regime, reg);
  CHECK(rc.k == instances::colours_for(60));
  walk::BacktrackingEstimate ec = walk::backtracking_estimate(
      walk::Problem::kColouring, 60, rc.k, Count{}, 0.40, -7.43);
  CHECK(rc.total == ec.total);
  CHECK(rc.m == Count{});
}

TEST_CASE("grover only speeds up SAT searches") {
  FitRegistry reg = FitRegistry::defaults();
  AlgorithmSpec bad{Algorithm::kGrover, walk::Problem::kColouring, 0};
  CHECK_THROWS_AS(estimate_at(bad, 30, regime_by_name("Realistic"), reg),
                  std::invalid_argument);
}

TEST_CASE("max instance saturates the one-day budget") {
  FitRegistry reg = FitRegistry::defaults();
  AlgorithmSpec spec{Algorithm::kGrover, walk::Problem::kSat, 14};
  const Regime& regime = regime_by_name("Realistic");
  EstimateReport best = max_instance(spec, regime, reg);
  CHECK(best.quantum_s <= kSecondsPerDay);
  EstimateReport next = estimate_at(spec, best.n + 1, regime, reg);
  CHECK(next.quantum_s > kSecondsPerDay);
  CHECK(best.n == 65);  // frozen reference point
}

TEST_CASE("decode cost is linear in states and spacetime volume") {
  double base = decode_cost_processor_days(1e12, 4e7, 1.0);
  CHECK(decode_cost_processor_days(2e12, 4e7, 1.0) ==
        doctest::Approx(2.0 * base));
  CHECK(decode_cost_processor_days(1e12, 8e7, 1.0) ==
        doctest::Approx(2.0 * base));
  CHECK(decode_cost_processor_days(1e12, 4e7, 100.0) ==
        doctest::Approx(base / 100.0));
  // 8.8e-8 CPU-seconds per qubit-cycle, converted to days.
  CHECK(base == doctest::Approx(1e12 * 4e7 * 8.8e-8 / 86400.0));
  CHECK_THROWS_AS(decode_cost_processor_days(1e12, 4e7, 0.0),
                  std::invalid_argument);
}

TEST_CASE("decode cell pairs the factory volume with the regime decoder") {
  const Regime& regime = regime_by_name("Plausible");
  DecodeCell cell = decode_cost_cell(1e12, regime);
  factory::FactoryReport rep = factory::design_factory(
      factory::FactoryKind::kToffoli, 1e12, regime.gate_error);
  CHECK(cell.space_time == rep.space_time);
  CHECK(cell.processor_days ==
        doctest::Approx(decode_cost_processor_days(
            1e12, rep.space_time.to_double(), regime.decode_speedup)));
  CHECK(cell.regime == "Plausible");
}
