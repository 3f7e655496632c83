#include "qcsp/pipeline.hpp"

#include <cmath>
#include <fstream>
#include <future>
#include <sstream>
#include <stdexcept>

#include "qcsp/grover.hpp"
#include "qcsp/instances.hpp"

namespace qcsp::pipeline {

namespace {

constexpr double kDecodeSecondsPerQubitCycle = 8.8e-8;

std::string line_error(const std::filesystem::path& path, int line,
                       const std::string& msg) {
  std::ostringstream os;
  os << path.string() << ":" << line << ": " << msg;
  return os.str();
}

}  // namespace

const std::vector<Regime>& regimes() {
  static const std::vector<Regime> kRegimes = {
      {"Realistic", 50e-9, 30e-9, 200e-9, 1e-3, 1.0},
      {"Plausible", 5e-9, 3e-9, 20e-9, 1e-4, 100.0},
      {"Optimistic", 0.5e-9, 0.3e-9, 2e-9, 1e-5, 1e6},
  };
  return kRegimes;
}

const Regime& regime_by_name(std::string_view name) {
  for (const auto& r : regimes()) {
    if (r.name == name) return r;
  }
  throw std::invalid_argument("unknown regime: " + std::string(name));
}

IdealizedRow idealized_speedup(const Regime& regime, double oracle_depth,
                               double classical_cycles_per_eval,
                               double classical_hz) {
  if (!(oracle_depth >= 1.0)) {
    throw std::invalid_argument("idealized_speedup: oracle_depth must be >= 1");
  }
  IdealizedRow row;
  row.regime = regime.name;
  row.oracle_depth = oracle_depth;
  row.max_depth = kSecondsPerDay / regime.gate_s;

  // Largest n with oracle_depth * 2^(n/2) <= max_depth.
  int n = static_cast<int>(
      std::floor(2.0 * std::log2(row.max_depth / oracle_depth)));
  while (n > 0 &&
         oracle_depth * std::exp2(n / 2.0) > row.max_depth) {
    --n;
  }
  while (oracle_depth * std::exp2((n + 1) / 2.0) <= row.max_depth) ++n;
  if (n < 1) throw std::runtime_error("idealized_speedup: no instance fits");

  row.max_n = n;
  row.quantum_s = oracle_depth * std::exp2(n / 2.0) * regime.gate_s;
  row.classical_s = classical_cycles_per_eval * std::exp2(n) / classical_hz;
  row.speedup = row.classical_s / row.quantum_s;
  return row;
}

FitRegistry FitRegistry::defaults() {
  FitRegistry reg;
  // Desktop solver runtime fits, log2 CPU-seconds per instance size.
  static constexpr struct {
    int k;
    double slope, intercept;
  } kSatRuntime[] = {
      {3, 0.03, -4.88},  {4, 0.11, -7.10},  {5, 0.20, -7.85},
      {6, 0.23, -7.38},  {7, 0.34, -9.51},  {8, 0.42, -11.12},
      {9, 0.55, -13.51}, {10, 0.55, -12.96}, {11, 0.55, -12.00},
      {12, 0.56, -10.86}, {13, 0.55, -9.39}, {14, 0.51, -6.55},
      {15, 0.46, -4.38},
  };
  // Backtracking tree sizes with appearance-count variable order, log2 nodes.
  static constexpr struct {
    int k;
    double slope, intercept;
  } kSatTree[] = {
      {3, 0.35, 3.70},  {4, 0.46, 3.65},  {5, 0.54, 3.52},
      {6, 0.60, 3.46},  {7, 0.64, 3.45},  {8, 0.68, 3.43},
      {9, 0.70, 3.46},  {10, 0.72, 3.52}, {11, 0.74, 3.61},
      {12, 0.75, 3.68}, {13, 0.76, 3.81}, {14, 0.78, 3.72},
      {15, 0.79, 3.76},
  };
  for (const auto& r : kSatRuntime) {
    reg.set({"sat_runtime", r.k, r.slope, r.intercept, "log2_seconds",
             "reference"});
  }
  for (const auto& r : kSatTree) {
    reg.set({"sat_tree", r.k, r.slope, r.intercept, "log2_nodes", "reference"});
  }
  reg.set({"colouring", 0, 0.40, -7.43, "log2_nodes", "reference"});
  reg.set({"colouring_p90", 0, 0.42, -6.20, "log2_nodes", "reference"});
  // Node fit folded with 2.5e-6 s/node: -7.43 + log2(2.5e-6).
  reg.set({"colouring_runtime", 0, 0.40, -7.43 + std::log2(2.5e-6),
           "log2_seconds", "reference"});
  return reg;
}

FitRegistry FitRegistry::load_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  FitRegistry reg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (lineno == 1) {
      if (line != "problem,k,slope,intercept,units,source") {
        throw std::runtime_error(line_error(path, 1, "bad header"));
      }
      continue;
    }
    std::istringstream ss(line);
    FitLine fit;
    std::string field;
    if (!std::getline(ss, fit.problem, ',')) {
      throw std::runtime_error(line_error(path, lineno, "missing problem"));
    }
    try {
      if (!std::getline(ss, field, ',')) throw std::invalid_argument("k");
      fit.k = std::stoi(field);
      if (!std::getline(ss, field, ',')) throw std::invalid_argument("slope");
      fit.slope = std::stod(field);
      if (!std::getline(ss, field, ',')) {
        throw std::invalid_argument("intercept");
      }
      fit.intercept = std::stod(field);
    } catch (const std::exception&) {
      throw std::runtime_error(line_error(path, lineno, "bad numeric field"));
    }
    if (!std::getline(ss, fit.units, ',')) {
      throw std::runtime_error(line_error(path, lineno, "missing units"));
    }
    std::getline(ss, fit.source, ',');
    reg.set(std::move(fit));
  }
  return reg;
}

void FitRegistry::save_csv(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "problem,k,slope,intercept,units,source\n";
  for (const auto& f : lines_) {
    out << f.problem << "," << f.k << "," << f.slope << "," << f.intercept
        << "," << f.units << "," << f.source << "\n";
  }
}

const FitLine& FitRegistry::get(std::string_view problem, int k) const {
  for (const auto& f : lines_) {
    if (f.problem == problem && f.k == k) return f;
  }
  throw std::out_of_range("no fit for " + std::string(problem) + " k=" +
                          std::to_string(k));
}

bool FitRegistry::has(std::string_view problem, int k) const {
  for (const auto& f : lines_) {
    if (f.problem == problem && f.k == k) return true;
  }
  return false;
}

void FitRegistry::set(FitLine line) {
  for (auto& f : lines_) {
    if (f.problem == line.problem && f.k == line.k) {
      f = std::move(line);
      return;
    }
  }
  lines_.push_back(std::move(line));
}

double classical_seconds(const FitRegistry& fits, walk::Problem problem,
                         int k, int n) {
  const FitLine& fit = problem == walk::Problem::kSat
                           ? fits.get("sat_runtime", k)
                           : fits.get("colouring_runtime", 0);
  return std::exp2(fit.slope * static_cast<double>(n) + fit.intercept);
}

EstimateReport estimate_at(const AlgorithmSpec& spec, int n,
                           const Regime& regime, const FitRegistry& fits,
                           const gadgets::GadgetTable& table) {
  EstimateReport report;
  report.spec = spec;
  report.regime = regime;
  report.n = n;

  if (spec.algorithm == Algorithm::kGrover) {
    if (spec.problem != walk::Problem::kSat) {
      throw std::invalid_argument("estimate_at: Grover applies to SAT only");
    }
    report.k = spec.k;
    report.m = Count{instances::clauses_at_threshold(spec.k, n)};
    grover::Estimate g = grover::estimate(n, spec.k, report.m);
    report.total = g.total;
  } else if (spec.problem == walk::Problem::kSat) {
    report.k = spec.k;
    report.m = Count{instances::clauses_at_threshold(spec.k, n)};
    const FitLine& tree = fits.get("sat_tree", spec.k);
    walk::BacktrackingEstimate est = walk::backtracking_estimate(
        walk::Problem::kSat, n, spec.k, report.m, tree.slope, tree.intercept,
        0.1, table);
    report.total = est.total;
  } else {
    report.k = instances::colours_for(n);
    report.m = Count{};
    const FitLine& tree = fits.get("colouring", 0);
    walk::BacktrackingEstimate est = walk::backtracking_estimate(
        walk::Problem::kColouring, n, report.k, Count{}, tree.slope,
        tree.intercept, 0.1, table);
    report.total = est.total;
  }

  report.magic_states = report.total.total_count().to_double();
  report.quantum_s = report.total.t_depth.to_double() * regime.measurement_s;
  report.classical_s = classical_seconds(fits, spec.problem, spec.k, n);
  report.speedup = report.classical_s / report.quantum_s;
  report.t_algo_cycles = report.quantum_s / regime.cycle_s;
  report.factory = factory::design_factory(factory::FactoryKind::kToffoli,
                                           report.magic_states,
                                           regime.gate_error);
  report.factory_qubits =
      factory::factory_qubits(report.factory, report.t_algo_cycles);
  return report;
}

EstimateReport max_instance(const AlgorithmSpec& spec, const Regime& regime,
                            const FitRegistry& fits,
                            const gadgets::GadgetTable& table) {
  int n_lo = spec.problem == walk::Problem::kColouring ? 20 : spec.k + 1;
  int n_hi = 300;
  int best = 0;
  for (int n = n_lo; n <= n_hi; ++n) {
    EstimateReport r = estimate_at(spec, n, regime, fits, table);
    if (r.quantum_s <= kSecondsPerDay) best = n;
    // Runtime grows with n; once well past the budget no larger n can fit.
    if (r.quantum_s > 4.0 * kSecondsPerDay) break;
  }
  if (best == 0) {
    throw std::runtime_error("max_instance: no instance fits in one day");
  }
  return estimate_at(spec, best, regime, fits, table);
}

std::vector<EstimateReport> sweep_regimes(const AlgorithmSpec& spec,
                                          const FitRegistry& fits,
                                          const gadgets::GadgetTable& table) {
  std::vector<std::future<EstimateReport>> futures;
  for (const auto& regime : regimes()) {
    futures.push_back(std::async(std::launch::async, [&spec, &regime, &fits,
                                                      &table] {
      return max_instance(spec, regime, fits, table);
    }));
  }
  std::vector<EstimateReport> out;
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

double decode_cost_processor_days(double n_toffoli, double space_time,
                                  double decode_speedup) {
  if (!(decode_speedup > 0.0)) {
    throw std::invalid_argument("decode_cost: decode_speedup must be > 0");
  }
  return n_toffoli * space_time * kDecodeSecondsPerQubitCycle /
         decode_speedup / kSecondsPerDay;
}

DecodeCell decode_cost_cell(double n_toffoli, const Regime& regime) {
  DecodeCell cell;
  cell.n_toffoli = n_toffoli;
  cell.regime = regime.name;
  factory::FactoryReport rep = factory::design_factory(
      factory::FactoryKind::kToffoli, n_toffoli, regime.gate_error);
  cell.space_time = rep.space_time;
  cell.processor_days = decode_cost_processor_days(
      n_toffoli, rep.space_time.to_double(), regime.decode_speedup);
  return cell;
}

}  // namespace qcsp::pipeline
