#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qcsp/factory.hpp"
#include "qcsp/gadgets.hpp"
#include "qcsp/resources.hpp"
#include "qcsp/walk.hpp"

namespace qcsp::pipeline {

struct Regime {
  std::string name;
  double measurement_s = 0.0;
  double gate_s = 0.0;
  double cycle_s = 0.0;       // one surface-code cycle
  double gate_error = 0.0;
  double decode_speedup = 1.0;  // decoder throughput vs a single CPU
};

// Realistic, Plausible, Optimistic hardware assumptions.
const std::vector<Regime>& regimes();
const Regime& regime_by_name(std::string_view name);

constexpr double kSecondsPerDay = 86400.0;

// Square-root search with no fault-tolerance overhead: depth budget set by
// the 2-qubit gate time alone, classical baseline 1000 cycles/evaluation on
// a 1 GHz machine.
struct IdealizedRow {
  std::string regime;
  double oracle_depth = 0.0;
  double max_depth = 0.0;  // gate layers executable in one day
  int max_n = 0;
  double quantum_s = 0.0;
  double classical_s = 0.0;
  double speedup = 0.0;
};

IdealizedRow idealized_speedup(const Regime& regime, double oracle_depth,
                               double classical_cycles_per_eval = 1000.0,
                               double classical_hz = 1e9);

// Scaling fits 2^(slope*n + intercept). Units say what is being counted;
// source records whether the line ships with the tool or was measured here.
struct FitLine {
  std::string problem;  // "sat_tree", "sat_runtime", "colouring", ...
  int k = 0;            // clause width; 0 where not applicable
  double slope = 0.0;
  double intercept = 0.0;
  std::string units;
  std::string source;  // "reference" or "measured"
};

class FitRegistry {
 public:
  static FitRegistry defaults();
  static FitRegistry load_csv(const std::filesystem::path& path);
  void save_csv(const std::filesystem::path& path) const;

  const FitLine& get(std::string_view problem, int k) const;
  bool has(std::string_view problem, int k) const;
  void set(FitLine line);  // replaces any line with the same (problem, k)
  const std::vector<FitLine>& lines() const { return lines_; }

 private:
  std::vector<FitLine> lines_;
};

// Seconds a desktop solver needs at size n, per the registry's runtime fits.
double classical_seconds(const FitRegistry& fits, walk::Problem problem,
                         int k, int n);

enum class Algorithm { kGrover, kBacktracking };

struct AlgorithmSpec {
  Algorithm algorithm = Algorithm::kBacktracking;
  walk::Problem problem = walk::Problem::kSat;
  int k = 12;  // clause width for SAT; ignored for colouring
};

struct EstimateReport {
  AlgorithmSpec spec;
  Regime regime;
  int n = 0;
  int k = 0;  // colours (colouring) or clause width (SAT)
  Count m;    // clauses; zero for colouring
  Resources total;
  double magic_states = 0.0;
  double quantum_s = 0.0;
  double classical_s = 0.0;
  double speedup = 0.0;
  double t_algo_cycles = 0.0;
  factory::FactoryReport factory;
  double factory_qubits = 0.0;
};

// Full resource estimate for one instance size under one regime.
EstimateReport estimate_at(
    const AlgorithmSpec& spec, int n, const Regime& regime,
    const FitRegistry& fits,
    const gadgets::GadgetTable& table = gadgets::GadgetTable::defaults());

// Largest n whose quantum runtime fits in one day, with its full report.
EstimateReport max_instance(
    const AlgorithmSpec& spec, const Regime& regime, const FitRegistry& fits,
    const gadgets::GadgetTable& table = gadgets::GadgetTable::defaults());

// All three regimes, evaluated concurrently, ordered as regimes().
std::vector<EstimateReport> sweep_regimes(
    const AlgorithmSpec& spec, const FitRegistry& fits,
    const gadgets::GadgetTable& table = gadgets::GadgetTable::defaults());

// Processor-days of surface-code decoding for n_toffoli magic states of
// spacetime cost space_time each, at 8.8e-8 CPU-seconds per qubit-cycle.
double decode_cost_processor_days(double n_toffoli, double space_time,
                                  double decode_speedup);

struct DecodeCell {
  double n_toffoli = 0.0;
  std::string regime;
  Count space_time;
  double processor_days = 0.0;
};

DecodeCell decode_cost_cell(double n_toffoli, const Regime& regime);

}  // namespace qcsp::pipeline
