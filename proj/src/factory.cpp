#include "qcsp/factory.hpp"

#include <cmath>
#include <stdexcept>

namespace qcsp::factory {

namespace {

constexpr int kMaxRounds = 25;
constexpr int kMaxDistance = 4096;

// Smallest code distance d with factor * d * (100 p)^((d+1)/2) <= tol.
// The left side is strictly decreasing in d for 100 p <= 1/10, so a linear
// scan finds the minimum.
int min_distance(long double factor, long double gate_error, long double tol) {
  long double q = 100.0L * gate_error;
  for (int d = 1; d <= kMaxDistance; ++d) {
    long double failure =
        factor * static_cast<long double>(d) *
        std::pow(q, (static_cast<long double>(d) + 1.0L) / 2.0L);
    if (failure <= tol) return d;
  }
  throw std::runtime_error("design_factory: no distance meets the tolerance");
}

std::uint64_t halve(std::uint64_t qubits, Layout layout) {
  return layout == Layout::kHalved ? qubits / 2 : qubits;
}

}  // namespace

FactoryReport design_factory(FactoryKind kind, double n_states,
                             double gate_error, Layout layout) {
  if (!(gate_error > 0.0) || gate_error >= 1.0 / 100.0) {
    throw std::invalid_argument(
        "design_factory: gate_error must be in (0, 1/100)");
  }
  if (!(n_states >= 1.0)) {
    throw std::invalid_argument("design_factory: n_states must be >= 1");
  }

  FactoryReport report;
  report.kind = kind;
  report.layout = layout;
  report.gate_error = gate_error;
  report.n_states = n_states;

  long double p_g = static_cast<long double>(gate_error);
  long double p_tol = 1.0L / (3.0L * static_cast<long double>(n_states));

  if (kind == FactoryKind::kToffoli) {
    // Output round converting eight T states per Toffoli, with its own
    // tighter distance requirement.
    int d = min_distance(99.0L, p_g, p_tol);
    RoundSpec head;
    head.distance = d;
    head.qubits = halve(static_cast<std::uint64_t>(44) * d * (d - 1), layout);
    head.cycles = static_cast<std::uint64_t>(9) * d;
    head.tolerance = static_cast<double>(p_tol);
    report.rounds.push_back(head);
    p_tol = std::sqrt(p_tol / 28.0L);
  }

  // 15-to-1 rounds, outermost first; each earlier round relaxes the input
  // requirement cubically until raw injected states suffice.
  do {
    if (static_cast<int>(report.rounds.size()) >= kMaxRounds) {
      throw std::runtime_error("design_factory: round cap exceeded");
    }
    int d = min_distance(250.0L, p_g, p_tol);
    std::size_t index = report.rounds.size();  // 0-based over all rounds
    std::uint64_t copies = 1;
    if (kind == FactoryKind::kToffoli) {
      copies = 8;
      for (std::size_t j = 1; j < index; ++j) copies *= 15;
    } else {
      for (std::size_t j = 0; j < index; ++j) copies *= 15;
    }
    RoundSpec round;
    round.distance = d;
    round.qubits =
        halve(copies * static_cast<std::uint64_t>(100) * d * (d - 1), layout);
    round.cycles = static_cast<std::uint64_t>(10) * d;
    round.tolerance = static_cast<double>(p_tol);
    report.rounds.push_back(round);
    p_tol = std::cbrt(p_tol / 36.0L);
  } while (p_tol < p_g);

  Count total{};
  for (const auto& r : report.rounds) {
    total += Count{r.qubits} * Count{r.cycles};
  }
  report.space_time = total;
  return report;
}

double factory_qubits(const FactoryReport& report, double t_algo_cycles) {
  if (!(t_algo_cycles > 0.0)) {
    throw std::invalid_argument("factory_qubits: t_algo_cycles must be > 0");
  }
  return report.n_states * report.space_time.to_double() / t_algo_cycles;
}

}  // namespace qcsp::factory
