#include "qcsp/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qcsp::experiments {

namespace {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

std::uint64_t stream_for(int n, int instance) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(n)) << 32) |
         static_cast<std::uint32_t>(instance);
}

// Runs job(n_index, instance_index) over the grid on a small pool. Each job
// writes only to its own output slots, so results are deterministic
// regardless of scheduling.
template <typename Job>
void run_grid(int n_points, int instances, int threads, Job&& job) {
  std::atomic<int> next{0};
  int total = n_points * instances;
  auto worker = [&] {
    for (;;) {
      int idx = next.fetch_add(1);
      if (idx >= total) return;
      job(idx / instances, idx % instances);
    }
  };
  int nthreads = std::min(resolve_threads(threads), std::max(total, 1));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(nthreads));
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

std::vector<ExperimentRow> run_dsatur_experiment(const ExperimentConfig& cfg,
                                                 double p,
                                                 bool with_simplified) {
  if (cfg.instances < 1) throw std::invalid_argument("instances must be >= 1");
  int per = with_simplified ? 2 : 1;
  std::vector<ExperimentRow> rows(cfg.ns.size() *
                                  static_cast<std::size_t>(cfg.instances) *
                                  static_cast<std::size_t>(per));
  run_grid(static_cast<int>(cfg.ns.size()), cfg.instances, cfg.threads,
           [&](int ni, int ii) {
             int n = cfg.ns[static_cast<std::size_t>(ni)];
             CounterRng rng(cfg.seed, stream_for(n, ii));
             auto g = instances::gen_gnp(n, p, rng);
             auto t0 = std::chrono::steady_clock::now();
             auto chromatic = classical::dsatur_chromatic(g);
             // Both rows refute (chi - 1)-colourability: the same tree the
             // quantum walk runs on, so node counts stay comparable.
             auto decision = classical::dsatur_colourable(
                 g, chromatic.chromatic_number - 1);
             std::size_t slot =
                 (static_cast<std::size_t>(ni) *
                      static_cast<std::size_t>(cfg.instances) +
                  static_cast<std::size_t>(ii)) *
                 static_cast<std::size_t>(per);
             rows[slot] = ExperimentRow{
                 "dsatur", n, p, static_cast<std::uint64_t>(g.edges.size()),
                 cfg.seed, decision.nodes, decision.found, elapsed_ms(t0)};
             if (with_simplified) {
               auto t1 = std::chrono::steady_clock::now();
               auto simpl = classical::dsatur_colourable_simplified(
                   g, chromatic.chromatic_number - 1);
               rows[slot + 1] = ExperimentRow{
                   "dsatur_simplified", n, p,
                   static_cast<std::uint64_t>(g.edges.size()), cfg.seed,
                   simpl.nodes, simpl.found, elapsed_ms(t1)};
             }
           });
  return rows;
}

std::vector<ExperimentRow> run_sat_experiment(const ExperimentConfig& cfg,
                                              int k) {
  if (cfg.instances < 1) throw std::invalid_argument("instances must be >= 1");
  std::vector<ExperimentRow> rows(cfg.ns.size() *
                                  static_cast<std::size_t>(cfg.instances));
  run_grid(static_cast<int>(cfg.ns.size()), cfg.instances, cfg.threads,
           [&](int ni, int ii) {
             int n = cfg.ns[static_cast<std::size_t>(ni)];
             std::uint64_t m = instances::clauses_at_threshold(k, n);
             CounterRng rng(cfg.seed, stream_for(n, ii));
             auto f = instances::gen_ksat(n, k, m, rng);
             auto t0 = std::chrono::steady_clock::now();
             auto stats = classical::sat_backtrack(f);
             rows[static_cast<std::size_t>(ni) *
                      static_cast<std::size_t>(cfg.instances) +
                  static_cast<std::size_t>(ii)] =
                 ExperimentRow{"ksat",       n,           static_cast<double>(k),
                               m,            cfg.seed,    stats.nodes,
                               stats.found,  elapsed_ms(t0)};
           });
  return rows;
}

void write_csv(const std::string& path,
               const std::vector<ExperimentRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "kind,n,k_or_p,m,seed,nodes,found,wall_ms\n";
  for (const auto& r : rows) {
    out << r.kind << ',' << r.n << ',' << r.k_or_p << ',' << r.m << ','
        << r.seed << ',' << r.nodes << ',' << (r.found ? 1 : 0) << ','
        << r.wall_ms << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<ExperimentRow> read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error(path + ": empty file");
  }
  if (line != "kind,n,k_or_p,m,seed,nodes,found,wall_ms") {
    throw std::runtime_error(path + ":1: unexpected header");
  }
  std::vector<ExperimentRow> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ss(line);
    ExperimentRow r;
    std::string field;
    auto next = [&](const char* what) {
      if (!std::getline(ss, field, ',')) {
        throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                 ": missing field " + what);
      }
      return field;
    };
    r.kind = next("kind");
    r.n = std::stoi(next("n"));
    r.k_or_p = std::stod(next("k_or_p"));
    r.m = std::stoull(next("m"));
    r.seed = std::stoull(next("seed"));
    r.nodes = std::stoull(next("nodes"));
    r.found = std::stoi(next("found")) != 0;
    r.wall_ms = std::stod(next("wall_ms"));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<std::pair<int, double>> medians_by_n(
    const std::vector<ExperimentRow>& rows, const std::string& kind) {
  std::vector<std::pair<int, std::vector<std::uint64_t>>> groups;
  for (const auto& r : rows) {
    if (r.kind != kind) continue;
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == r.n; });
    if (it == groups.end()) {
      groups.emplace_back(r.n, std::vector<std::uint64_t>{r.nodes});
    } else {
      it->second.push_back(r.nodes);
    }
  }
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<int, double>> out;
  for (auto& [n, v] : groups) {
    std::sort(v.begin(), v.end());
    std::size_t mid = v.size() / 2;
    double med = (v.size() % 2 == 1)
                     ? static_cast<double>(v[mid])
                     : (static_cast<double>(v[mid - 1]) +
                        static_cast<double>(v[mid])) /
                           2.0;
    out.emplace_back(n, med);
  }
  return out;
}

FitResult fit_scaling(const std::vector<std::pair<int, double>>& medians) {
  if (medians.size() < 2) {
    throw std::invalid_argument("fit_scaling: need at least 2 points");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (auto [n, med] : medians) {
    if (!(med > 0)) throw std::invalid_argument("fit_scaling: median must be > 0");
    double x = n, y = std::log2(med);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  double m = static_cast<double>(medians.size());
  double denom = m * sxx - sx * sx;
  if (denom == 0) throw std::invalid_argument("fit_scaling: degenerate x values");
  FitResult fit;
  fit.points = static_cast<int>(medians.size());
  fit.slope = (m * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / m;
  double ss_tot = syy - sy * sy / m;
  double ss_res = 0;
  for (auto [n, med] : medians) {
    double e = std::log2(med) - (fit.slope * n + fit.intercept);
    ss_res += e * e;
  }
  fit.r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

}  // namespace qcsp::experiments
