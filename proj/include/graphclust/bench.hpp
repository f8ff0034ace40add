#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "graphclust/graph.hpp"

namespace graphclust {

/// Algorithms the harness can time.
inline const std::vector<std::string>& bench_algorithms() {
  static const std::vector<std::string> names{"lpa", "lpa-score", "llp", "louvain"};
  return names;
}

struct BenchConfig {
  std::string algorithm = "lpa";
  std::string dataset = "graph";
  std::vector<unsigned> workers{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  unsigned reps = 10;
  std::uint64_t seed = 42;
  std::uint32_t max_iterations = 10;
  bool speedup = true;  ///< requires W = 1 among workers
};

struct BenchRow {
  std::string algorithm;
  std::string dataset;
  unsigned workers;
  unsigned rep;
  double elapsed_seconds;
  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

struct WorkerStats {
  unsigned workers;
  double mean;
  double std_dev;  ///< sample (n - 1) standard deviation; 0 for a single repetition
};

struct SpeedupPoint {
  unsigned workers;
  double speedup;
};

struct BenchTable {
  std::vector<BenchRow> rows;
  std::vector<WorkerStats> stats;
  std::vector<SpeedupPoint> speedups;  ///< empty when speedup was not requested
};

/// Returns the elapsed seconds of one timed run.
using RunTimer = std::function<double(unsigned workers, unsigned rep)>;

/// Checks the worker list and repetition count; throws ParameterError / ContractError.
void validate(const BenchConfig& cfg);

/// Runs cfg.algorithm reps times for each worker count on g. Only the algorithm's own loop is
/// timed; graph loading is excluded. Throws ParameterError for unknown algorithms.
BenchTable run_benchmark(const BenchConfig& cfg, const UndirectedGraph& g);

/// Same protocol with an injected timer, e.g. for deterministic tests.
BenchTable run_benchmark(const BenchConfig& cfg, const RunTimer& timer);

/// Per-W means, sample standard deviations and speedups mean(1)/mean(W) from raw rows
/// (rows of one algorithm and dataset).
BenchTable summarize(std::vector<BenchRow> rows, bool speedup = true);

double mean(const std::vector<double>& xs);
double sample_std_dev(const std::vector<double>& xs);

/// phi(W) = 1 / ((1 - P) + P / W). Throws ParameterError outside 0 <= P <= 1, W >= 1.
double amdahl_speedup(double parallel_fraction, double workers);

struct AmdahlFit {
  double parallel_fraction;
  double residual;  ///< sum of squared speedup errors
};

/// Least-squares P over [0, 1]: grid search at step 1e-5, then ternary refinement around the
/// best grid point. Needs >= 2 points with distinct W and positive speedups.
AmdahlFit fit_parallel_fraction(const std::vector<std::pair<double, double>>& points);
AmdahlFit fit_parallel_fraction(const std::vector<SpeedupPoint>& points);

/// Writes raw.csv ("algorithm,dataset,workers,rep,elapsed_seconds"), time.dat ("W mean std_dev")
/// and speedup.dat ("W phi_measured phi_fit") into out_dir.
void emit_plot_data(const BenchTable& table, const AmdahlFit& fit, const std::filesystem::path& out_dir);

/// CSV writer/reader for the raw rows; the reader accepts what the writer produces.
std::string format_bench_csv(const std::vector<BenchRow>& rows);
std::vector<BenchRow> parse_bench_csv(const std::string& text);
std::vector<BenchRow> read_bench_csv(const std::filesystem::path& path);

/// Shortest round-trip decimal form, always with a '.' or exponent ("1.0", "0.25", "1e-07").
std::string format_real(double x);

}  // namespace graphclust
