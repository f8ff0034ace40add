#include "graphclust/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "graphclust/error.hpp"
#include "graphclust/graph_io.hpp"
#include "graphclust/labelprop.hpp"
#include "graphclust/louvain.hpp"
#include "graphclust/rng.hpp"

namespace graphclust {

namespace {

constexpr const char* kCsvHeader = "algorithm,dataset,workers,rep,elapsed_seconds";

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  if (quoted) throw ParseError(line_no, "unterminated quoted field");
  fields.push_back(std::move(field));
  return fields;
}

template <typename T>
T parse_field(const std::string& s, std::size_t line_no, const char* what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line_no, std::string("invalid ") + what + " '" + s + "'");
  }
  return value;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::string format_real(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  std::string s(buf, ptr);
  if (std::isfinite(x) && s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

double mean(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

double sample_std_dev(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  const double mu = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - mu) * (x - mu);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

void validate(const BenchConfig& cfg) {
  if (cfg.workers.empty()) throw ParameterError("worker list is empty");
  if (cfg.reps < 1) throw ParameterError("repetitions must be at least 1");
  for (std::size_t i = 0; i < cfg.workers.size(); ++i) {
    if (cfg.workers[i] < 1) throw ParameterError("worker counts must be positive");
    if (i > 0 && cfg.workers[i] <= cfg.workers[i - 1]) throw ParameterError("worker counts must be strictly increasing");
  }
  if (cfg.speedup && cfg.workers.front() != 1) throw ContractError("speedup needs a W = 1 baseline");
}

BenchTable run_benchmark(const BenchConfig& cfg, const RunTimer& timer) {
  validate(cfg);
  std::vector<BenchRow> rows;
  rows.reserve(cfg.workers.size() * cfg.reps);
  for (unsigned w : cfg.workers) {
    for (unsigned rep = 0; rep < cfg.reps; ++rep) {
      rows.push_back({cfg.algorithm, cfg.dataset, w, rep, timer(w, rep)});
    }
  }
  return summarize(std::move(rows), cfg.speedup);
}

BenchTable run_benchmark(const BenchConfig& cfg, const UndirectedGraph& g) {
  const auto& known = bench_algorithms();
  if (std::find(known.begin(), known.end(), cfg.algorithm) == known.end()) {
    throw ParameterError("unknown algorithm '" + cfg.algorithm + "'");
  }
  const std::string algorithm = cfg.algorithm;
  RunTimer timer = [&](unsigned w, unsigned rep) -> double {
    const std::uint64_t seed = hash_keys(cfg.seed, {rep});
    if (algorithm == "lpa") return lpa_basic(g, {cfg.max_iterations, 0.5, seed}, w).stats.elapsed_seconds;
    if (algorithm == "lpa-score") return lpa_scored(g, {cfg.max_iterations, 0.5, seed}, w).stats.elapsed_seconds;
    const auto start = std::chrono::steady_clock::now();
    if (algorithm == "llp") {
      LlpConfig llp_cfg;
      llp_cfg.inner_max_iterations = cfg.max_iterations;
      llp_cfg.seed = seed;
      (void)llp(g, llp_cfg, w);
    } else {
      LouvainConfig louvain_cfg;
      louvain_cfg.seed = seed;
      (void)louvain(g, louvain_cfg);
    }
    return seconds_since(start);
  };
  return run_benchmark(cfg, timer);
}

BenchTable summarize(std::vector<BenchRow> rows, bool speedup) {
  BenchTable table;
  std::map<unsigned, std::vector<double>> by_workers;
  for (const auto& r : rows) by_workers[r.workers].push_back(r.elapsed_seconds);
  for (const auto& [w, times] : by_workers) table.stats.push_back({w, mean(times), sample_std_dev(times)});
  if (speedup && !table.stats.empty()) {
    if (table.stats.front().workers != 1) throw ContractError("speedup needs a W = 1 baseline");
    const double base = table.stats.front().mean;
    for (const auto& s : table.stats) table.speedups.push_back({s.workers, s.workers == 1 ? 1.0 : base / s.mean});
  }
  table.rows = std::move(rows);
  return table;
}

double amdahl_speedup(double parallel_fraction, double workers) {
  if (!(parallel_fraction >= 0.0 && parallel_fraction <= 1.0)) throw ParameterError("P must lie in [0, 1]");
  if (!(workers >= 1.0)) throw ParameterError("W must be at least 1");
  if (workers == 1.0) return 1.0;
  return 1.0 / ((1.0 - parallel_fraction) + parallel_fraction / workers);
}

AmdahlFit fit_parallel_fraction(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) throw ParameterError("fitting needs at least two (W, speedup) points");
  std::set<double> distinct;
  for (const auto& [w, phi] : points) {
    if (!(w >= 1.0)) throw ParameterError("worker counts must be at least 1");
    if (!(phi > 0.0)) throw ParameterError("speedups must be positive");
    if (!distinct.insert(w).second) throw ParameterError("worker counts must be distinct");
  }
  const auto residual = [&](double p) {
    double sse = 0.0;
    for (const auto& [w, phi] : points) {
      const double e = phi - 1.0 / ((1.0 - p) + p / w);
      sse += e * e;
    }
    return sse;
  };

  constexpr int kSteps = 100000;
  constexpr double kStep = 1.0 / kSteps;
  double best_p = 0.0;
  double best_r = residual(0.0);
  for (int i = 1; i <= kSteps; ++i) {
    const double p = i * kStep;
    const double r = residual(p);
    if (r < best_r) {
      best_r = r;
      best_p = p;
    }
  }

  double lo = std::max(0.0, best_p - kStep);
  double hi = std::min(1.0, best_p + kStep);
  for (int it = 0; it < 100; ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (residual(m1) < residual(m2)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  const double refined = 0.5 * (lo + hi);
  if (residual(refined) < best_r) {
    best_p = refined;
    best_r = residual(refined);
  }
  return {best_p, best_r};
}

AmdahlFit fit_parallel_fraction(const std::vector<SpeedupPoint>& points) {
  std::vector<std::pair<double, double>> xy;
  xy.reserve(points.size());
  for (const auto& s : points) xy.emplace_back(static_cast<double>(s.workers), s.speedup);
  return fit_parallel_fraction(xy);
}

std::string format_bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& r : rows) {
    out += csv_field(r.algorithm) + "," + csv_field(r.dataset) + "," + std::to_string(r.workers) + "," +
           std::to_string(r.rep) + "," + format_real(r.elapsed_seconds) + "\n";
  }
  return out;
}

std::vector<BenchRow> parse_bench_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::vector<BenchRow> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1) {
      if (line != kCsvHeader) throw ParseError(1, std::string("expected header '") + kCsvHeader + "'");
      continue;
    }
    if (line.empty()) continue;
    const auto f = split_csv_line(line, line_no);
    if (f.size() != 5) throw ParseError(line_no, "expected 5 fields");
    rows.push_back({f[0], f[1], parse_field<unsigned>(f[2], line_no, "worker count"),
                    parse_field<unsigned>(f[3], line_no, "repetition"), parse_field<double>(f[4], line_no, "seconds")});
  }
  if (line_no == 0) throw ParseError(1, "empty CSV");
  return rows;
}

std::vector<BenchRow> read_bench_csv(const std::filesystem::path& path) { return parse_bench_csv(read_text_file(path)); }

void emit_plot_data(const BenchTable& table, const AmdahlFit& fit, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create '" + out_dir.string() + "': " + ec.message());

  auto write = [&](const std::string& name, const std::string& content) {
    const auto path = out_dir / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("failed writing '" + path.string() + "'");
  };

  write("raw.csv", format_bench_csv(table.rows));

  std::string time_dat;
  for (const auto& s : table.stats) {
    time_dat += std::to_string(s.workers) + " " + format_real(s.mean) + " " + format_real(s.std_dev) + "\n";
  }
  write("time.dat", time_dat);

  std::string speedup_dat;
  for (const auto& s : table.speedups) {
    speedup_dat += std::to_string(s.workers) + " " + format_real(s.speedup) + " " +
                   format_real(amdahl_speedup(fit.parallel_fraction, s.workers)) + "\n";
  }
  write("speedup.dat", speedup_dat);
}

}  // namespace graphclust
