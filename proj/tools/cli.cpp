#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "graphclust/bench.hpp"
#include "graphclust/classic.hpp"
#include "graphclust/error.hpp"
#include "graphclust/graph_io.hpp"
#include "graphclust/labelprop.hpp"
#include "graphclust/louvain.hpp"
#include "graphclust/metrics.hpp"

namespace graphclust::cli {

namespace {

namespace fs = std::filesystem;

/// Relative input paths are resolved against $GRAPHCLUST_DATA when it is set.
fs::path input_path(const std::string& p) {
  fs::path path(p);
  if (path.is_relative()) {
    if (const char* root = std::getenv("GRAPHCLUST_DATA"); root != nullptr && *root != '\0') return fs::path(root) / path;
  }
  return path;
}

void print_modularity(std::ostream& out, const UndirectedGraph& g, const Partition& p) {
  out << "communities " << p.community_count() << "\n";
  if (g.total_weight() > 0.0) {
    out << "modularity " << format_real(modularity(g, p)) << "\n";
  } else {
    out << "modularity undefined\n";
  }
}

struct ClusterArgs {
  std::string algorithm;
  std::string input;
  std::string output;
  std::uint32_t max_iterations = 10;
  unsigned workers = 1;
  std::uint64_t seed = 42;
  std::optional<long> k;
  std::optional<double> cut_distance;
  bool allow_self_loops = false;
};

int run_cluster(const ClusterArgs& a, std::ostream& out) {
  if (a.algorithm == "kmeans" || a.algorithm == "slink") {
    const auto pf = read_point_file(input_path(a.input));
    if (a.algorithm == "kmeans") {
      KmeansOptions opts;
      opts.seed = a.seed;
      Partition partition;
      double wcss = 0.0;
      Eigen::Index k = 0;
      if (a.k) {
        auto r = kmeans(pf.points, static_cast<Eigen::Index>(*a.k), opts);
        partition = r.partition;
        wcss = r.wcss;
        k = static_cast<Eigen::Index>(*a.k);
      } else {
        KmeansSearchOptions search;
        search.seed = a.seed;
        search.kmeans = opts;
        auto r = kmeans_search(pf.points, search);
        partition = r.result.partition;
        wcss = r.result.wcss;
        k = r.k;
      }
      write_partition(partition, pf.ids, a.output);
      out << "k " << k << "\nwcss " << format_real(wcss) << "\n";
    } else {
      if (!a.cut_distance) throw ParameterError("slink needs --cut-distance");
      const auto dendrogram = single_link_dendrogram(pf.points);
      const auto partition = cut_dendrogram(dendrogram, *a.cut_distance);
      write_partition(partition, pf.ids, a.output);
      out << "clusters " << partition.community_count() << "\n";
    }
    return kOk;
  }

  const auto loaded = read_snap_edge_list(input_path(a.input), {a.allow_self_loops});
  const auto& g = loaded.graph;
  Partition partition;
  if (a.algorithm == "lpa") {
    partition = lpa_basic(g, {a.max_iterations, 0.5, a.seed}, a.workers).partition();
  } else if (a.algorithm == "lpa-score") {
    partition = lpa_scored(g, {a.max_iterations, 0.5, a.seed}, a.workers).partition();
  } else if (a.algorithm == "llp") {
    LlpConfig cfg;
    cfg.inner_max_iterations = a.max_iterations;
    cfg.seed = a.seed;
    const auto r = llp(g, cfg, a.workers);
    write_ordering(r.ordering, loaded.ids, a.output);
    print_modularity(out, g, r.partitions.back());
    return kOk;
  } else {
    LouvainConfig cfg;
    cfg.seed = a.seed;
    partition = louvain(g, cfg).final;
  }
  write_partition(partition, loaded.ids, a.output);
  print_modularity(out, g, partition);
  return kOk;
}

}  // namespace

std::vector<unsigned> parse_worker_list(const std::string& spec) {
  std::vector<unsigned> out;
  auto to_count = [&](const std::string& s) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty() || v == 0) throw CLI::ValidationError("--workers", "bad worker count '" + s + "'");
    return static_cast<unsigned>(v);
  };
  if (const auto dots = spec.find(".."); dots != std::string::npos) {
    const unsigned lo = to_count(spec.substr(0, dots));
    const unsigned hi = to_count(spec.substr(dots + 2));
    if (hi < lo) throw CLI::ValidationError("--workers", "empty range '" + spec + "'");
    for (unsigned w = lo; w <= hi; ++w) out.push_back(w);
    return out;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_count(item));
  if (out.empty()) throw CLI::ValidationError("--workers", "empty worker list");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph community detection and scalability benchmarks", "graphclust"};
  app.require_subcommand(1, 1);

  ClusterArgs cluster;
  auto* cmd_cluster = app.add_subcommand("cluster", "Cluster a graph (SNAP edge list) or a point file");
  cmd_cluster->add_option("--algorithm", cluster.algorithm, "Clustering algorithm")
      ->required()
      ->check(CLI::IsMember({"lpa", "lpa-score", "llp", "louvain", "kmeans", "slink"}));
  cmd_cluster->add_option("--input", cluster.input, "SNAP edge list, or point file for kmeans/slink")->required();
  cmd_cluster->add_option("--output", cluster.output, "Partition TSV, or ordering file for llp")->required();
  cmd_cluster->add_option("--max-iterations", cluster.max_iterations, "Superstep cap")->capture_default_str()->check(CLI::PositiveNumber);
  cmd_cluster->add_option("--workers", cluster.workers, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  cmd_cluster->add_option("--seed", cluster.seed, "Random seed (42 is arbitrary)")->capture_default_str();
  cmd_cluster->add_option("--k", cluster.k, "Cluster count for kmeans; omitted runs the doubling search")->check(CLI::PositiveNumber);
  cmd_cluster->add_option("--cut-distance", cluster.cut_distance, "Dendrogram cut distance for slink")->check(CLI::NonNegativeNumber);
  cmd_cluster->add_flag("--allow-self-loops", cluster.allow_self_loops, "Accept u == v lines in the edge list");

  std::string mod_graph;
  std::string mod_partition;
  bool mod_loops = false;
  auto* cmd_mod = app.add_subcommand("modularity", "Print the modularity of a partition");
  cmd_mod->add_option("--graph", mod_graph, "SNAP edge list")->required();
  cmd_mod->add_option("--partition", mod_partition, "Partition TSV")->required();
  cmd_mod->add_flag("--allow-self-loops", mod_loops, "Accept u == v lines in the edge list");

  BenchConfig bench;
  std::string bench_input;
  std::string bench_workers = "1..10";
  std::string bench_out;
  bool bench_loops = false;
  auto* cmd_bench = app.add_subcommand("bench", "Time an algorithm over a worker sweep");
  cmd_bench->add_option("--algorithm", bench.algorithm, "Algorithm to time")
      ->required()
      ->check(CLI::IsMember(bench_algorithms()));
  cmd_bench->add_option("--input", bench_input, "SNAP edge list")->required();
  cmd_bench->add_option("--workers", bench_workers, "Worker counts: range 1..10 or list 1,2,4")->capture_default_str();
  cmd_bench->add_option("--reps", bench.reps, "Repetitions per worker count")->capture_default_str()->check(CLI::PositiveNumber);
  cmd_bench->add_option("--out", bench_out, "Output directory for raw.csv, time.dat, speedup.dat")->required();
  cmd_bench->add_option("--seed", bench.seed, "Random seed (42 is arbitrary)")->capture_default_str();
  cmd_bench->add_option("--max-iterations", bench.max_iterations, "Superstep cap")->capture_default_str()->check(CLI::PositiveNumber);
  cmd_bench->add_option("--dataset", bench.dataset, "Dataset label (defaults to the input file name)");
  cmd_bench->add_flag("--allow-self-loops", bench_loops, "Accept u == v lines in the edge list");

  std::string fit_csv;
  auto* cmd_fit = app.add_subcommand("fit-amdahl", "Fit the parallel fraction P to a benchmark CSV");
  cmd_fit->add_option("--csv", fit_csv, "raw.csv produced by bench")->required();

  std::string conv_input;
  std::string conv_output;
  std::string conv_map;
  bool conv_loops = false;
  auto* cmd_convert = app.add_subcommand("convert", "Remap external vertex ids to dense ids");
  cmd_convert->add_option("--input", conv_input, "SNAP edge list")->required();
  cmd_convert->add_option("--output", conv_output, "Edge list with dense ids")->required();
  cmd_convert->add_option("--id-map", conv_map, "Write 'dense<TAB>external' lines here");
  cmd_convert->add_flag("--allow-self-loops", conv_loops, "Accept u == v lines in the edge list");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (cmd_cluster->parsed()) return run_cluster(cluster, out);

    if (cmd_mod->parsed()) {
      const auto loaded = read_snap_edge_list(input_path(mod_graph), {mod_loops});
      const auto p = read_partition(input_path(mod_partition), loaded.ids);
      out << format_real(modularity(loaded.graph, p)) << "\n";
      return kOk;
    }

    if (cmd_bench->parsed()) {
      try {
        bench.workers = parse_worker_list(bench_workers);
      } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n" << cmd_bench->help();
        return kUsage;
      }
      if (bench.dataset == "graph" && cmd_bench->count("--dataset") == 0) bench.dataset = fs::path(bench_input).filename().string();
      bench.speedup = bench.workers.front() == 1;
      const auto loaded = read_snap_edge_list(input_path(bench_input), {bench_loops});
      const auto table = run_benchmark(bench, loaded.graph);
      std::optional<AmdahlFit> fit;
      if (table.speedups.size() >= 2) fit = fit_parallel_fraction(table.speedups);
      emit_plot_data(table, fit.value_or(AmdahlFit{1.0, 0.0}), bench_out);
      out << "W mean_seconds std_dev speedup\n";
      for (std::size_t i = 0; i < table.stats.size(); ++i) {
        const auto& s = table.stats[i];
        out << s.workers << " " << format_real(s.mean) << " " << format_real(s.std_dev) << " "
            << (i < table.speedups.size() ? format_real(table.speedups[i].speedup) : std::string("-")) << "\n";
      }
      if (fit) {
        out << "P " << format_real(fit->parallel_fraction) << "\nresidual " << format_real(fit->residual)
            << "\nserial_fraction " << format_real(1.0 - fit->parallel_fraction) << "\n";
      }
      return kOk;
    }

    if (cmd_fit->parsed()) {
      const auto table = summarize(read_bench_csv(input_path(fit_csv)), true);
      const auto fit = fit_parallel_fraction(table.speedups);
      out << "P " << format_real(fit.parallel_fraction) << "\nresidual " << format_real(fit.residual)
          << "\nserial_fraction " << format_real(1.0 - fit.parallel_fraction) << "\n";
      return kOk;
    }

    if (cmd_convert->parsed()) {
      const auto loaded = read_snap_edge_list(input_path(conv_input), {conv_loops});
      write_edge_list(loaded.graph, IdMap::identity(loaded.graph.vertex_count()), conv_output);
      if (!conv_map.empty()) {
        std::ofstream map_out(conv_map);
        if (!map_out) throw IoError("cannot open '" + conv_map + "' for writing");
        for (VertexId v = 0; v < loaded.ids.size(); ++v) map_out << v << '\t' << loaded.ids.external(v) << '\n';
        if (!map_out) throw IoError("failed writing '" + conv_map + "'");
      }
      out << "vertices " << loaded.graph.vertex_count() << "\nedges " << loaded.graph.edge_count() << "\n";
      return kOk;
    }
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kData;
  }
  return kUsage;
}

}  // namespace graphclust::cli
