#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "tgr/analytics.hpp"
#include "tgr/eat.hpp"
#include "tgr/esdg.hpp"
#include "tgr/fpd.hpp"
#include "tgr/oracles.hpp"
#include "tgr/rng.hpp"
#include "tgr/temporal_graph.hpp"
#include "tgr/transit_ingest.hpp"
#include "tgr/types.hpp"

namespace {

using namespace tgr;

std::string format_avg(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

int cmd_convert(const std::string& gtfs_dir, const std::string& out_path) {
  const GtfsLiteFeed feed = read_gtfs_dir(gtfs_dir);
  const ConvertResult converted = gtfs_to_temporal(feed);
  write_edge_list_file(converted.graph, out_path);

  const auto labels_path =
      std::filesystem::path(out_path).parent_path() / "labels.tsv";
  std::ofstream labels(labels_path, std::ios::binary);
  if (!labels) throw InputError("cannot open " + labels_path.string());
  write_labels_tsv(converted, labels);

  std::cerr << "converted " << converted.vertex_labels.size() << " stops, "
            << feed.trips.size() << " trips into "
            << converted.stats.edges_emitted << " edges ("
            << converted.stats.rows_dropped_nonpositive
            << " dropped for non-positive duration, "
            << converted.stats.duplicate_edges << " duplicates kept)\n";
  return 0;
}

int cmd_build(const std::string& edges_path, const std::string& out_path) {
  const TemporalGraph g = parse_edge_list_file(edges_path);
  const Esdg e = build_esdg(g);
  save_esdg(e, out_path);
  const EsdgStats s = stats(e);
  std::cerr << "built " << s.n_nodes << " nodes, " << s.n_arcs << " arcs over "
            << s.n_vertices << " vertices\n";
  return 0;
}

int cmd_eat(const std::string& esdg_path, VertexId source, Time ready_time,
            bool no_skip) {
  const Esdg e = load_esdg(esdg_path);
  EatOptions opts;
  opts.skip_no_improve = !no_skip;
  const EatResult r = earliest_arrival(e, source, ready_time, opts);
  std::cout << "vertex\teat\n";
  for (std::size_t z = 0; z < r.eat.size(); ++z) {
    std::cout << z << '\t' << time_to_string(r.eat[z]) << '\n';
  }
  return 0;
}

int cmd_fpd(const std::string& esdg_path, VertexId source, bool no_skip) {
  const Esdg e = load_esdg(esdg_path);
  FpdOptions opts;
  opts.skip_visited_source = !no_skip;
  const FpdResult r = fastest_duration(e, source, opts);
  std::cout << "vertex\tjourney\n";
  for (std::size_t z = 0; z < r.journey.size(); ++z) {
    std::cout << z << '\t' << time_to_string(r.journey[z]) << '\n';
  }
  return 0;
}

int cmd_stats(const std::string& esdg_path) {
  const EsdgStats s = stats(load_esdg(esdg_path));
  std::cout << "n_vertices\t" << s.n_vertices << '\n'
            << "n_nodes\t" << s.n_nodes << '\n'
            << "n_arcs\t" << s.n_arcs << '\n'
            << "max_out_degree\t" << s.max_out_degree << '\n'
            << "avg_out_degree\t" << s.avg_out_degree << '\n';
  return 0;
}

int cmd_coverage(const std::string& esdg_path, VertexId source,
                 std::optional<Time> k, std::optional<double> percent) {
  const Esdg e = load_esdg(esdg_path);
  const CoverageReport report = coverage_report(e, source, k, percent);
  std::cout << "source\t" << report.source << '\n';
  std::cout << "eccentricity\t" << time_to_string(report.eccentricity) << '\n';
  if (report.k) {
    std::cout << "k\t" << *report.k << '\n';
    std::cout << "coverage_count\t" << *report.coverage_count << '\n';
  }
  if (report.percent) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", *report.percent);
    std::cout << "percent\t" << buf << '\n';
    std::cout << "coverage_time\t" << time_to_string(*report.coverage_time) << '\n';
  }
  return 0;
}

struct BenchQuery {
  VertexId source = 0;
  Time ready_time = 0;
};

struct BenchRow {
  std::uint64_t wall_micros = 0;
  std::uint64_t nodes_dequeued = 0;
  std::uint64_t arcs_scanned = 0;
};

int cmd_bench(const std::string& esdg_path, const std::string& mode,
              std::uint64_t n_queries, std::uint64_t seed, unsigned threads) {
  const bool eat_mode = mode == "eat";
  const Esdg e = load_esdg(esdg_path);
  if (e.vertex_count() == 0) throw InputError("graph has no vertices");

  // Query stream: source below n, then (eat mode) ready time in [0, 100],
  // drawn in query order from one splitmix64 stream.
  SplitMix64 rng(seed);
  std::vector<BenchQuery> queries(n_queries);
  for (auto& q : queries) {
    q.source = static_cast<VertexId>(rng.next_below(e.vertex_count()));
    if (eat_mode) q.ready_time = static_cast<Time>(rng.next_below(101));
  }

  std::vector<BenchRow> rows(n_queries);
  const auto run_one = [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t dequeued = 0;
    std::uint64_t scanned = 0;
    if (eat_mode) {
      const EatResult r = earliest_arrival(e, queries[i].source,
                                           queries[i].ready_time);
      dequeued = r.nodes_dequeued;
      scanned = r.arcs_scanned;
    } else {
      const FpdResult r = fastest_duration(e, queries[i].source);
      dequeued = r.nodes_dequeued;
      scanned = r.arcs_scanned;
    }
    const auto stop = std::chrono::steady_clock::now();
    rows[i].wall_micros = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::microseconds>(stop - start)
            .count());
    rows[i].nodes_dequeued = dequeued;
    rows[i].arcs_scanned = scanned;
  };

  if (threads <= 1 || n_queries <= 1) {
    for (std::size_t i = 0; i < n_queries; ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const unsigned count = std::min<std::uint64_t>(threads, n_queries);
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < n_queries;
             i = next.fetch_add(1)) {
          run_one(i);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  if (eat_mode) {
    std::cout << "query\tsource\tready_time\twall_micros\tnodes_dequeued\tarcs_scanned\n";
  } else {
    std::cout << "query\tsource\twall_micros\tnodes_dequeued\tarcs_scanned\n";
  }
  double sum_wall = 0;
  double sum_dequeued = 0;
  double sum_scanned = 0;
  for (std::size_t i = 0; i < n_queries; ++i) {
    std::cout << i << '\t' << queries[i].source;
    if (eat_mode) std::cout << '\t' << queries[i].ready_time;
    std::cout << '\t' << rows[i].wall_micros << '\t' << rows[i].nodes_dequeued
              << '\t' << rows[i].arcs_scanned << '\n';
    sum_wall += static_cast<double>(rows[i].wall_micros);
    sum_dequeued += static_cast<double>(rows[i].nodes_dequeued);
    sum_scanned += static_cast<double>(rows[i].arcs_scanned);
  }
  const double n = static_cast<double>(n_queries);
  std::cout << "# avg wall_micros=" << format_avg(sum_wall / n)
            << " nodes_dequeued=" << format_avg(sum_dequeued / n)
            << " arcs_scanned=" << format_avg(sum_scanned / n) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"timetable journey planning over an edge-scan dependency graph"};
  app.require_subcommand(1);

  std::string gtfs_dir, edges_path, esdg_path, out_path, mode;
  VertexId source = 0;
  Time ready_time = 0;
  std::uint64_t n_queries = 100;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool no_skip = false;
  std::optional<Time> cov_k;
  std::optional<double> cov_percent;

  auto* convert =
      app.add_subcommand("convert", "GTFS directory to temporal edge list");
  convert->add_option("gtfs_dir", gtfs_dir, "directory with trips.txt and stop_times.txt")
      ->required();
  convert->add_option("out_edges", out_path, "output edge-list path")->required();

  auto* build = app.add_subcommand("build", "edge list to binary .esdg");
  build->add_option("edges", edges_path, "edge-list path")->required();
  build->add_option("out_esdg", out_path, "output .esdg path")->required();

  auto* eat = app.add_subcommand("eat", "single-source earliest arrival times");
  eat->add_option("esdg", esdg_path, ".esdg path")->required();
  eat->add_option("--source", source, "source vertex")->required();
  eat->add_option("--ready-time", ready_time, "earliest departure at the source")
      ->required();
  eat->add_flag("--no-skip", no_skip, "disable the no-improvement skip");

  auto* fpd = app.add_subcommand("fpd", "single-source fastest path durations");
  fpd->add_option("esdg", esdg_path, ".esdg path")->required();
  fpd->add_option("--source", source, "source vertex")->required();
  fpd->add_flag("--no-skip", no_skip, "disable the visited-source phase skip");

  auto* bench = app.add_subcommand("bench", "seeded random-query benchmark");
  bench->add_option("esdg", esdg_path, ".esdg path")->required();
  bench->add_option("--mode", mode, "eat or fpd")
      ->required()
      ->check(CLI::IsMember({"eat", "fpd"}));
  bench->add_option("--queries", n_queries, "number of queries")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed, "PRNG seed");
  bench->add_option("--threads", threads, "worker threads");

  auto* stats_cmd = app.add_subcommand("stats", "dependency-graph statistics");
  stats_cmd->add_option("esdg", esdg_path, ".esdg path")->required();

  auto* coverage = app.add_subcommand("coverage", "reachability analytics");
  coverage->add_option("esdg", esdg_path, ".esdg path")->required();
  coverage->add_option("--source", source, "source vertex")->required();
  auto* k_opt = coverage->add_option("--k", cov_k, "duration bound for the count");
  auto* p_opt =
      coverage->add_option("--percent", cov_percent, "coverage percentage (0,100]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*convert) return cmd_convert(gtfs_dir, out_path);
    if (*build) return cmd_build(edges_path, out_path);
    if (*eat) return cmd_eat(esdg_path, source, ready_time, no_skip);
    if (*fpd) return cmd_fpd(esdg_path, source, no_skip);
    if (*bench) return cmd_bench(esdg_path, mode, n_queries, seed, threads);
    if (*stats_cmd) return cmd_stats(esdg_path);
    if (*coverage) {
      if (k_opt->count() == 0 && p_opt->count() == 0) {
        std::cerr << "coverage: provide --k and/or --percent\n";
        return 2;
      }
      return cmd_coverage(esdg_path, source, cov_k, cov_percent);
    }
  } catch (const InputError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << '\n';
    return 3;
  }
  return 2;
}
