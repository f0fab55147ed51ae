#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "gct/centralized.hpp"
#include "gct/consensus.hpp"
#include "gct/csv.hpp"
#include "gct/distributions.hpp"
#include "gct/graph.hpp"
#include "gct/graph_matrices.hpp"
#include "gct/rootfind.hpp"
#include "gct/stats.hpp"
#include "gct/svg.hpp"

// Command implementations behind the gct binary. Everything here is
// deterministic: all randomness flows from config seeds, identical inputs
// produce byte-identical output files, and failures surface as exceptions
// for main() to turn into a nonzero exit code.

namespace gct::cli {

namespace detail {

inline nlohmann::json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path.string());
  nlohmann::json j;
  in >> j;
  return j;
}

inline void write_text(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << body;
}

inline void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  write_text(path, j.dump(2) + "\n");
}

inline void ensure_dir(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
}

}  // namespace detail

struct GraphGenOptions {
  std::string kind;  // ring|complete|regular|erdos-renyi|from-adjacency|from-edgelist
  int n = 0;
  int k = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::filesystem::path input;  // for from-adjacency / from-edgelist
  bool directed = false;        // reading direction for file inputs
  std::filesystem::path out_dir;
};

/// Builds the requested graph and writes edges.csv plus summary.json
/// (vertex count, edge count, degree stats, connected flag).
inline Graph cmd_graph_gen(const GraphGenOptions& opt) {
  Graph g = [&] {
    if (opt.kind == "ring") return make_ring(opt.n);
    if (opt.kind == "complete") return make_complete(opt.n);
    if (opt.kind == "regular") return make_regular(opt.n, opt.k, opt.seed);
    if (opt.kind == "erdos-renyi") return make_erdos_renyi(opt.n, opt.p, opt.seed);
    if (opt.kind == "from-adjacency") {
      return graph_from_adjacency(read_adjacency_csv(opt.input), opt.directed);
    }
    if (opt.kind == "from-edgelist") {
      return read_edge_list_csv(opt.input, opt.directed);
    }
    throw std::invalid_argument("graph gen: unknown kind '" + opt.kind + "'");
  }();

  detail::ensure_dir(opt.out_dir);
  write_edge_list_csv(opt.out_dir / "edges.csv", g);

  const auto degrees = degree_sequence(g);
  int d_min = 0, d_max = 0;
  double d_mean = 0.0;
  if (!degrees.empty()) {
    d_min = *std::min_element(degrees.begin(), degrees.end());
    d_max = *std::max_element(degrees.begin(), degrees.end());
    for (int d : degrees) d_mean += d;
    d_mean /= degrees.size();
  }
  const bool connected =
      g.directed() ? strongly_connected_components(g).size() == 1 : is_connected(g);

  nlohmann::json summary;
  summary["n"] = g.vertex_count();
  summary["edge_count"] = g.edge_count();
  summary["directed"] = g.directed();
  summary["degree"] = {{"min", d_min}, {"max", d_max}, {"mean", d_mean}};
  summary["connected"] = connected;
  detail::write_json(opt.out_dir / "summary.json", summary);
  return g;
}

struct MatricesOptions {
  std::filesystem::path graph_file;  // edge-list CSV or adjacency CSV
  bool directed = false;
  std::vector<std::string> which;  // adjacency|incidence|laplacian|normalized-laplacian|walk-sum
  int walk_k = 2;
  std::filesystem::path out_dir;
};

namespace detail {

inline Graph load_graph(const std::filesystem::path& path, bool directed) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("graph file: cannot open " + path.string());
  std::string first_line;
  std::getline(in, first_line);
  in.close();
  if (first_line.rfind("source,target", 0) == 0) {
    return read_edge_list_csv(path, directed);
  }
  return graph_from_adjacency(read_adjacency_csv(path), directed);
}

}  // namespace detail

/// Writes the requested matrix representations of a graph file as CSV grids.
inline void cmd_matrices(const MatricesOptions& opt) {
  const Graph g = detail::load_graph(opt.graph_file, opt.directed);
  detail::ensure_dir(opt.out_dir);
  for (const auto& which : opt.which) {
    if (which == "adjacency") {
      write_adjacency_csv(opt.out_dir / "adjacency.csv", adjacency_matrix(g),
                          !g.labels().empty());
    } else if (which == "incidence") {
      write_matrix_csv(opt.out_dir / "incidence.csv", incidence_matrix(g));
    } else if (which == "laplacian") {
      write_matrix_csv(opt.out_dir / "laplacian.csv", laplacian(g, false));
    } else if (which == "normalized-laplacian") {
      write_matrix_csv(opt.out_dir / "normalized_laplacian.csv", laplacian(g, true));
    } else if (which == "walk-sum") {
      write_matrix_csv(opt.out_dir / "walk_sum.csv", walk_count_sum(g, opt.walk_k));
    } else {
      throw std::invalid_argument("graph matrices: unknown matrix '" + which + "'");
    }
  }
}

/// Config: {n, p, graph_seed, value_seed, distribution, tolerance, max_iters,
/// lazy}. Samples a connected G(n, p) (stepping the seed past disconnected
/// draws), runs the averaging iteration, and writes the trace, degree
/// statistics, charts, and a summary. The fully-resolved config is echoed to
/// resolved_config.json so defaults are never silent.
inline ConsensusTrace cmd_consensus(const std::filesystem::path& config_file,
                                    const std::filesystem::path& out_dir) {
  const auto config = detail::load_json(config_file);
  const int n = config.value("n", 20);
  const double p = config.value("p", 0.5);
  const std::uint64_t graph_seed = config.at("graph_seed").get<std::uint64_t>();
  const std::uint64_t value_seed = config.at("value_seed").get<std::uint64_t>();
  const double tolerance = config.value("tolerance", 1e-8);
  const int max_iters = config.value("max_iters", 1000);
  const bool lazy = config.value("lazy", false);
  const DistributionSpec spec = spec_from_json(config.at("distribution"));

  const ConnectedSample sampled = sample_connected_graph(n, p, graph_seed);
  for (std::uint64_t s : sampled.rejected_seeds) {
    std::cout << "consensus: rejected disconnected graph for seed " << s << "\n";
  }
  ConsensusTrace trace =
      run_consensus(sampled.graph, spec, value_seed, max_iters, tolerance, lazy);
  trace.graph_seed = sampled.seed_used;

  detail::ensure_dir(out_dir);
  write_trace_csv(out_dir / "trace.csv", trace);
  const DegreeStatistics stats = degree_statistics(sampled.graph);
  write_degree_stats_csv(out_dir / "degree_stats.csv", stats);
  detail::write_text(out_dir / "trace.svg",
                     svg::line_chart(trace.values, "Node values by iteration"));
  detail::write_text(out_dir / "degree_histogram.svg",
                     svg::histogram(stats.histogram, "Degree histogram"));

  nlohmann::json resolved;
  resolved["n"] = n;
  resolved["p"] = p;
  resolved["graph_seed"] = graph_seed;
  resolved["value_seed"] = value_seed;
  resolved["distribution"] = to_json(spec);
  resolved["tolerance"] = tolerance;
  resolved["max_iters"] = max_iters;
  resolved["lazy"] = lazy;
  detail::write_json(out_dir / "resolved_config.json", resolved);

  nlohmann::json summary;
  summary["graph_seed_used"] = sampled.seed_used;
  summary["rejected_graph_seeds"] = sampled.rejected_seeds;
  summary["edge_count"] = trace.edge_count;
  summary["converged"] = trace.converged;
  summary["iterations_run"] = trace.iterations_run;
  if (trace.consensus_value) summary["consensus_value"] = *trace.consensus_value;
  detail::write_json(out_dir / "summary.json", summary);

  std::cout << "consensus: " << (trace.converged ? "converged" : "did not converge")
            << " after " << trace.iterations_run << " iterations";
  if (trace.consensus_value) std::cout << " at " << *trace.consensus_value;
  std::cout << "\n";
  return trace;
}

/// Config: {spec_x, spec_y, initial_count, batch_size, iterations, snapshots,
/// seed, bins}. Writes per-snapshot point clouds, density grids with edge
/// sidecars, and scatter panels, plus center-drift data in summary.json.
inline std::vector<AccretionSnapshot> cmd_central(
    const std::filesystem::path& config_file, const std::filesystem::path& out_dir) {
  const auto config = detail::load_json(config_file);
  const DistributionSpec spec_x = spec_from_json(config.at("spec_x"));
  const DistributionSpec spec_y = spec_from_json(config.at("spec_y"));
  const int initial_count = config.value("initial_count", 100);
  const int batch_size = config.value("batch_size", 1000);
  const int iterations = config.value("iterations", 20);
  const std::uint64_t seed = config.at("seed").get<std::uint64_t>();
  const int bins = config.value("bins", 50);
  std::vector<int> snapshots =
      config.value("snapshots", std::vector<int>{1, 5, 10, 20});

  const auto captured = run_accretion(spec_x, spec_y, initial_count, batch_size,
                                      iterations, seed, snapshots, bins);

  detail::ensure_dir(out_dir);
  for (const auto& snap : captured) {
    const std::string tag = std::to_string(snap.iteration);
    write_points_csv(out_dir / ("points_" + tag + ".csv"), snap.state.points);
    write_density_csv(out_dir / ("density_" + tag + ".csv"),
                      out_dir / ("density_" + tag + "_edges.json"), snap.grid);
    detail::write_text(
        out_dir / ("snapshot_" + tag + ".svg"),
        svg::scatter(snap.state.points, snap.state.center,
                     "Accretion after " + tag + " iterations"));
  }

  nlohmann::json resolved;
  resolved["spec_x"] = to_json(spec_x);
  resolved["spec_y"] = to_json(spec_y);
  resolved["initial_count"] = initial_count;
  resolved["batch_size"] = batch_size;
  resolved["iterations"] = iterations;
  resolved["snapshots"] = snapshots;
  resolved["seed"] = seed;
  resolved["bins"] = bins;
  detail::write_json(out_dir / "resolved_config.json", resolved);

  nlohmann::json summary;
  for (const auto& snap : captured) {
    summary["snapshots"].push_back({{"iteration", snap.iteration},
                                    {"points", snap.state.points.size()},
                                    {"center", {snap.state.center.x, snap.state.center.y}}});
  }
  if (captured.size() >= 2) summary["center_drift"] = center_stability(captured);
  detail::write_json(out_dir / "summary.json", summary);

  std::cout << "central: " << captured.size() << " snapshots, final center (";
  if (!captured.empty()) {
    std::cout << captured.back().state.center.x << ", "
              << captured.back().state.center.y;
  }
  std::cout << ")\n";
  return captured;
}

struct RootOptions {
  std::string method = "all";  // all|fixed-point|bisection|secant|newton
  std::string function = "paper";
  double a = 4.0;  // bracket / secant pair
  double b = 5.0;
  double p0 = 4.5;  // newton / fixed-point start
  double tol = 1e-6;
  int max_iters = 100;
  std::filesystem::path out_csv;  // empty: stdout table only
};

/// Runs the requested root-finding method(s), prints an aligned table, and
/// optionally writes the comparison CSV.
inline std::vector<ComparisonRow> cmd_root(const RootOptions& opt) {
  const ScalarFunction fn = builtin_function(opt.function);
  CompareConfig cfg;
  cfg.tol = opt.tol;
  cfg.max_iters = opt.max_iters;
  cfg.bracket_lo = opt.a;
  cfg.bracket_hi = opt.b;
  cfg.newton_start = opt.p0;
  cfg.fixed_point_start = opt.p0;

  std::vector<ComparisonRow> rows;
  if (opt.method == "all") {
    rows = compare_methods(fn, cfg);
  } else {
    ComparisonRow row;
    if (opt.method == "fixed-point") {
      if (!fn.fixed_point_form) {
        throw std::invalid_argument("root find: no fixed-point form for this function");
      }
      ScalarFunction g;
      g.f = fn.fixed_point_form;
      row.report = fixed_point(g, opt.p0, opt.tol, opt.max_iters);
    } else if (opt.method == "bisection") {
      row.report = bisection(fn, opt.a, opt.b, opt.tol, opt.max_iters);
    } else if (opt.method == "secant") {
      row.report = secant(fn, opt.a, opt.b, opt.tol, opt.max_iters);
    } else if (opt.method == "newton") {
      row.report = newton(fn, opt.p0, opt.tol, opt.max_iters);
    } else {
      throw std::invalid_argument("root find: unknown method '" + opt.method + "'");
    }
    if (row.report.converged && row.report.root &&
        (*row.report.root < opt.a || *row.report.root > opt.b)) {
      row.note = "out-of-bracket";
    }
    rows.push_back(std::move(row));
  }

  std::cout << comparison_table(rows);
  if (!opt.out_csv.empty()) {
    if (opt.out_csv.has_parent_path()) detail::ensure_dir(opt.out_csv.parent_path());
    write_rootfind_csv(opt.out_csv, rows);
  }
  return rows;
}

struct DistSampleOptions {
  DistributionSpec spec;
  std::size_t count = 1000;
  std::uint64_t seed = 0;
  std::filesystem::path out_dir;
};

/// Draws seeded samples and writes samples.csv plus summary.json with the
/// empirical and closed-form moments.
inline void cmd_dist_sample(const DistSampleOptions& opt) {
  const auto values = sample(opt.spec, opt.count, opt.seed);
  detail::ensure_dir(opt.out_dir);
  write_samples_csv(opt.out_dir / "samples.csv", values);

  const Moments analytic = analytic_moments(opt.spec);
  nlohmann::json summary;
  summary["distribution"] = to_json(opt.spec);
  summary["count"] = opt.count;
  summary["seed"] = opt.seed;
  summary["sample_mean"] = mean(values);
  summary["sample_variance"] = values.size() > 1 ? variance(values) : 0.0;
  summary["analytic_mean"] = analytic.mean;
  summary["analytic_variance"] = analytic.variance;
  detail::write_json(opt.out_dir / "summary.json", summary);

  std::cout << "dist: wrote " << values.size() << " draws, sample mean "
            << mean(values) << " (analytic " << analytic.mean << ")\n";
}

}  // namespace gct::cli
