#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gct/distributions.hpp"
#include "gct/error.hpp"
#include "gct/graph.hpp"
#include "gct/graph_matrices.hpp"
#include "gct/matrix.hpp"

namespace gct {

/// Row-stochastic averaging matrix W = D^-1 A: w[i][j] = 1/deg(i) when i and
/// j are adjacent, else 0. The diagonal is 0 for simple graphs.
struct AveragingMatrix {
  DenseMatrix w;
};

struct BipartiteReport {
  bool bipartite = false;
};

/// Two-coloring attempt by breadth-first layering over every component;
/// bipartite iff no edge joins two vertices of the same layer parity.
inline BipartiteReport bipartite_guard(const Graph& g) {
  if (g.directed()) {
    throw std::invalid_argument("bipartite_guard: directed graphs unsupported");
  }
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (int root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return {false};
        }
      }
    }
  }
  return {true};
}

/// Builds W by normalizing each adjacency row to sum 1. Rejects
/// disconnected graphs (the consensus value would not be global) and
/// isolated vertices (their row would be all-zero).
inline AveragingMatrix build_averaging_matrix(const Graph& g) {
  if (g.directed()) {
    throw std::invalid_argument("build_averaging_matrix: directed graphs unsupported");
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) {
      throw isolated_vertex_error("build_averaging_matrix: vertex " +
                                  std::to_string(v) + " has no neighbors");
    }
  }
  if (!is_connected(g)) {
    throw disconnected_error("build_averaging_matrix: graph is not connected");
  }
  DenseMatrix w = adjacency_matrix(g);
  for (std::size_t i = 0; i < w.rows(); ++i) {
    double row_sum = 0.0;
    for (std::size_t j = 0; j < w.cols(); ++j) row_sum += w(i, j);
    for (std::size_t j = 0; j < w.cols(); ++j) w(i, j) /= row_sum;
  }
  return {std::move(w)};
}

struct ConsensusTrace {
  int n = 0;
  std::size_t edge_count = 0;
  std::uint64_t value_seed = 0;
  std::optional<std::uint64_t> graph_seed;  // set by callers that sampled g
  DistributionSpec spec;
  /// values[t] is the length-n node-value vector after t averaging steps;
  /// values[0] is the initial draw.
  std::vector<std::vector<double>> values;
  bool converged = false;
  std::optional<double> consensus_value;
  int iterations_run = 0;
  double tolerance = 0.0;
};

inline double spread(const std::vector<double>& x) {
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  return *hi - *lo;
}

/// The fixed limit of the iteration on a connected non-bipartite graph:
/// sum_i deg(i) x_i / sum_i deg(i).
inline double degree_weighted_average(const Graph& g, const std::vector<double>& x) {
  double num = 0.0, den = 0.0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    num += g.degree(v) * x[v];
    den += g.degree(v);
  }
  return num / den;
}

/// Draws initial node values from spec and iterates x <- W x until the
/// spread max_i x_i - min_i x_i falls to tolerance or max_iters is reached.
///
/// The plain iteration oscillates on bipartite graphs and is refused for
/// them; pass lazy = true for the damped step x <- (x + W x)/2, which
/// converges there as well.
inline ConsensusTrace run_consensus(const Graph& g, const DistributionSpec& spec,
                                    std::uint64_t value_seed, int max_iters,
                                    double tolerance, bool lazy = false) {
  if (max_iters < 1) throw std::invalid_argument("run_consensus: max_iters must be >= 1");
  if (!(tolerance > 0)) throw std::invalid_argument("run_consensus: tolerance must be > 0");
  const AveragingMatrix avg = build_averaging_matrix(g);
  if (!lazy && bipartite_guard(g).bipartite) {
    throw bipartite_error(
        "run_consensus: plain averaging oscillates on bipartite graphs; "
        "use the lazy option");
  }

  ConsensusTrace trace;
  trace.n = g.vertex_count();
  trace.edge_count = g.edge_count();
  trace.value_seed = value_seed;
  trace.spec = spec;
  trace.tolerance = tolerance;
  trace.values.push_back(sample(spec, g.vertex_count(), value_seed));

  while (true) {
    const auto& x = trace.values.back();
    if (spread(x) <= tolerance) {
      trace.converged = true;
      trace.consensus_value = x[0];
      break;
    }
    if (trace.iterations_run >= max_iters) break;
    auto next = avg.w.apply(x);
    if (lazy) {
      for (std::size_t i = 0; i < next.size(); ++i) next[i] = 0.5 * (x[i] + next[i]);
    }
    trace.values.push_back(std::move(next));
    ++trace.iterations_run;
  }
  return trace;
}

struct DegreeStatistics {
  /// Unit-width integer bins over observed degrees, ascending.
  std::vector<std::pair<int, int>> histogram;
  /// (degree, cumulative count) pairs, non-decreasing, ending at n.
  std::vector<std::pair<int, int>> cumulative;
};

inline DegreeStatistics degree_statistics(const Graph& g) {
  std::map<int, int> counts;
  for (int d : degree_sequence(g)) ++counts[d];
  DegreeStatistics stats;
  int running = 0;
  for (const auto& [degree, count] : counts) {
    stats.histogram.emplace_back(degree, count);
    running += count;
    stats.cumulative.emplace_back(degree, running);
  }
  return stats;
}

struct ConnectedSample {
  Graph graph;
  std::uint64_t seed_used = 0;
  std::vector<std::uint64_t> rejected_seeds;
};

/// Samples G(n, p, seed); a disconnected draw is rejected and the next seed
/// tried, up to max_attempts.
inline ConnectedSample sample_connected_graph(int n, double p, std::uint64_t seed,
                                              int max_attempts = 50) {
  std::vector<std::uint64_t> rejected;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    const std::uint64_t s = seed + attempt;
    Graph g = make_erdos_renyi(n, p, s);
    if (is_connected(g)) return {std::move(g), s, std::move(rejected)};
    rejected.push_back(s);
  }
  throw disconnected_error("sample_connected_graph: no connected graph within " +
                           std::to_string(max_attempts) + " attempts");
}

}  // namespace gct
