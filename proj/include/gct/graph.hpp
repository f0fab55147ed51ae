#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gct/error.hpp"
#include "gct/rng.hpp"

namespace gct {

struct Edge {
  int u = 0;
  int v = 0;
  double weight = 1.0;
};

inline bool operator==(const Edge& a, const Edge& b) {
  return a.u == b.u && a.v == b.v && a.weight == b.weight;
}

/// Immutable vertex/edge structure, directed or undirected, with optional
/// real edge weights and optional vertex labels.
///
/// Undirected edges are stored once with u <= v; queries are symmetric.
/// Self-loops are allowed and count 2 toward an undirected degree.
/// Duplicate (u, v) pairs are rejected at construction.
class Graph {
 public:
  Graph(int n, bool directed, std::vector<Edge> edges,
        std::vector<std::string> labels = {})
      : n_(n), directed_(directed), labels_(std::move(labels)) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n) {
      throw std::invalid_argument("Graph: label list does not match vertex count");
    }
    for (auto& e : edges) {
      if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
        throw std::invalid_argument("Graph: edge endpoint out of range");
      }
      if (!directed_ && e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
      return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    for (std::size_t i = 1; i < edges.size(); ++i) {
      if (edges[i - 1].u == edges[i].u && edges[i - 1].v == edges[i].v) {
        throw std::invalid_argument("Graph: duplicate edge");
      }
    }
    edges_ = std::move(edges);

    adjacency_.resize(n_);
    for (const auto& e : edges_) {
      adjacency_[e.u].push_back(e.v);
      if (!directed_ && e.u != e.v) adjacency_[e.v].push_back(e.u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  }

  int vertex_count() const { return n_; }
  bool directed() const { return directed_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Edges in canonical order: sorted by (u, v), with u <= v when undirected.
  const std::vector<Edge>& edges() const { return edges_; }

  const std::vector<std::string>& labels() const { return labels_; }

  /// The vertex label, or its decimal index when the graph is unlabeled.
  std::string label(int v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
  }

  bool has_edge(int u, int v) const {
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  /// Weight of edge u->v (either direction when undirected); 0 when absent.
  double edge_weight(int u, int v) const {
    if (!directed_ && u > v) std::swap(u, v);
    auto it = std::lower_bound(
        edges_.begin(), edges_.end(), std::pair(u, v),
        [](const Edge& e, const std::pair<int, int>& key) {
          return std::pair(e.u, e.v) < key;
        });
    if (it != edges_.end() && it->u == u && it->v == v) return it->weight;
    return 0.0;
  }

  /// Sorted out-neighbors (all neighbors when undirected); contains v itself
  /// exactly when v has a self-loop.
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }

  /// Undirected: incident edge ends, self-loops counting twice.
  /// Directed: out-degree, self-loops counting once.
  int degree(int v) const {
    int d = static_cast<int>(adjacency_[v].size());
    if (!directed_ && has_edge(v, v)) ++d;
    return d;
  }

 private:
  int n_;
  bool directed_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::string> labels_;
};

inline bool operator==(const Graph& a, const Graph& b) {
  return a.vertex_count() == b.vertex_count() && a.directed() == b.directed() &&
         a.edges() == b.edges() && a.labels() == b.labels();
}

/// Per-vertex degrees (out-degrees for directed graphs).
inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> degrees(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) degrees[v] = g.degree(v);
  return degrees;
}

/// Cycle on n >= 3 vertices; every degree is 2.
inline Graph make_ring(int n) {
  if (n < 3) throw std::invalid_argument("make_ring: n must be >= 3");
  std::vector<Edge> edges;
  edges.reserve(n);
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, false, std::move(edges));
}

/// Complete graph K_n: every pair adjacent, n(n-1)/2 edges.
inline Graph make_complete(int n) {
  if (n < 1) throw std::invalid_argument("make_complete: n must be >= 1");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, false, std::move(edges));
}

/// Random k-regular graph via the pairing model: k stubs per vertex are
/// shuffled and paired; pairings with self-loops or duplicate edges are
/// rejected and redrawn, up to 100 attempts.
inline Graph make_regular(int n, int k, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("make_regular: n must be >= 1");
  if (k < 0 || k >= n) throw std::invalid_argument("make_regular: need 0 <= k < n");
  if ((static_cast<long long>(n) * k) % 2 != 0) {
    throw std::invalid_argument("make_regular: n*k must be even");
  }
  if (k == 0) return Graph(n, false, {});

  Rng rng(seed);
  constexpr int kMaxAttempts = 100;
  std::vector<int> stubs(static_cast<std::size_t>(n) * k);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < k; ++j) stubs[static_cast<std::size_t>(i) * k + j] = i;
    shuffle(stubs, rng);

    std::vector<Edge> edges;
    edges.reserve(stubs.size() / 2);
    std::set<std::pair<int, int>> seen;
    bool ok = true;
    for (std::size_t s = 0; s + 1 < stubs.size(); s += 2) {
      int u = stubs[s], v = stubs[s + 1];
      if (u == v) { ok = false; break; }
      if (u > v) std::swap(u, v);
      if (!seen.insert({u, v}).second) { ok = false; break; }
      edges.push_back({u, v});
    }
    if (ok) return Graph(n, false, std::move(edges));
  }
  throw construction_failed("make_regular: no simple pairing found after 100 attempts");
}

/// Erdos-Renyi G(n, p): each of the n(n-1)/2 potential edges is included
/// independently with probability p. Pairs are visited in lexicographic
/// order with one uniform draw each, so the edge set is a pure function of
/// (n, p, seed).
inline Graph make_erdos_renyi(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("make_erdos_renyi: n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("make_erdos_renyi: p must lie in [0, 1]");
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.uniform01() < p) edges.push_back({i, j});
    }
  }
  return Graph(n, false, std::move(edges));
}

/// Induced subgraph: the given vertices (deduplicated, kept in ascending
/// index order and renumbered from 0) and every edge with both ends retained.
inline Graph subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> keep(vertices);
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (int v : keep) {
    if (v < 0 || v >= g.vertex_count()) {
      throw std::invalid_argument("subgraph: vertex index out of range");
    }
  }
  std::vector<int> remap(g.vertex_count(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) remap[keep[i]] = static_cast<int>(i);

  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (remap[e.u] >= 0 && remap[e.v] >= 0) {
      edges.push_back({remap[e.u], remap[e.v], e.weight});
    }
  }
  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    labels.reserve(keep.size());
    for (int v : keep) labels.push_back(g.labels()[v]);
  }
  return Graph(static_cast<int>(keep.size()), g.directed(), std::move(edges),
               std::move(labels));
}

/// True iff every vertex is reachable from vertex 0 (vacuously for n <= 1).
inline bool is_connected(const Graph& g) {
  if (g.directed()) {
    throw std::invalid_argument(
        "is_connected: directed input; use strongly_connected_components");
  }
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> visited(n, 0);
  std::vector<int> stack{0};
  visited[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!visited[w]) {
        visited[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

/// Tarjan's algorithm, iterative. Components are emitted in reverse
/// topological order of the condensation; vertices within a component are
/// sorted ascending.
inline std::vector<std::vector<int>> strongly_connected_components(const Graph& g) {
  if (!g.directed()) {
    throw std::invalid_argument("strongly_connected_components: undirected input");
  }
  const int n = g.vertex_count();
  std::vector<int> index(n, -1), lowlink(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  std::vector<std::vector<int>> components;
  int next_index = 0;

  struct Frame {
    int v;
    std::size_t child;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto& nbrs = g.neighbors(f.v);
      if (f.child < nbrs.size()) {
        int w = nbrs[f.child++];
        if (index[w] == -1) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[f.v] = std::min(lowlink[f.v], index[w]);
        }
      } else {
        if (lowlink[f.v] == index[f.v]) {
          std::vector<int> comp;
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp.push_back(w);
          } while (w != f.v);
          std::sort(comp.begin(), comp.end());
          components.push_back(std::move(comp));
        }
        int v = f.v;
        call.pop_back();
        if (!call.empty()) {
          lowlink[call.back().v] = std::min(lowlink[call.back().v], lowlink[v]);
        }
      }
    }
  }
  return components;
}

namespace detail {

inline bool iso_consistent(const Graph& g1, const Graph& g2,
                           const std::vector<int>& mapping, int v, int image) {
  for (int u = 0; u < g1.vertex_count(); ++u) {
    if (mapping[u] == -1 && u != v) continue;
    const int mu = (u == v) ? image : mapping[u];
    if (g1.edge_weight(u, v) != g2.edge_weight(mu, image)) return false;
    if (g1.directed() && g1.edge_weight(v, u) != g2.edge_weight(image, mu)) {
      return false;
    }
  }
  return true;
}

inline bool iso_search(const Graph& g1, const Graph& g2, std::vector<int>& mapping,
                       std::vector<char>& used, int v) {
  if (v == g1.vertex_count()) return true;
  for (int image = 0; image < g2.vertex_count(); ++image) {
    if (used[image]) continue;
    if (g1.degree(v) != g2.degree(image)) continue;
    if (!iso_consistent(g1, g2, mapping, v, image)) continue;
    mapping[v] = image;
    used[image] = 1;
    if (iso_search(g1, g2, mapping, used, v + 1)) return true;
    mapping[v] = -1;
    used[image] = 0;
  }
  return false;
}

}  // namespace detail

/// Searches for a vertex bijection mapping the edge set of g1 (weights
/// included) exactly onto that of g2. Brute force with degree pruning;
/// capped at 10 vertices. Returns the witness permutation when found.
inline std::optional<std::vector<int>> isomorphism(const Graph& g1, const Graph& g2) {
  if (g1.vertex_count() > 10 || g2.vertex_count() > 10) {
    throw unsupported_size("isomorphism: brute force is capped at 10 vertices");
  }
  if (g1.vertex_count() != g2.vertex_count() || g1.directed() != g2.directed() ||
      g1.edge_count() != g2.edge_count()) {
    return std::nullopt;
  }
  auto d1 = degree_sequence(g1);
  auto d2 = degree_sequence(g2);
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  if (d1 != d2) return std::nullopt;

  std::vector<int> mapping(g1.vertex_count(), -1);
  std::vector<char> used(g1.vertex_count(), 0);
  if (detail::iso_search(g1, g2, mapping, used, 0)) return mapping;
  return std::nullopt;
}

inline bool is_isomorphic(const Graph& g1, const Graph& g2) {
  return isomorphism(g1, g2).has_value();
}

}  // namespace gct
