#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "gct/error.hpp"
#include "gct/graph.hpp"
#include "gct/matrix.hpp"

namespace gct {

namespace detail {

inline std::vector<std::string> vertex_labels(const Graph& g) {
  std::vector<std::string> out;
  out.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) out.push_back(g.label(v));
  return out;
}

inline bool has_self_loop(const Graph& g) {
  for (const auto& e : g.edges())
    if (e.u == e.v) return true;
  return false;
}

/// Count of distinct non-self neighbors; the Laplacian degree.
inline int simple_degree(const Graph& g, int v) {
  int d = static_cast<int>(g.neighbors(v).size());
  if (g.has_edge(v, v)) --d;
  return d;
}

}  // namespace detail

/// n x n matrix with entry (i, j) equal to the weight of edge i->j (both
/// directions for undirected graphs), else 0. An undirected self-loop puts
/// 2w on the diagonal so that row sums equal degrees; a directed self-loop
/// puts w.
inline DenseMatrix adjacency_matrix(const Graph& g) {
  const std::size_t n = g.vertex_count();
  DenseMatrix a(n, n);
  for (const auto& e : g.edges()) {
    if (g.directed()) {
      a(e.u, e.v) = e.weight;
    } else if (e.u == e.v) {
      a(e.u, e.u) = 2.0 * e.weight;
    } else {
      a(e.u, e.v) = e.weight;
      a(e.v, e.u) = e.weight;
    }
  }
  if (!g.labels().empty()) {
    a.row_labels = detail::vertex_labels(g);
    a.col_labels = a.row_labels;
  }
  return a;
}

/// Inverse of adjacency_matrix: nonzero entries become edges carrying that
/// weight. An undirected reading requires symmetry within 1e-12 and halves
/// diagonal entries back into self-loop weights.
inline Graph graph_from_adjacency(const DenseMatrix& m, bool directed) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("graph_from_adjacency: matrix is not square");
  }
  const std::size_t n = m.rows();
  std::vector<Edge> edges;
  if (directed) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (m(i, j) != 0.0) {
          edges.push_back({static_cast<int>(i), static_cast<int>(j), m(i, j)});
        }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (std::abs(m(i, j) - m(j, i)) > 1e-12) {
          throw asymmetry_error(
              "graph_from_adjacency: asymmetric matrix for an undirected reading");
        }
        if (m(i, j) != 0.0) {
          edges.push_back({static_cast<int>(i), static_cast<int>(j), m(i, j)});
        }
      }
      if (m(i, i) != 0.0) {
        edges.push_back({static_cast<int>(i), static_cast<int>(i), m(i, i) / 2.0});
      }
    }
  }
  return Graph(static_cast<int>(n), directed, std::move(edges), m.row_labels);
}

/// Unsigned incidence matrix of an undirected graph: n x |E|, one column per
/// edge in canonical edge order, with 1 at each endpoint. A self-loop column
/// carries a single 1 at its vertex.
inline DenseMatrix incidence_matrix(const Graph& g) {
  if (g.directed()) {
    throw std::invalid_argument("incidence_matrix: directed graphs unsupported");
  }
  DenseMatrix q(g.vertex_count(), g.edge_count());
  std::size_t col = 0;
  for (const auto& e : g.edges()) {
    q(e.u, col) = 1.0;
    q(e.v, col) = 1.0;
    ++col;
  }
  if (!g.labels().empty()) q.row_labels = detail::vertex_labels(g);
  return q;
}

/// Bipartite reading of a 0/1 vertex-by-entity incidence matrix: rows become
/// one vertex class, columns another, and each 1 an undirected edge between
/// the two classes. Row/column labels are carried into vertex labels.
inline Graph graph_from_incidence(const DenseMatrix& q) {
  const int rows = static_cast<int>(q.rows());
  const int cols = static_cast<int>(q.cols());
  std::vector<Edge> edges;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (q(i, j) != 0.0) edges.push_back({i, rows + j});

  std::vector<std::string> labels;
  if (!q.row_labels.empty() || !q.col_labels.empty()) {
    for (int i = 0; i < rows; ++i)
      labels.push_back(q.row_labels.empty() ? "r" + std::to_string(i)
                                            : q.row_labels[i]);
    for (int j = 0; j < cols; ++j)
      labels.push_back(q.col_labels.empty() ? "c" + std::to_string(j)
                                            : q.col_labels[j]);
  }
  return Graph(rows + cols, false, std::move(edges), std::move(labels));
}

/// Signed incidence matrix of a simple undirected graph: each column has +1
/// at the smaller endpoint and -1 at the larger. Satisfies Qs*Qs^T = D - A.
inline DenseMatrix signed_incidence_matrix(const Graph& g) {
  if (g.directed()) {
    throw std::invalid_argument("signed_incidence_matrix: directed graphs unsupported");
  }
  if (detail::has_self_loop(g)) {
    throw std::invalid_argument("signed_incidence_matrix: graph must be simple");
  }
  DenseMatrix q(g.vertex_count(), g.edge_count());
  std::size_t col = 0;
  for (const auto& e : g.edges()) {
    q(e.u, col) = 1.0;
    q(e.v, col) = -1.0;
    ++col;
  }
  return q;
}

/// Graph Laplacian over the unweighted skeleton (edge presence only).
///
/// Combinatorial: diagonal d_i, -1 where adjacent; self-loops contribute
/// nothing. Normalized: unit diagonal where d_i != 0 and -1/sqrt(d_i d_j)
/// where adjacent; self-loops are rejected.
inline DenseMatrix laplacian(const Graph& g, bool normalized) {
  if (g.directed()) {
    throw std::invalid_argument("laplacian: directed graphs unsupported");
  }
  if (normalized && detail::has_self_loop(g)) {
    throw std::invalid_argument("laplacian: normalized form requires no self-loops");
  }
  const std::size_t n = g.vertex_count();
  std::vector<int> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = detail::simple_degree(g, static_cast<int>(v));

  DenseMatrix l(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    l(i, i) = normalized ? (deg[i] != 0 ? 1.0 : 0.0) : deg[i];
    for (int j : g.neighbors(static_cast<int>(i))) {
      if (static_cast<std::size_t>(j) == i) continue;
      l(i, j) = normalized ? -1.0 / std::sqrt(static_cast<double>(deg[i]) * deg[j])
                           : -1.0;
    }
  }
  if (!g.labels().empty()) {
    l.row_labels = detail::vertex_labels(g);
    l.col_labels = l.row_labels;
  }
  return l;
}

/// Qs*Qs^T computed explicitly from the signed incidence matrix; equals the
/// combinatorial Laplacian D - A on simple undirected graphs.
inline DenseMatrix laplacian_via_incidence(const Graph& g) {
  const DenseMatrix qs = signed_incidence_matrix(g);
  return qs * qs.transpose();
}

/// Sum of matrix powers P + P^2 + ... + P^k of the 0/1 step matrix, whose
/// (i, j) entry counts walks of length 1..k from i to j. Weights are
/// ignored; a self-loop is a step that stays in place.
inline DenseMatrix walk_count_sum(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("walk_count_sum: k must be >= 1");
  const std::size_t n = g.vertex_count();
  DenseMatrix step(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (int j : g.neighbors(static_cast<int>(i))) step(i, j) = 1.0;

  DenseMatrix power = step;
  DenseMatrix sum = step;
  for (int i = 2; i <= k; ++i) {
    power = power * step;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) sum(r, c) += power(r, c);
  }
  if (!g.labels().empty()) {
    sum.row_labels = detail::vertex_labels(g);
    sum.col_labels = sum.row_labels;
  }
  return sum;
}

struct SpectralCheck {
  bool is_regular = false;
  /// The common degree k when regular, NaN otherwise. For a regular graph the
  /// all-ones vector is an eigenvector of the skeleton adjacency matrix with
  /// this eigenvalue.
  double degree_eigenvalue = std::numeric_limits<double>::quiet_NaN();
  /// True iff eigenvalue k has multiplicity one, which happens exactly when
  /// the regular graph is connected.
  bool multiplicity_one = false;
};

/// Checks the spectral signature of an undirected regular graph on its 0/1
/// skeleton adjacency matrix (weights ignored).
inline SpectralCheck regular_spectral_check(const Graph& g) {
  if (g.directed()) {
    throw std::invalid_argument("regular_spectral_check: directed graphs unsupported");
  }
  SpectralCheck report;
  const int n = g.vertex_count();
  if (n == 0) return report;

  const auto degrees = degree_sequence(g);
  for (int d : degrees) {
    if (d != degrees[0]) return report;
  }
  report.is_regular = true;
  const double k = degrees[0];
  report.degree_eigenvalue = k;

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    if (e.u == e.v) {
      a(e.u, e.u) = 2.0;
    } else {
      a(e.u, e.v) = 1.0;
      a(e.v, e.u) = 1.0;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  int multiplicity = 0;
  for (int i = 0; i < n; ++i) {
    if (std::abs(solver.eigenvalues()[i] - k) < 1e-6) ++multiplicity;
  }
  report.multiplicity_one = (multiplicity == 1);
  return report;
}

/// Eigenvalues of a symmetric matrix, ascending.
inline std::vector<double> symmetric_eigenvalues(const DenseMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("symmetric_eigenvalues: matrix is not square");
  }
  const int n = static_cast<int>(m.rows());
  Eigen::MatrixXd e(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e(i, j) = m(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(e);
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = solver.eigenvalues()[i];
  return out;
}

}  // namespace gct
