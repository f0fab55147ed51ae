#pragma once

// Independent oracles used by the test suites. Everything here deliberately
// avoids the library's matrix/power machinery: walks are enumerated one by
// one, reachability is computed by relaxation, and integrals by quadrature.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "gct/graph.hpp"

namespace oracles {

inline void count_walks_rec(const gct::Graph& g, int at, int depth, int max_depth,
                            std::vector<std::vector<long long>>& counts) {
  if (depth == max_depth) return;
  for (int next : g.neighbors(at)) {
    ++counts[depth][next];
    count_walks_rec(g, next, depth + 1, max_depth, counts);
  }
}

/// counts[l-1][j] = number of walks of length l from `from` to j, enumerated
/// step by step.
inline std::vector<std::vector<long long>> walk_counts_from(const gct::Graph& g,
                                                            int from, int max_len) {
  std::vector<std::vector<long long>> counts(
      max_len, std::vector<long long>(g.vertex_count(), 0));
  count_walks_rec(g, from, 0, max_len, counts);
  return counts;
}

/// Walks of length 1..k from i to j, summed.
inline long long walks_up_to(const gct::Graph& g, int i, int j, int k) {
  const auto counts = walk_counts_from(g, i, k);
  long long total = 0;
  for (int l = 0; l < k; ++l) total += counts[l][j];
  return total;
}

/// Boolean transitive closure by repeated edge relaxation.
inline std::vector<std::vector<bool>> reachability(const gct::Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (const auto& e : g.edges()) reach[e.u][e.v] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (reach[i][j])
          for (int l = 0; l < n; ++l)
            if (reach[j][l] && !reach[i][l]) {
              reach[i][l] = true;
              changed = true;
            }
  }
  return reach;
}

/// Two-sample Kolmogorov-Smirnov statistic.
inline double ks_statistic(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  std::size_t ia = 0, ib = 0;
  while (ia < a.size() && ib < b.size()) {
    if (a[ia] <= b[ib]) ++ia;
    else ++ib;
    const double fa = static_cast<double>(ia) / a.size();
    const double fb = static_cast<double>(ib) / b.size();
    d = std::max(d, std::abs(fa - fb));
  }
  return d;
}

/// Composite Simpson's rule.
inline double integrate(const std::function<double(double)>& f, double lo, double hi,
                        int panels) {
  const double h = (hi - lo) / panels;
  double acc = f(lo) + f(hi);
  for (int i = 1; i < panels; ++i) acc += f(lo + i * h) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

/// Sample fourth central moment.
inline double fourth_central_moment(const std::vector<double>& xs) {
  double m = 0.0;
  for (double x : xs) m += x;
  m /= xs.size();
  double acc = 0.0;
  for (double x : xs) {
    const double d = x - m;
    acc += d * d * d * d;
  }
  return acc / xs.size();
}

}  // namespace oracles
