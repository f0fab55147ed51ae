#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "gct/distributions.hpp"
#include "gct/rng.hpp"

namespace gct {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Accumulated point cloud of the accretion run plus the running center
/// estimate (the componentwise mean of all points).
struct AccretionState {
  std::vector<Point> points;
  int iteration = 0;
  Point center;
  DistributionSpec spec_x;
  DistributionSpec spec_y;
};

/// 2-D histogram over equal-width bins spanning [min, max] per axis, max
/// edge inclusive.
struct DensityGrid {
  std::vector<double> x_edges;  // strictly increasing, bins+1 entries
  std::vector<double> y_edges;
  std::vector<std::vector<int>> counts;  // counts[xi][yi]
};

namespace detail {

inline std::vector<double> bin_edges(double lo, double hi, int bins) {
  if (lo == hi) {
    // Degenerate axis; widen so every point lands in a real cell.
    lo -= 0.5;
    hi += 0.5;
  }
  std::vector<double> edges(bins + 1);
  const double width = (hi - lo) / bins;
  for (int i = 0; i <= bins; ++i) edges[i] = lo + width * i;
  edges[bins] = hi;
  return edges;
}

inline int bin_index(double x, const std::vector<double>& edges) {
  const int bins = static_cast<int>(edges.size()) - 1;
  const double lo = edges.front(), hi = edges.back();
  if (x < lo || x > hi) return -1;
  int idx = static_cast<int>((x - lo) / (hi - lo) * bins);
  return std::min(idx, bins - 1);
}

}  // namespace detail

inline DensityGrid density_grid(const std::vector<Point>& points, int bins) {
  if (points.empty()) throw std::invalid_argument("density_grid: no points");
  if (bins < 1) throw std::invalid_argument("density_grid: bins must be >= 1");
  double x_lo = points[0].x, x_hi = points[0].x;
  double y_lo = points[0].y, y_hi = points[0].y;
  for (const auto& p : points) {
    x_lo = std::min(x_lo, p.x);
    x_hi = std::max(x_hi, p.x);
    y_lo = std::min(y_lo, p.y);
    y_hi = std::max(y_hi, p.y);
  }
  DensityGrid grid;
  grid.x_edges = detail::bin_edges(x_lo, x_hi, bins);
  grid.y_edges = detail::bin_edges(y_lo, y_hi, bins);
  grid.counts.assign(bins, std::vector<int>(bins, 0));
  for (const auto& p : points) {
    const int xi = detail::bin_index(p.x, grid.x_edges);
    const int yi = detail::bin_index(p.y, grid.y_edges);
    if (xi >= 0 && yi >= 0) ++grid.counts[xi][yi];
  }
  return grid;
}

struct AccretionSnapshot {
  int iteration = 0;
  AccretionState state;
  DensityGrid grid;
};

/// Centralized accretion: initial_count points are drawn from
/// (spec_x, spec_y), then each iteration appends batch_size fresh draws and
/// recomputes the center. Existing points never move. Snapshots (full state
/// plus density grid) are captured after the listed iterations.
///
/// One seeded stream drives the whole run, x before y per point, so the
/// snapshot list is a pure function of the arguments.
inline std::vector<AccretionSnapshot> run_accretion(
    const DistributionSpec& spec_x, const DistributionSpec& spec_y,
    int initial_count, int batch_size, int iterations, std::uint64_t seed,
    const std::vector<int>& snapshots, int bins = 50) {
  validate(spec_x);
  validate(spec_y);
  if (initial_count < 1) throw std::invalid_argument("run_accretion: initial_count must be >= 1");
  if (batch_size < 1) throw std::invalid_argument("run_accretion: batch_size must be >= 1");
  if (iterations < 1) throw std::invalid_argument("run_accretion: iterations must be >= 1");
  std::set<int> wanted(snapshots.begin(), snapshots.end());
  for (int s : wanted) {
    if (s < 1 || s > iterations) {
      throw std::invalid_argument("run_accretion: snapshot index " +
                                  std::to_string(s) + " outside [1, iterations]");
    }
  }

  Rng rng(seed);
  AccretionState state;
  state.spec_x = spec_x;
  state.spec_y = spec_y;
  auto draw_points = [&](int count) {
    for (int i = 0; i < count; ++i) {
      Point p;
      p.x = sample_one(spec_x, rng);
      p.y = sample_one(spec_y, rng);
      state.points.push_back(p);
    }
  };
  auto recenter = [&] {
    double sx = 0.0, sy = 0.0;
    for (const auto& p : state.points) {
      sx += p.x;
      sy += p.y;
    }
    state.center = {sx / state.points.size(), sy / state.points.size()};
  };

  draw_points(initial_count);
  recenter();

  std::vector<AccretionSnapshot> captured;
  for (int it = 1; it <= iterations; ++it) {
    draw_points(batch_size);
    recenter();
    state.iteration = it;
    if (wanted.count(it)) {
      captured.push_back({it, state, density_grid(state.points, bins)});
    }
  }
  return captured;
}

/// Euclidean distance of each snapshot's center from the final snapshot's
/// center.
inline std::vector<double> center_stability(const std::vector<AccretionSnapshot>& snapshots) {
  if (snapshots.size() < 2) {
    throw std::invalid_argument("center_stability: need at least 2 snapshots");
  }
  const Point last = snapshots.back().state.center;
  std::vector<double> drifts;
  drifts.reserve(snapshots.size());
  for (const auto& snap : snapshots) {
    drifts.push_back(std::hypot(snap.state.center.x - last.x,
                                snap.state.center.y - last.y));
  }
  return drifts;
}

}  // namespace gct
