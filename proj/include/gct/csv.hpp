#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gct/centralized.hpp"
#include "gct/consensus.hpp"
#include "gct/graph.hpp"
#include "gct/matrix.hpp"
#include "gct/rootfind.hpp"

namespace gct {

/// Shortest decimal form that parses back to the same double ('.' separator,
/// no locale). Used for every numeric CSV field so outputs round-trip
/// exactly and are byte-stable.
inline std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s) {
  double value = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("csv: not a number: '" + std::string(s) + "'");
  }
  return value;
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

inline std::vector<std::vector<std::string>> read_csv_rows(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("csv: cannot open " + path.string());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    rows.push_back(split_csv_line(line));
  }
  return rows;
}

inline void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("csv: cannot write " + path.string());
  out << body;
}

inline bool parses_as_index(const std::string& s, int& value) {
  if (s.empty()) return false;
  int v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || v < 0) return false;
  value = v;
  return true;
}

}  // namespace detail

/// Edge-list CSV: header `source,target` (plus `,weight` when any weight is
/// not 1), one row per edge in canonical order, label strings per vertex.
inline void write_edge_list_csv(const std::filesystem::path& path, const Graph& g) {
  bool weighted = false;
  for (const auto& e : g.edges())
    if (e.weight != 1.0) weighted = true;

  std::ostringstream out;
  out << (weighted ? "source,target,weight\n" : "source,target\n");
  for (const auto& e : g.edges()) {
    out << g.label(e.u) << ',' << g.label(e.v);
    if (weighted) out << ',' << format_double(e.weight);
    out << '\n';
  }
  detail::write_file(path, out.str());
}

/// Reads an edge-list CSV. Labels that are all canonical decimal indices are
/// used as vertex indices directly (so unlabeled graphs round-trip); any
/// other label set is assigned indices in first-appearance order and kept as
/// labels.
inline Graph read_edge_list_csv(const std::filesystem::path& path, bool directed) {
  const auto rows = detail::read_csv_rows(path);
  if (rows.empty()) throw std::invalid_argument("edge list: empty file");
  const auto& header = rows[0];
  if (header.size() < 2 || header[0] != "source" || header[1] != "target") {
    throw std::invalid_argument("edge list: expected header source,target[,weight]");
  }
  const bool weighted = header.size() >= 3 && header[2] == "weight";

  bool numeric = true;
  int max_index = -1;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    for (int c = 0; c < 2; ++c) {
      int v;
      if (!detail::parses_as_index(rows[r][c], v)) {
        numeric = false;
      } else {
        max_index = std::max(max_index, v);
      }
    }
  }

  std::vector<Edge> edges;
  std::vector<std::string> labels;
  int n = 0;
  if (numeric) {
    n = max_index + 1;
    for (std::size_t r = 1; r < rows.size(); ++r) {
      if (rows[r].size() < (weighted ? 3u : 2u)) {
        throw std::invalid_argument("edge list: short row");
      }
      int u, v;
      detail::parses_as_index(rows[r][0], u);
      detail::parses_as_index(rows[r][1], v);
      edges.push_back({u, v, weighted ? parse_double(rows[r][2]) : 1.0});
    }
  } else {
    std::unordered_map<std::string, int> index_of;
    auto intern = [&](const std::string& label) {
      auto [it, inserted] = index_of.insert({label, n});
      if (inserted) {
        labels.push_back(label);
        ++n;
      }
      return it->second;
    };
    for (std::size_t r = 1; r < rows.size(); ++r) {
      if (rows[r].size() < (weighted ? 3u : 2u)) {
        throw std::invalid_argument("edge list: short row");
      }
      const int u = intern(rows[r][0]);
      const int v = intern(rows[r][1]);
      edges.push_back({u, v, weighted ? parse_double(rows[r][2]) : 1.0});
    }
  }
  return Graph(n, directed, std::move(edges), std::move(labels));
}

/// Plain numeric grid, one row per line.
inline void write_matrix_csv(const std::filesystem::path& path, const DenseMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
  detail::write_file(path, out.str());
}

/// Square numeric grid with an optional leading label row and column.
inline void write_adjacency_csv(const std::filesystem::path& path, const DenseMatrix& m,
                                bool with_labels) {
  if (!with_labels || m.row_labels.empty()) {
    write_matrix_csv(path, m);
    return;
  }
  std::ostringstream out;
  for (const auto& label : m.row_labels) out << ',' << label;
  out << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << m.row_labels[i];
    for (std::size_t j = 0; j < m.cols(); ++j) out << ',' << format_double(m(i, j));
    out << '\n';
  }
  detail::write_file(path, out.str());
}

/// Reads a square grid; a non-numeric first cell in the first data row marks
/// a labeled file.
inline DenseMatrix read_adjacency_csv(const std::filesystem::path& path) {
  const auto rows = detail::read_csv_rows(path);
  if (rows.empty()) throw std::invalid_argument("adjacency: empty file");

  bool labeled = false;
  if (rows.size() >= 2 && rows[0].size() == rows[1].size() && !rows[1].empty()) {
    try {
      parse_double(rows[1][0]);
    } catch (const std::invalid_argument&) {
      labeled = true;
    }
  }
  if (rows[0].size() >= 1 && rows[0][0].empty()) labeled = true;

  const std::size_t start = labeled ? 1 : 0;
  const std::size_t offset = labeled ? 1 : 0;
  const std::size_t n = rows.size() - start;
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[start + i];
    if (row.size() != n + offset) {
      throw std::invalid_argument("adjacency: grid is not square");
    }
    if (labeled) m.row_labels.push_back(row[0]);
    for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_double(row[j + offset]);
  }
  if (labeled) m.col_labels = m.row_labels;
  return m;
}

/// Trace CSV: header `iteration,node_0,...,node_{n-1}`, one row per
/// iteration including the initial draw.
inline void write_trace_csv(const std::filesystem::path& path,
                            const ConsensusTrace& trace) {
  std::ostringstream out;
  out << "iteration";
  for (int v = 0; v < trace.n; ++v) out << ",node_" << v;
  out << '\n';
  for (std::size_t t = 0; t < trace.values.size(); ++t) {
    out << t;
    for (double x : trace.values[t]) out << ',' << format_double(x);
    out << '\n';
  }
  detail::write_file(path, out.str());
}

/// Degree statistics CSV: `degree,count,cumulative`.
inline void write_degree_stats_csv(const std::filesystem::path& path,
                                   const DegreeStatistics& stats) {
  std::ostringstream out;
  out << "degree,count,cumulative\n";
  for (std::size_t i = 0; i < stats.histogram.size(); ++i) {
    out << stats.histogram[i].first << ',' << stats.histogram[i].second << ','
        << stats.cumulative[i].second << '\n';
  }
  detail::write_file(path, out.str());
}

inline void write_points_csv(const std::filesystem::path& path,
                             const std::vector<Point>& points) {
  std::ostringstream out;
  out << "x,y\n";
  for (const auto& p : points) {
    out << format_double(p.x) << ',' << format_double(p.y) << '\n';
  }
  detail::write_file(path, out.str());
}

/// Density counts as a numeric grid (rows = x bins) plus a sidecar JSON
/// carrying the bin edges.
inline void write_density_csv(const std::filesystem::path& grid_path,
                              const std::filesystem::path& edges_path,
                              const DensityGrid& grid) {
  std::ostringstream out;
  for (const auto& row : grid.counts) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ',';
      out << row[j];
    }
    out << '\n';
  }
  detail::write_file(grid_path, out.str());

  nlohmann::json edges;
  edges["x_edges"] = grid.x_edges;
  edges["y_edges"] = grid.y_edges;
  detail::write_file(edges_path, edges.dump(2) + "\n");
}

/// Comparison CSV: `method,iterations,result,converged`.
inline void write_rootfind_csv(const std::filesystem::path& path,
                               const std::vector<ComparisonRow>& rows) {
  std::ostringstream out;
  out << "method,iterations,result,converged\n";
  for (const auto& row : rows) {
    out << method_name(row.report.method) << ',' << row.report.iterations << ','
        << (row.report.root ? format_double(*row.report.root) : "") << ','
        << (row.report.converged ? "true" : "false") << '\n';
  }
  detail::write_file(path, out.str());
}

inline void write_samples_csv(const std::filesystem::path& path,
                              const std::vector<double>& values) {
  std::ostringstream out;
  out << "value\n";
  for (double v : values) out << format_double(v) << '\n';
  detail::write_file(path, out.str());
}

}  // namespace gct
