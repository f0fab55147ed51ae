#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gct/centralized.hpp"
#include "gct/csv.hpp"

namespace gct {
namespace svg {

// Self-contained SVG charts: fixed canvas, linear axes, no styling beyond
// what makes the data legible. CSV files are the authoritative outputs;
// these exist for quick visual checks.

namespace detail {

constexpr double kWidth = 640, kHeight = 480;
constexpr double kMarginLeft = 60, kMarginRight = 20;
constexpr double kMarginTop = 40, kMarginBottom = 40;

struct Scale {
  double lo = 0, hi = 1, out_lo = 0, out_hi = 1;
  double operator()(double x) const {
    if (hi == lo) return (out_lo + out_hi) / 2;
    return out_lo + (x - lo) / (hi - lo) * (out_hi - out_lo);
  }
};

inline std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '&') out += "&amp;";
    else if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else out += c;
  }
  return out;
}

inline void open_chart(std::ostringstream& out, const std::string& title) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
      << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"16\">" << escape(title)
      << "</text>\n";
}

inline void axes(std::ostringstream& out, const Scale& x, const Scale& y) {
  out << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kHeight - kMarginBottom
      << "\" x2=\"" << kWidth - kMarginRight << "\" y2=\""
      << kHeight - kMarginBottom << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop << "\" x2=\""
      << kMarginLeft << "\" y2=\"" << kHeight - kMarginBottom
      << "\" stroke=\"black\"/>\n";
  auto tick_label = [&out](double px, double py, const std::string& anchor,
                           double value) {
    out << "<text x=\"" << px << "\" y=\"" << py << "\" text-anchor=\"" << anchor
        << "\" font-family=\"sans-serif\" font-size=\"11\">"
        << format_double(value) << "</text>\n";
  };
  tick_label(kMarginLeft, kHeight - kMarginBottom + 16, "middle", x.lo);
  tick_label(kWidth - kMarginRight, kHeight - kMarginBottom + 16, "middle", x.hi);
  tick_label(kMarginLeft - 6, kHeight - kMarginBottom, "end", y.lo);
  tick_label(kMarginLeft - 6, kMarginTop + 10, "end", y.hi);
}

inline std::string series_color(std::size_t i) {
  static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                  "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                  "#bcbd22", "#17becf"};
  return palette[i % 10];
}

}  // namespace detail

/// Line chart with one polyline per series; series i's point t is
/// (t, values[t][i]).
inline std::string line_chart(const std::vector<std::vector<double>>& values,
                              const std::string& title) {
  std::ostringstream out;
  detail::open_chart(out, title);
  if (!values.empty() && !values[0].empty()) {
    double lo = values[0][0], hi = values[0][0];
    for (const auto& row : values)
      for (double v : row) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    detail::Scale xs{0, static_cast<double>(values.size() - 1), detail::kMarginLeft,
                     detail::kWidth - detail::kMarginRight};
    detail::Scale ys{lo, hi, detail::kHeight - detail::kMarginBottom,
                     detail::kMarginTop};
    detail::axes(out, xs, ys);
    const std::size_t series = values[0].size();
    for (std::size_t s = 0; s < series; ++s) {
      out << "<polyline fill=\"none\" stroke=\"" << detail::series_color(s)
          << "\" stroke-width=\"1\" points=\"";
      for (std::size_t t = 0; t < values.size(); ++t) {
        if (t) out << ' ';
        out << xs(static_cast<double>(t)) << ',' << ys(values[t][s]);
      }
      out << "\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

/// Bar chart over (bin, count) pairs.
inline std::string histogram(const std::vector<std::pair<int, int>>& bins,
                             const std::string& title) {
  std::ostringstream out;
  detail::open_chart(out, title);
  if (!bins.empty()) {
    int lo = bins.front().first, hi = bins.back().first, peak = 1;
    for (const auto& [bin, count] : bins) peak = std::max(peak, count);
    detail::Scale xs{static_cast<double>(lo) - 0.5, static_cast<double>(hi) + 0.5,
                     detail::kMarginLeft, detail::kWidth - detail::kMarginRight};
    detail::Scale ys{0, static_cast<double>(peak),
                     detail::kHeight - detail::kMarginBottom, detail::kMarginTop};
    detail::axes(out, xs, ys);
    for (const auto& [bin, count] : bins) {
      const double x0 = xs(bin - 0.4), x1 = xs(bin + 0.4);
      const double y0 = ys(0), y1 = ys(count);
      out << "<rect x=\"" << x0 << "\" y=\"" << y1 << "\" width=\"" << x1 - x0
          << "\" height=\"" << y0 - y1 << "\" fill=\"#1f77b4\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

/// Scatter panel of points, with the given center marked.
inline std::string scatter(const std::vector<Point>& points, Point center,
                           const std::string& title) {
  std::ostringstream out;
  detail::open_chart(out, title);
  if (!points.empty()) {
    double x_lo = points[0].x, x_hi = points[0].x;
    double y_lo = points[0].y, y_hi = points[0].y;
    for (const auto& p : points) {
      x_lo = std::min(x_lo, p.x);
      x_hi = std::max(x_hi, p.x);
      y_lo = std::min(y_lo, p.y);
      y_hi = std::max(y_hi, p.y);
    }
    detail::Scale xs{x_lo, x_hi, detail::kMarginLeft,
                     detail::kWidth - detail::kMarginRight};
    detail::Scale ys{y_lo, y_hi, detail::kHeight - detail::kMarginBottom,
                     detail::kMarginTop};
    detail::axes(out, xs, ys);
    for (const auto& p : points) {
      out << "<circle cx=\"" << xs(p.x) << "\" cy=\"" << ys(p.y)
          << "\" r=\"1.5\" fill=\"#1f77b4\" fill-opacity=\"0.4\"/>\n";
    }
    out << "<circle cx=\"" << xs(center.x) << "\" cy=\"" << ys(center.y)
        << "\" r=\"5\" fill=\"#d62728\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace svg
}  // namespace gct
