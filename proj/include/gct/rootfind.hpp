#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gct/error.hpp"

namespace gct {

/// A scalar function bundled with an optional analytic derivative, a domain
/// of interest, and an optional fixed-point rearrangement g with g(p) = p at
/// the roots of f.
struct ScalarFunction {
  std::function<double(double)> f;
  std::function<double(double)> derivative;        // empty: finite differences
  double lo = 0.0;
  double hi = 0.0;
  std::function<double(double)> fixed_point_form;  // empty: none known
};

/// Built-in functions addressable from the CLI:
///   paper       f(x) = x cos x - sin x on [0, 5], g(x) = tan x
///   quadratic2  f(x) = x^2 - 2 on [0, 5],         g(x) = (x + 2/x)/2
inline ScalarFunction builtin_function(const std::string& id) {
  if (id == "paper") {
    ScalarFunction fn;
    fn.f = [](double x) { return x * std::cos(x) - std::sin(x); };
    fn.derivative = [](double x) { return -x * std::sin(x); };
    fn.lo = 0.0;
    fn.hi = 5.0;
    fn.fixed_point_form = [](double x) { return std::tan(x); };
    return fn;
  }
  if (id == "quadratic2") {
    ScalarFunction fn;
    fn.f = [](double x) { return x * x - 2.0; };
    fn.derivative = [](double x) { return 2.0 * x; };
    fn.lo = 0.0;
    fn.hi = 5.0;
    fn.fixed_point_form = [](double x) { return 0.5 * (x + 2.0 / x); };
    return fn;
  }
  throw std::invalid_argument("builtin_function: unknown id '" + id + "'");
}

enum class RootMethod { fixed_point, bisection, secant, newton };

inline std::string method_name(RootMethod m) {
  switch (m) {
    case RootMethod::fixed_point: return "fixed_point";
    case RootMethod::bisection: return "bisection";
    case RootMethod::secant: return "secant";
    default: return "newton";
  }
}

struct RootFindReport {
  RootMethod method = RootMethod::fixed_point;
  std::vector<double> iterates;
  std::optional<double> root;
  /// Value of each algorithm's loop counter when it stopped (the counter
  /// starts at 1, except the secant method's which starts at 2).
  int iterations = 0;
  bool converged = false;
  double tolerance = 0.0;
};

/// Iterates p <- g(p) until |p - p_prev| < tol.
inline RootFindReport fixed_point(const ScalarFunction& g, double p0, double tol,
                                  int max_iters) {
  RootFindReport report;
  report.method = RootMethod::fixed_point;
  report.tolerance = tol;
  int i = 1;
  while (i <= max_iters) {
    const double p = g.f(p0);
    if (!std::isfinite(p)) {
      throw numeric_error("fixed_point: non-finite iterate", report.iterates);
    }
    report.iterates.push_back(p);
    if (std::abs(p - p0) < tol) {
      report.converged = true;
      report.root = p;
      report.iterations = i;
      return report;
    }
    ++i;
    p0 = p;
  }
  report.iterations = max_iters;
  return report;
}

/// Repeated halving of a bracket [a, b] with f(a) f(b) < 0; stops when the
/// midpoint is an exact root or the half-width falls below tol.
inline RootFindReport bisection(const ScalarFunction& fn, double a, double b,
                                double tol, int max_iters) {
  RootFindReport report;
  report.method = RootMethod::bisection;
  report.tolerance = tol;
  double fa = fn.f(a);
  const double fb = fn.f(b);
  if (fa * fb >= 0.0) {
    throw bracket_error("bisection: f(a) and f(b) must have opposite signs");
  }
  int i = 1;
  while (i <= max_iters) {
    const double p = a + (b - a) / 2.0;
    const double fp = fn.f(p);
    report.iterates.push_back(p);
    if (fp == 0.0 || (b - a) / 2.0 < tol) {
      report.converged = true;
      report.root = p;
      report.iterations = i;
      return report;
    }
    ++i;
    if (fa * fp > 0.0) {
      a = p;
      fa = fp;
    } else {
      b = p;
    }
  }
  report.iterations = max_iters;
  return report;
}

/// Secant update p = p1 - q1 (p1 - p0)/(q1 - q0); stops when |p - p1| < tol.
inline RootFindReport secant(const ScalarFunction& fn, double p0, double p1,
                             double tol, int max_iters) {
  RootFindReport report;
  report.method = RootMethod::secant;
  report.tolerance = tol;
  double q0 = fn.f(p0);
  double q1 = fn.f(p1);
  int i = 2;
  while (i <= max_iters) {
    if (q1 == q0) {
      throw degenerate_secant_error("secant: flat step (q1 = q0)", report.iterates);
    }
    const double p = p1 - q1 * (p1 - p0) / (q1 - q0);
    if (!std::isfinite(p)) {
      throw numeric_error("secant: non-finite iterate", report.iterates);
    }
    report.iterates.push_back(p);
    if (std::abs(p - p1) < tol) {
      report.converged = true;
      report.root = p;
      report.iterations = i;
      return report;
    }
    ++i;
    p0 = p1;
    q0 = q1;
    p1 = p;
    q1 = fn.f(p);
  }
  report.iterations = max_iters;
  return report;
}

namespace detail {

/// Central difference with step cbrt(eps) * max(1, |p|).
inline double numeric_derivative(const std::function<double(double)>& f, double p) {
  const double h =
      std::cbrt(std::numeric_limits<double>::epsilon()) * std::max(1.0, std::abs(p));
  return (f(p + h) - f(p - h)) / (2.0 * h);
}

}  // namespace detail

/// Newton update p <- p - f(p)/f'(p); stops when |p - p_prev| < tol. Uses
/// the analytic derivative when available, otherwise central differences.
inline RootFindReport newton(const ScalarFunction& fn, double p0, double tol,
                             int max_iters) {
  RootFindReport report;
  report.method = RootMethod::newton;
  report.tolerance = tol;
  int i = 1;
  while (i <= max_iters) {
    const double fp = fn.f(p0);
    const double dfp =
        fn.derivative ? fn.derivative(p0) : detail::numeric_derivative(fn.f, p0);
    if (std::abs(dfp) < 1e-14) {
      throw derivative_singularity_error("newton: derivative vanishes at iterate",
                                         report.iterates);
    }
    const double p = p0 - fp / dfp;
    if (!std::isfinite(p)) {
      throw numeric_error("newton: non-finite iterate", report.iterates);
    }
    report.iterates.push_back(p);
    if (std::abs(p - p0) < tol) {
      report.converged = true;
      report.root = p;
      report.iterations = i;
      return report;
    }
    ++i;
    p0 = p;
  }
  report.iterations = max_iters;
  return report;
}

struct CompareConfig {
  double tol = 1e-6;
  int max_iters = 100;
  double bracket_lo = 4.0;  // bisection bracket and secant start pair
  double bracket_hi = 5.0;
  double newton_start = 4.5;
  double fixed_point_start = 4.5;
};

struct ComparisonRow {
  RootFindReport report;
  std::string note;  // "out-of-bracket", error text, or empty
};

/// Runs all four methods against one function. Per-method failures are
/// captured in the row's note instead of propagating; a method that
/// converges outside [bracket_lo, bracket_hi] is annotated out-of-bracket.
inline std::vector<ComparisonRow> compare_methods(const ScalarFunction& fn,
                                                  const CompareConfig& cfg) {
  std::vector<ComparisonRow> rows;
  auto add = [&](RootMethod method, auto&& run) {
    ComparisonRow row;
    row.report.method = method;
    row.report.tolerance = cfg.tol;
    try {
      row.report = run();
    } catch (const iteration_error& e) {
      row.report.iterates = e.iterates;
      row.report.iterations = static_cast<int>(e.iterates.size());
      row.note = e.what();
    } catch (const std::exception& e) {
      row.note = e.what();
    }
    if (row.report.converged && row.report.root &&
        (*row.report.root < cfg.bracket_lo || *row.report.root > cfg.bracket_hi)) {
      row.note = "out-of-bracket";
    }
    rows.push_back(std::move(row));
  };

  add(RootMethod::fixed_point, [&] {
    if (!fn.fixed_point_form) {
      throw std::invalid_argument("fixed_point: no rearrangement g available");
    }
    ScalarFunction g;
    g.f = fn.fixed_point_form;
    return fixed_point(g, cfg.fixed_point_start, cfg.tol, cfg.max_iters);
  });
  add(RootMethod::bisection,
      [&] { return bisection(fn, cfg.bracket_lo, cfg.bracket_hi, cfg.tol, cfg.max_iters); });
  add(RootMethod::secant,
      [&] { return secant(fn, cfg.bracket_lo, cfg.bracket_hi, cfg.tol, cfg.max_iters); });
  add(RootMethod::newton,
      [&] { return newton(fn, cfg.newton_start, cfg.tol, cfg.max_iters); });
  return rows;
}

/// Aligned text table of comparison rows.
inline std::string comparison_table(const std::vector<ComparisonRow>& rows) {
  std::ostringstream out;
  out << "Method        Iterations  Result          Converged  Note\n";
  for (const auto& row : rows) {
    std::ostringstream result;
    if (row.report.root) {
      result.precision(7);
      result << std::fixed << *row.report.root;
    } else {
      result << "-";
    }
    std::string name = method_name(row.report.method);
    out << name << std::string(14 - name.size(), ' ');
    std::string iters = std::to_string(row.report.iterations);
    out << iters << std::string(12 - iters.size(), ' ');
    std::string res = result.str();
    out << res << std::string(res.size() < 16 ? 16 - res.size() : 1, ' ');
    out << (row.report.converged ? "yes" : "no ") << "        ";
    out << row.note << "\n";
  }
  return out.str();
}

}  // namespace gct
