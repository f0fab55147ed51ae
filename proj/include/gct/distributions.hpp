#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "gct/rng.hpp"

namespace gct {

struct Uniform {
  double a = 0.0;  // min, a < b
  double b = 1.0;  // max
};

struct Normal {
  double mean = 0.0;
  double stddev = 1.0;  // > 0
};

struct Poisson {
  double lambda = 4.0;  // mean, > 0
};

struct Binomial {
  int trials = 20;  // >= 1
  double p = 0.5;   // in [0, 1]
};

struct Exponential {
  double beta = 1.0;  // scale = mean, > 0
};

struct ChiSquare {
  int dof = 1;  // positive integer
};

using DistributionSpec =
    std::variant<Uniform, Normal, Poisson, Binomial, Exponential, ChiSquare>;

inline void validate(const DistributionSpec& spec) {
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Uniform>) {
          if (!(s.a < s.b)) throw std::invalid_argument("uniform: requires a < b");
        } else if constexpr (std::is_same_v<T, Normal>) {
          if (!(s.stddev > 0)) throw std::invalid_argument("normal: requires stddev > 0");
        } else if constexpr (std::is_same_v<T, Poisson>) {
          if (!(s.lambda > 0)) throw std::invalid_argument("poisson: requires lambda > 0");
        } else if constexpr (std::is_same_v<T, Binomial>) {
          if (s.trials < 1) throw std::invalid_argument("binomial: requires n >= 1");
          if (!(s.p >= 0 && s.p <= 1)) {
            throw std::invalid_argument("binomial: requires p in [0, 1]");
          }
        } else if constexpr (std::is_same_v<T, Exponential>) {
          if (!(s.beta > 0)) throw std::invalid_argument("exponential: requires beta > 0");
        } else {
          if (s.dof < 1) throw std::invalid_argument("chi_square: requires v >= 1");
        }
      },
      spec);
}

inline std::string kind_name(const DistributionSpec& spec) {
  switch (spec.index()) {
    case 0: return "uniform";
    case 1: return "normal";
    case 2: return "poisson";
    case 3: return "binomial";
    case 4: return "exponential";
    default: return "chi_square";
  }
}

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

/// Closed-form mean and variance.
inline Moments analytic_moments(const DistributionSpec& spec) {
  validate(spec);
  return std::visit(
      [](const auto& s) -> Moments {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Uniform>) {
          return {(s.a + s.b) / 2.0, (s.b - s.a) * (s.b - s.a) / 12.0};
        } else if constexpr (std::is_same_v<T, Normal>) {
          return {s.mean, s.stddev * s.stddev};
        } else if constexpr (std::is_same_v<T, Poisson>) {
          return {s.lambda, s.lambda};
        } else if constexpr (std::is_same_v<T, Binomial>) {
          return {s.trials * s.p, s.trials * s.p * (1.0 - s.p)};
        } else if constexpr (std::is_same_v<T, Exponential>) {
          return {s.beta, s.beta * s.beta};
        } else {
          return {static_cast<double>(s.dof), 2.0 * s.dof};
        }
      },
      spec);
}

namespace detail {

inline bool is_integer(double x) { return std::isfinite(x) && x == std::floor(x); }

inline double normal_draw(Rng& rng) {
  // Marsaglia polar method; the second coordinate is discarded so that one
  // call consumes a self-contained slice of the stream.
  double x, s;
  do {
    x = rng.uniform(-1.0, 1.0);
    const double y = rng.uniform(-1.0, 1.0);
    s = x * x + y * y;
  } while (s >= 1.0 || s == 0.0);
  return x * std::sqrt(-2.0 * std::log(s) / s);
}

inline double poisson_draw(double lambda, Rng& rng) {
  if (lambda <= 30.0) {
    // Knuth multiplication.
    const double floor_p = std::exp(-lambda);
    int k = 0;
    double p = 1.0;
    do {
      ++k;
      p *= rng.uniform01();
    } while (p > floor_p);
    return k - 1;
  }
  // Normal approximation, rounded and clamped at zero.
  const double v = lambda + std::sqrt(lambda) * normal_draw(rng);
  return std::max(0.0, std::floor(v + 0.5));
}

inline double binomial_draw(int n, double p, Rng& rng) {
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return n;
  if (n <= 64) {
    int successes = 0;
    for (int i = 0; i < n; ++i)
      if (rng.uniform01() < p) ++successes;
    return successes;
  }
  // Inverse-CDF walk with the pmf recurrence b(x+1) = b(x) (n-x)/(x+1) p/(1-p).
  const double u = rng.uniform01();
  double pmf = std::pow(1.0 - p, n);
  double cdf = pmf;
  int x = 0;
  while (cdf < u && x < n) {
    pmf *= (static_cast<double>(n - x) / (x + 1)) * (p / (1.0 - p));
    cdf += pmf;
    ++x;
  }
  return x;
}

}  // namespace detail

/// One draw from the distribution, consuming the Rng stream.
inline double sample_one(const DistributionSpec& spec, Rng& rng) {
  return std::visit(
      [&rng](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Uniform>) {
          return rng.uniform(s.a, s.b);
        } else if constexpr (std::is_same_v<T, Normal>) {
          return s.mean + s.stddev * detail::normal_draw(rng);
        } else if constexpr (std::is_same_v<T, Poisson>) {
          return detail::poisson_draw(s.lambda, rng);
        } else if constexpr (std::is_same_v<T, Binomial>) {
          return detail::binomial_draw(s.trials, s.p, rng);
        } else if constexpr (std::is_same_v<T, Exponential>) {
          // Inverse CDF; 1-u lies in (0, 1] so the log is finite.
          return -s.beta * std::log(1.0 - rng.uniform01());
        } else {
          double acc = 0.0;
          for (int i = 0; i < s.dof; ++i) {
            const double z = detail::normal_draw(rng);
            acc += z * z;
          }
          return acc;
        }
      },
      spec);
}

/// count i.i.d. draws, a pure function of (spec, count, seed). Poisson and
/// binomial draws are integer-valued reals.
inline std::vector<double> sample(const DistributionSpec& spec, std::size_t count,
                                  std::uint64_t seed) {
  validate(spec);
  Rng rng(seed);
  std::vector<double> out(count);
  for (auto& x : out) x = sample_one(spec, rng);
  return out;
}

/// Pointwise density; probability mass at integer x for poisson/binomial
/// (0 at non-integers).
inline double density(const DistributionSpec& spec, double x) {
  validate(spec);
  return std::visit(
      [x](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Uniform>) {
          return (x >= s.a && x <= s.b) ? 1.0 / (s.b - s.a) : 0.0;
        } else if constexpr (std::is_same_v<T, Normal>) {
          const double z = (x - s.mean) / s.stddev;
          return std::exp(-0.5 * z * z) / (s.stddev * std::sqrt(2.0 * M_PI));
        } else if constexpr (std::is_same_v<T, Poisson>) {
          if (!detail::is_integer(x) || x < 0) return 0.0;
          return std::exp(-s.lambda + x * std::log(s.lambda) - std::lgamma(x + 1.0));
        } else if constexpr (std::is_same_v<T, Binomial>) {
          if (!detail::is_integer(x) || x < 0 || x > s.trials) return 0.0;
          if (s.p == 0.0) return x == 0 ? 1.0 : 0.0;
          if (s.p == 1.0) return x == s.trials ? 1.0 : 0.0;
          const double n = s.trials;
          const double log_choose =
              std::lgamma(n + 1.0) - std::lgamma(x + 1.0) - std::lgamma(n - x + 1.0);
          return std::exp(log_choose + x * std::log(s.p) +
                          (n - x) * std::log(1.0 - s.p));
        } else if constexpr (std::is_same_v<T, Exponential>) {
          return x > 0 ? std::exp(-x / s.beta) / s.beta : 0.0;
        } else {
          if (x <= 0) return 0.0;
          const double half_v = s.dof / 2.0;
          return std::exp((half_v - 1.0) * std::log(x) - x / 2.0 -
                          half_v * std::log(2.0) - std::lgamma(half_v));
        }
      },
      spec);
}

/// JSON form: {"kind": "...", <parameters>}. Kinds and fields:
///   uniform {a, b} | normal {mean, stddev} | poisson {lambda}
///   binomial {n, p} | exponential {beta} | chi_square {v}
/// poisson and binomial may omit their parameters; the defaults (lambda 4,
/// n 20 with p 0.5) are filled in and show up when serialized back.
inline nlohmann::json to_json(const DistributionSpec& spec) {
  nlohmann::json j;
  j["kind"] = kind_name(spec);
  std::visit(
      [&j](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Uniform>) {
          j["a"] = s.a;
          j["b"] = s.b;
        } else if constexpr (std::is_same_v<T, Normal>) {
          j["mean"] = s.mean;
          j["stddev"] = s.stddev;
        } else if constexpr (std::is_same_v<T, Poisson>) {
          j["lambda"] = s.lambda;
        } else if constexpr (std::is_same_v<T, Binomial>) {
          j["n"] = s.trials;
          j["p"] = s.p;
        } else if constexpr (std::is_same_v<T, Exponential>) {
          j["beta"] = s.beta;
        } else {
          j["v"] = s.dof;
        }
      },
      spec);
  return j;
}

inline DistributionSpec spec_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  DistributionSpec spec;
  if (kind == "uniform") {
    spec = Uniform{j.at("a").get<double>(), j.at("b").get<double>()};
  } else if (kind == "normal") {
    spec = Normal{j.at("mean").get<double>(), j.at("stddev").get<double>()};
  } else if (kind == "poisson") {
    Poisson p;
    if (j.contains("lambda")) p.lambda = j.at("lambda").get<double>();
    spec = p;
  } else if (kind == "binomial") {
    Binomial b;
    if (j.contains("n")) b.trials = j.at("n").get<int>();
    if (j.contains("p")) b.p = j.at("p").get<double>();
    spec = b;
  } else if (kind == "exponential") {
    spec = Exponential{j.at("beta").get<double>()};
  } else if (kind == "chi_square") {
    spec = ChiSquare{j.at("v").get<int>()};
  } else {
    throw std::invalid_argument("distribution: unknown kind '" + kind + "'");
  }
  validate(spec);
  return spec;
}

}  // namespace gct
