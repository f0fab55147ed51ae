#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gct {

// Random construction exhausted its retry budget.
struct construction_failed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input exceeds the size cap of a brute-force algorithm.
struct unsupported_size : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An undirected reading was requested for an asymmetric matrix.
struct asymmetry_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct disconnected_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct isolated_vertex_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The plain averaging iteration oscillates on bipartite graphs; callers must
// opt into the lazy variant instead.
struct bipartite_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// f(a) and f(b) do not straddle a root.
struct bracket_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A root-finding failure that carries the iterates produced before it.
struct iteration_error : std::runtime_error {
  iteration_error(const std::string& what, std::vector<double> partial)
      : std::runtime_error(what), iterates(std::move(partial)) {}
  std::vector<double> iterates;
};

struct degenerate_secant_error : iteration_error {
  using iteration_error::iteration_error;
};

struct derivative_singularity_error : iteration_error {
  using iteration_error::iteration_error;
};

struct numeric_error : iteration_error {
  using iteration_error::iteration_error;
};

}  // namespace gct
