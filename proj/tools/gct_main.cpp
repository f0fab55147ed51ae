#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gct/cli.hpp"

namespace {

std::filesystem::path require_out(const std::string& out) {
  if (out.empty()) throw std::invalid_argument("missing --out directory");
  return out;
}

gct::DistributionSpec spec_from_flags(const std::string& kind, double a, double b,
                                      double mean, double stddev, double lambda,
                                      int n, double p, double beta, int v) {
  gct::DistributionSpec spec;
  if (kind == "uniform") spec = gct::Uniform{a, b};
  else if (kind == "normal") spec = gct::Normal{mean, stddev};
  else if (kind == "poisson") spec = gct::Poisson{lambda};
  else if (kind == "binomial") spec = gct::Binomial{n, p};
  else if (kind == "exponential") spec = gct::Exponential{beta};
  else if (kind == "chi_square") spec = gct::ChiSquare{v};
  else throw std::invalid_argument("dist sample: unknown kind '" + kind + "'");
  gct::validate(spec);
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gct - graph, consensus, accretion and root-finding toolkit"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::string out;
  std::string config;
  app.add_option("--seed", seed, "Seed for stochastic commands");
  app.add_option("--out", out, "Output directory (CSV path for root find)");
  app.add_option("--config", config, "JSON config file");

  // graph gen / graph matrices
  auto* graph = app.add_subcommand("graph", "Graph construction and matrix export");
  graph->require_subcommand(1);
  graph->fallthrough();

  gct::cli::GraphGenOptions gen_opt;
  std::string gen_input;
  auto* gen = graph->add_subcommand("gen", "Generate a graph (edges.csv, summary.json)");
  gen->fallthrough();
  gen->add_option("--kind", gen_opt.kind,
                  "ring|complete|regular|erdos-renyi|from-adjacency|from-edgelist")
      ->required();
  gen->add_option("--n", gen_opt.n, "Vertex count");
  gen->add_option("--k", gen_opt.k, "Degree for regular graphs");
  gen->add_option("--p", gen_opt.p, "Edge probability for erdos-renyi");
  gen->add_option("--input", gen_input, "Input CSV for from-adjacency/from-edgelist");
  gen->add_flag("--directed", gen_opt.directed, "Read file inputs as directed");
  gen->callback([&] {
    gen_opt.seed = seed;
    gen_opt.input = gen_input;
    gen_opt.out_dir = require_out(out);
    gct::cli::cmd_graph_gen(gen_opt);
  });

  gct::cli::MatricesOptions mat_opt;
  std::string mat_graph_file;
  auto* matrices = graph->add_subcommand(
      "matrices", "Export matrix representations of a graph file");
  matrices->fallthrough();
  matrices->add_option("--graph", mat_graph_file, "Edge-list or adjacency CSV")
      ->required();
  matrices
      ->add_option("--which", mat_opt.which,
                   "adjacency|incidence|laplacian|normalized-laplacian|walk-sum")
      ->required();
  matrices->add_option("--k", mat_opt.walk_k, "Walk length bound for walk-sum");
  matrices->add_flag("--directed", mat_opt.directed, "Read the graph as directed");
  matrices->callback([&] {
    mat_opt.graph_file = mat_graph_file;
    mat_opt.out_dir = require_out(out);
    gct::cli::cmd_matrices(mat_opt);
  });

  // consensus run
  auto* consensus = app.add_subcommand("consensus", "Distributed averaging runs");
  consensus->require_subcommand(1);
  consensus->fallthrough();
  auto* crun = consensus->add_subcommand("run", "Run one averaging experiment");
  crun->fallthrough();
  crun->callback([&] {
    if (config.empty()) throw std::invalid_argument("consensus run: missing --config");
    gct::cli::cmd_consensus(config, require_out(out));
  });

  // central run
  auto* central = app.add_subcommand("central", "Centralized accretion runs");
  central->require_subcommand(1);
  central->fallthrough();
  auto* arun = central->add_subcommand("run", "Run one accretion simulation");
  arun->fallthrough();
  arun->callback([&] {
    if (config.empty()) throw std::invalid_argument("central run: missing --config");
    gct::cli::cmd_central(config, require_out(out));
  });

  // root find
  auto* root = app.add_subcommand("root", "Root-finding comparisons");
  root->require_subcommand(1);
  root->fallthrough();
  gct::cli::RootOptions root_opt;
  auto* rfind = root->add_subcommand("find", "Run root-finding method(s)");
  rfind->fallthrough();
  rfind->add_option("--method", root_opt.method,
                    "all|fixed-point|bisection|secant|newton");
  rfind->add_option("--function", root_opt.function, "paper|quadratic2");
  rfind->add_option("--a", root_opt.a, "Bracket left endpoint / secant p0");
  rfind->add_option("--b", root_opt.b, "Bracket right endpoint / secant p1");
  rfind->add_option("--p0", root_opt.p0, "Start point for newton/fixed-point");
  rfind->add_option("--tol", root_opt.tol, "Stopping tolerance");
  rfind->add_option("--max-iters", root_opt.max_iters, "Iteration cap");
  rfind->callback([&] {
    root_opt.out_csv = out;
    gct::cli::cmd_root(root_opt);
  });

  // dist sample
  auto* dist = app.add_subcommand("dist", "Distribution sampling");
  dist->require_subcommand(1);
  dist->fallthrough();
  std::string d_kind = "uniform";
  double d_a = 0.0, d_b = 1.0, d_mean = 0.0, d_stddev = 1.0, d_lambda = 4.0;
  int d_n = 20, d_v = 1;
  double d_p = 0.5, d_beta = 1.0;
  std::size_t d_count = 1000;
  auto* dsample = dist->add_subcommand("sample", "Draw seeded samples");
  dsample->fallthrough();
  dsample->add_option("--kind", d_kind,
                      "uniform|normal|poisson|binomial|exponential|chi_square");
  dsample->add_option("--a", d_a, "Uniform min");
  dsample->add_option("--b", d_b, "Uniform max");
  dsample->add_option("--mean", d_mean, "Normal mean");
  dsample->add_option("--stddev", d_stddev, "Normal standard deviation");
  dsample->add_option("--lambda", d_lambda, "Poisson mean");
  dsample->add_option("--n", d_n, "Binomial trial count");
  dsample->add_option("--p", d_p, "Binomial success probability");
  dsample->add_option("--beta", d_beta, "Exponential scale (mean)");
  dsample->add_option("--v", d_v, "Chi-square degrees of freedom");
  dsample->add_option("--count", d_count, "Number of draws");
  dsample->callback([&] {
    gct::cli::DistSampleOptions opt;
    if (!config.empty()) {
      opt.spec = gct::spec_from_json(gct::cli::detail::load_json(config));
    } else {
      opt.spec = spec_from_flags(d_kind, d_a, d_b, d_mean, d_stddev, d_lambda, d_n,
                                 d_p, d_beta, d_v);
    }
    opt.count = d_count;
    opt.seed = seed;
    opt.out_dir = require_out(out);
    gct::cli::cmd_dist_sample(opt);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "gct: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
