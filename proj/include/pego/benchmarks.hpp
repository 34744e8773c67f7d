#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pego/box.hpp"
#include "pego/ego.hpp"
#include "pego/gp.hpp"

namespace pego {

enum class FStarSource { paper, derived_grid };

struct BenchmarkSpec {
  std::string name;
  int dim = 0;
  Box box;
  double f_star = 0.0;
  FStarSource f_star_source = FStarSource::paper;
  // The printed optimum when it disagrees with the formula's minimum
  // (Branin is listed as 0 although the expression bottoms out near 0.3979).
  double paper_claimed_f_star = std::numeric_limits<double>::quiet_NaN();
  Objective evaluator;

  // GP-sampled benchmarks only.
  std::shared_ptr<LazyGpOracle> oracle;
  double sup_abs_probe = std::numeric_limits<double>::quiet_NaN();
};

double rosenbrock(const Eigen::VectorXd& x);
double six_hump_camel(const Eigen::VectorXd& x);
double hartmann6(const Eigen::VectorXd& x);
double branin(const Eigen::VectorXd& x);
double michalewicz(const Eigen::VectorXd& x);

// Registry names: rosenbrock, camel, hartmann6, branin, michalewicz.
const std::vector<std::string>& synthetic_benchmark_names();
BenchmarkSpec synthetic_benchmark(const std::string& name);

struct GpBenchmarkOptions {
  int probe_per_dim = 4096;    // quasi-random probe points per dimension
  double sample_jitter = 1e-12;
  int refine_evals = 256;      // pattern-search budget for the f* estimate
};

// Draws a function from the GP prior on the unit hypercube, estimates its
// minimum over a Halton probe set refined by compass search (every probe is
// part of the same lazily materialized joint sample), and wraps it as a
// benchmark. Deterministic per seed.
BenchmarkSpec make_gp_benchmark(const KernelParams& kernel, int d,
                                std::uint64_t seed,
                                const GpBenchmarkOptions& opts = {});

}  // namespace pego
