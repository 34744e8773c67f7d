#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pego/acquisition.hpp"
#include "pego/box.hpp"
#include "pego/gp.hpp"

namespace pego {

using Objective = std::function<double(const Eigen::VectorXd&)>;

// One full optimization run: Latin hypercube design, then n_iter rounds of
// EI maximization / observation / refit. The domain is normalized to the
// unit hypercube internally; traces report original coordinates.
struct RunConfig {
  Objective objective;
  Box box;
  int n_init = 5;
  int n_iter = 50;
  double nugget = 1e-6;
  KernelParams kernel = KernelParams::se(1.0);

  // Length-scale selection by marginal likelihood (unit-cube coordinates).
  // When enabled the scale is selected on the initial design and, if
  // refit_every_iteration is also set, re-selected after every observation.
  bool select_length_scale = false;
  bool refit_every_iteration = true;
  std::vector<double> length_scale_grid;  // empty -> default grid

  int acq_budget = 0;  // 0 -> 2048 * d EI evaluations
  std::uint64_t seed = 0;
  double f_star = 0.0;
};

struct TraceRow {
  int t = 0;               // 1-based EGO iteration
  Eigen::VectorXd x;       // original coordinates
  double f = 0.0;
  double f_plus = 0.0;     // incumbent including this observation
  double sigma_prev = 0.0; // sigma_{t-1}(x_t) under the model that chose x_t
  double ei_max = 0.0;
  double r = 0.0;          // f - f_star
  double R = 0.0;          // cumulative regret
};

struct RunTrace {
  Eigen::MatrixXd init_x;  // original coordinates
  Eigen::VectorXd init_f;
  std::vector<TraceRow> rows;
  double f_star = 0.0;
  bool f_star_warning = false;  // f_star above min observed + 1e-9
  double incumbent_before(int t) const;  // f_{t-1}^+, t in 1..T
  double final_f_plus() const;
};

// n points, one coordinate per equal-width stratum along every dimension.
Eigen::MatrixXd latin_hypercube(int n, const Box& box, Rng& rng);

RunTrace run_practical_ego(const RunConfig& cfg);

struct RegretSeries {
  Eigen::VectorXd r;
  Eigen::VectorXd cumulative;
  Eigen::VectorXd average;  // R_t / t
  bool f_star_warning = false;
};

RegretSeries regret_series(const RunTrace& trace, double f_star);

// sum_t max{f_{t-1}^+ - f(x_t), 0}; at most 2B on a run with |f| <= B.
double exploitation_telescope_sum(const RunTrace& trace);

// CSV schema: t,x_1..x_d,f,f_plus,sigma_prev,ei_max,r,R (one row per
// EGO iteration; the initial design carries no regret rows).
void write_trace_csv(const RunTrace& trace, std::ostream& os);
void write_trace_csv(const RunTrace& trace, const std::string& path);

}  // namespace pego
