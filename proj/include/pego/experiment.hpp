#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pego/benchmarks.hpp"
#include "pego/bounds.hpp"
#include "pego/ego.hpp"

namespace pego {

// Flat key-value experiment description; every key can come from a preset,
// a JSON config file, or a command-line override (in that order).
struct ExperimentConfig {
  std::string benchmark = "branin";
  std::vector<double> eps_list{1e-6};
  int replications = 1;
  std::uint64_t seed = 0;
  int n_init = 5;
  int n_iter = 50;
  std::string kernel = "matern";  // "se" | "matern"
  double nu = 2.5;
  double length_scale = 0.0;  // 0 -> marginal-likelihood selection
  bool refit_every_iteration = true;
  int acq_budget = 0;  // 0 -> 2048 * d
  int probe_per_dim = 4096;
  std::vector<int> checkpoints{1, 50, 100, 200};
  std::string out_dir = ".";

  // ei-grid
  int grid_resolution = 200;
  std::string sample_source = "ego";  // "ego" | "random"
  int ei_grid_init = 25;
  int ei_grid_iters = 25;
  double ei_grid_reference_eps = 1e-6;

  // bounds sweep
  std::string bounds_kernel = "se";
  int bounds_d = 2;
  double bounds_nu = 2.5;
  double bounds_length_scale = 1.0;
  double bound_B = 1.0;
  std::vector<double> T_list{1e2, 1e4, 1e6};
  std::vector<double> bounds_eps_grid;  // empty -> 25 log-spaced in [1e-8, 1]
  double c_dl1 = 1.0, c_dl2 = 1.0, c_dl3 = 1.0;
  double c_nu = 1.0, c_dnul1 = 1.0, c_dnul2 = 1.0, c_add = 1.0;
};

// Known preset names: the five synthetic benchmarks plus
// gp-{se,matern}-{2,4}d. Throws on unknown names.
ExperimentConfig preset(const std::string& name);
std::vector<std::string> preset_names();

// Parses a flat JSON object; unknown keys are rejected.
ExperimentConfig parse_config_json(const std::string& text,
                                   ExperimentConfig base = {});
ExperimentConfig load_config_file(const std::string& path,
                                  ExperimentConfig base = {});

bool is_gp_benchmark(const std::string& name);

// Everything needed for one seeded run of the configured benchmark at one
// nugget value. For GP-sampled benchmarks the returned spec owns the lazily
// drawn objective (fresh per call, deterministic per rep_seed).
struct SingleRunSetup {
  BenchmarkSpec spec;
  RunConfig run;
};
SingleRunSetup make_single_run(const ExperimentConfig& cfg, double eps,
                               std::uint64_t rep_seed);

struct AggregateCell {
  std::string benchmark;
  double nugget = 0.0;
  int checkpoint = 0;
  double mean = 0.0;
  double median = 0.0;
  double p25 = 0.0;
  double p75 = 0.0;
};

struct AggregateReport {
  std::vector<AggregateCell> cells;  // ordered by (eps, checkpoint)
};

// Runs replications x eps_list full EGO runs and aggregates the average
// cumulative regret R_t/t at the checkpoints. Replications fan out over an
// OpenMP worker pool when parallel is set; the reduction is an ordered pass
// over the replication index, so serial and parallel agree exactly.
AggregateReport run_bench(const ExperimentConfig& cfg, bool parallel = true);

void write_aggregate_csv(const AggregateReport& report, std::ostream& os);
AggregateReport parse_aggregate_csv(std::istream& is);
std::string format_bench_table(const ExperimentConfig& cfg,
                               const AggregateReport& report);

double percentile(std::vector<double> values, double p);  // linear interp

// Bound sweep over (T, eps) for the configured kernel and constants.
std::vector<SweepCell> run_bounds_sweep(const ExperimentConfig& cfg);
// CSV schema: kernel,T,epsilon,c_T,u_T,case.
void write_sweep_csv(const std::vector<SweepCell>& cells, std::ostream& os);
void write_sweep_svg(const std::vector<SweepCell>& cells,
                     const std::string& path);

struct EiGridResult {
  std::vector<double> eps;     // ascending
  std::vector<double> ei_max;  // max EI over the grid per eps
  Eigen::MatrixXd grid_x;      // resolution^2 x 2, original coordinates
  std::vector<Eigen::VectorXd> ei;  // per eps, aligned with grid_x rows
};

// Figure-style EI study: build a sample set (LHS + EGO iterations at the
// reference nugget, or purely random points), then refit at each eps on the
// same samples and evaluate EI over a uniform grid.
EiGridResult run_ei_grid(const ExperimentConfig& cfg);

// CLI entry points; return a process exit code (0 ok, 1 numerical failure,
// 2 usage error).
int cmd_run(const ExperimentConfig& cfg);
int cmd_bench(const ExperimentConfig& cfg);
int cmd_bounds(const ExperimentConfig& cfg);
int cmd_ei_grid(const ExperimentConfig& cfg);

}  // namespace pego
