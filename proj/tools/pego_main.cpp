#include <omp.h>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pego/experiment.hpp"

namespace {

struct CommonFlags {
  std::string preset;
  std::string config;
  std::optional<std::uint64_t> seed;
  std::vector<double> eps;
  std::optional<int> reps;
  std::string out;
  int threads = 0;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--preset", flags.preset,
                  "named experiment preset (one of the benchmark names)");
  cmd->add_option("--config", flags.config, "JSON config file");
  cmd->add_option("--seed", flags.seed, "base seed");
  cmd->add_option("--eps", flags.eps, "nugget value(s)");
  cmd->add_option("--reps", flags.reps, "macro-replication count");
  cmd->add_option("--out", flags.out, "output directory");
  cmd->add_option("--threads", flags.threads, "OpenMP thread count");
}

pego::ExperimentConfig resolve(const CommonFlags& flags) {
  pego::ExperimentConfig cfg;
  if (!flags.preset.empty()) cfg = pego::preset(flags.preset);
  if (!flags.config.empty()) {
    cfg = pego::load_config_file(flags.config, std::move(cfg));
  }
  if (flags.seed) cfg.seed = *flags.seed;
  if (!flags.eps.empty()) cfg.eps_list = flags.eps;
  if (flags.reps) cfg.replications = *flags.reps;
  if (!flags.out.empty()) cfg.out_dir = flags.out;
  if (flags.threads > 0) omp_set_num_threads(flags.threads);
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "practical EGO: GP/EI optimization runs, regret benchmarks, "
      "regret-bound sweeps and EI grid dumps"};
  app.require_subcommand(1);

  CommonFlags run_flags, bench_flags, bounds_flags, grid_flags;

  CLI::App* run = app.add_subcommand("run", "single optimization run");
  add_common(run, run_flags);
  CLI::App* bench =
      app.add_subcommand("bench", "macro-replicated benchmark table");
  add_common(bench, bench_flags);
  CLI::App* bounds =
      app.add_subcommand("bounds", "cumulative regret bound sweep");
  add_common(bounds, bounds_flags);
  CLI::App* grid = app.add_subcommand("ei-grid", "EI grid per nugget value");
  add_common(grid, grid_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (run->parsed()) return pego::cmd_run(resolve(run_flags));
    if (bench->parsed()) return pego::cmd_bench(resolve(bench_flags));
    if (bounds->parsed()) return pego::cmd_bounds(resolve(bounds_flags));
    if (grid->parsed()) return pego::cmd_ei_grid(resolve(grid_flags));
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
