#include "pego/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace pego {

namespace {

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_tag(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

KernelParams kernel_from_config(const ExperimentConfig& cfg, double l) {
  if (cfg.kernel == "se") return KernelParams::se(l);
  if (cfg.kernel == "matern") return KernelParams::matern(cfg.nu, l);
  throw std::invalid_argument("unknown kernel: " + cfg.kernel);
}

std::filesystem::path out_path(const ExperimentConfig& cfg,
                               const std::string& file) {
  std::filesystem::create_directories(cfg.out_dir);
  return std::filesystem::path(cfg.out_dir) / file;
}

}  // namespace

bool is_gp_benchmark(const std::string& name) {
  return name.rfind("gp-", 0) == 0;
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names = synthetic_benchmark_names();
  for (const char* n : {"gp-se-2d", "gp-matern-2d", "gp-se-4d",
                        "gp-matern-4d"}) {
    names.push_back(n);
  }
  return names;
}

ExperimentConfig preset(const std::string& name) {
  ExperimentConfig cfg;
  cfg.benchmark = name;
  if (name == "rosenbrock" || name == "camel" || name == "hartmann6") {
    cfg.kernel = "se";
  } else if (name == "branin" || name == "michalewicz") {
    cfg.kernel = "matern";
    cfg.nu = 2.5;
  } else if (is_gp_benchmark(name)) {
    const bool se = name == "gp-se-2d" || name == "gp-se-4d";
    const bool d4 = name == "gp-se-4d" || name == "gp-matern-4d";
    if (!se && name != "gp-matern-2d" && name != "gp-matern-4d") {
      throw std::invalid_argument("unknown preset: " + name);
    }
    cfg.kernel = se ? "se" : "matern";
    cfg.nu = 2.5;
    cfg.length_scale = 0.2;  // sampling scale; the source never names one
    cfg.refit_every_iteration = false;
    cfg.n_init = d4 ? 40 : 20;
    cfg.n_iter = 200;
    cfg.replications = 20;
    cfg.eps_list = {1e-10, 1e-6, 1e-4};
    cfg.seed = 1;
    return cfg;
  } else {
    throw std::invalid_argument("unknown preset: " + name);
  }
  // Synthetic protocol: LHS design, likelihood-selected length scale,
  // 100 macro-replications, budget 200 (100 for the two short examples).
  cfg.length_scale = 0.0;
  cfg.refit_every_iteration = true;
  cfg.replications = 100;
  cfg.eps_list = {1e-2, 1e-4, 1e-6};
  cfg.seed = 1;
  cfg.n_init = name == "hartmann6" ? 50 : 5;
  cfg.n_iter = (name == "hartmann6" || name == "michalewicz") ? 100 : 200;
  if (cfg.n_iter < 200) cfg.checkpoints = {1, 25, 50, 100};
  return cfg;
}

ExperimentConfig parse_config_json(const std::string& text,
                                   ExperimentConfig base) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object()) {
    throw std::invalid_argument("config: expected a JSON object");
  }
  ExperimentConfig cfg = std::move(base);
  for (const auto& [key, value] : j.items()) {
    if (key == "benchmark") cfg.benchmark = value.get<std::string>();
    else if (key == "eps") {
      cfg.eps_list = value.get<std::vector<double>>();
      if (cfg.eps_list.empty()) {
        throw std::invalid_argument("config: empty eps list");
      }
    }
    else if (key == "replications") cfg.replications = value.get<int>();
    else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
    else if (key == "n_init") cfg.n_init = value.get<int>();
    else if (key == "n_iter") cfg.n_iter = value.get<int>();
    else if (key == "kernel") cfg.kernel = value.get<std::string>();
    else if (key == "nu") cfg.nu = value.get<double>();
    else if (key == "length_scale") cfg.length_scale = value.get<double>();
    else if (key == "refit_every_iteration")
      cfg.refit_every_iteration = value.get<bool>();
    else if (key == "acq_budget") cfg.acq_budget = value.get<int>();
    else if (key == "probe_per_dim") cfg.probe_per_dim = value.get<int>();
    else if (key == "checkpoints")
      cfg.checkpoints = value.get<std::vector<int>>();
    else if (key == "out_dir") cfg.out_dir = value.get<std::string>();
    else if (key == "grid_resolution") cfg.grid_resolution = value.get<int>();
    else if (key == "sample_source")
      cfg.sample_source = value.get<std::string>();
    else if (key == "ei_grid_init") cfg.ei_grid_init = value.get<int>();
    else if (key == "ei_grid_iters") cfg.ei_grid_iters = value.get<int>();
    else if (key == "ei_grid_reference_eps")
      cfg.ei_grid_reference_eps = value.get<double>();
    else if (key == "bounds_kernel")
      cfg.bounds_kernel = value.get<std::string>();
    else if (key == "bounds_d") cfg.bounds_d = value.get<int>();
    else if (key == "bounds_nu") cfg.bounds_nu = value.get<double>();
    else if (key == "bounds_length_scale")
      cfg.bounds_length_scale = value.get<double>();
    else if (key == "bound_B") cfg.bound_B = value.get<double>();
    else if (key == "T_list") cfg.T_list = value.get<std::vector<double>>();
    else if (key == "bounds_eps_grid") {
      cfg.bounds_eps_grid = value.get<std::vector<double>>();
      if (cfg.bounds_eps_grid.empty()) {
        throw std::invalid_argument("config: empty bounds eps grid");
      }
    }
    else if (key == "c_dl1") cfg.c_dl1 = value.get<double>();
    else if (key == "c_dl2") cfg.c_dl2 = value.get<double>();
    else if (key == "c_dl3") cfg.c_dl3 = value.get<double>();
    else if (key == "c_nu") cfg.c_nu = value.get<double>();
    else if (key == "c_dnul1") cfg.c_dnul1 = value.get<double>();
    else if (key == "c_dnul2") cfg.c_dnul2 = value.get<double>();
    else if (key == "c_add") cfg.c_add = value.get<double>();
    else throw std::invalid_argument("config: unknown key '" + key + "'");
  }
  return cfg;
}

ExperimentConfig load_config_file(const std::string& path,
                                  ExperimentConfig base) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("config: cannot open " + path);
  std::ostringstream buf;
  buf << is.rdbuf();
  return parse_config_json(buf.str(), std::move(base));
}

SingleRunSetup make_single_run(const ExperimentConfig& cfg, double eps,
                               std::uint64_t rep_seed) {
  SingleRunSetup setup;
  if (is_gp_benchmark(cfg.benchmark)) {
    if (!(cfg.length_scale > 0.0)) {
      throw std::invalid_argument(
          "GP-sampled benchmarks need a fixed length_scale");
    }
    const int d = cfg.benchmark.find("4d") != std::string::npos ? 4 : 2;
    GpBenchmarkOptions opts;
    opts.probe_per_dim = cfg.probe_per_dim;
    setup.spec = make_gp_benchmark(kernel_from_config(cfg, cfg.length_scale),
                                   d, split_seed(rep_seed, 1), opts);
  } else {
    setup.spec = synthetic_benchmark(cfg.benchmark);
  }

  RunConfig& run = setup.run;
  run.objective = setup.spec.evaluator;
  run.box = setup.spec.box;
  run.n_init = cfg.n_init;
  run.n_iter = cfg.n_iter;
  run.nugget = eps;
  run.acq_budget = cfg.acq_budget;
  run.seed = rep_seed;
  run.f_star = setup.spec.f_star;
  if (cfg.length_scale > 0.0) {
    run.kernel = kernel_from_config(cfg, cfg.length_scale);
    run.select_length_scale = false;
  } else {
    run.kernel = kernel_from_config(cfg, 1.0);
    run.select_length_scale = true;
    run.refit_every_iteration = cfg.refit_every_iteration;
  }
  return setup;
}

double percentile(std::vector<double> values, double p) {
  if (values.empty()) throw std::invalid_argument("percentile: empty");
  std::sort(values.begin(), values.end());
  const double h = (static_cast<double>(values.size()) - 1.0) * p;
  const size_t lo = static_cast<size_t>(std::floor(h));
  const size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (h - lo) * (values[hi] - values[lo]);
}

AggregateReport run_bench(const ExperimentConfig& cfg, bool parallel) {
  if (cfg.replications < 1) {
    throw std::invalid_argument("bench: replications must be >= 1");
  }
  if (cfg.eps_list.empty()) {
    throw std::invalid_argument("bench: empty eps list");
  }
  std::vector<int> checkpoints = cfg.checkpoints;
  checkpoints.erase(
      std::remove_if(checkpoints.begin(), checkpoints.end(),
                     [&](int t) { return t < 1 || t > cfg.n_iter; }),
      checkpoints.end());
  if (checkpoints.empty()) {
    throw std::invalid_argument("bench: no checkpoint within n_iter");
  }

  const int ne = static_cast<int>(cfg.eps_list.size());
  const int total = ne * cfg.replications;
  // avg regret per (eps, rep, checkpoint)
  std::vector<Eigen::VectorXd> avg(static_cast<size_t>(total));
  std::vector<std::string> errors(static_cast<size_t>(total));

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int idx = 0; idx < total; ++idx) {
    const int e = idx / cfg.replications;
    const int rep = idx % cfg.replications;
    try {
      const SingleRunSetup setup = make_single_run(
          cfg, cfg.eps_list[static_cast<size_t>(e)],
          cfg.seed + static_cast<std::uint64_t>(rep));
      const RunTrace trace = run_practical_ego(setup.run);
      Eigen::VectorXd at(checkpoints.size());
      for (size_t c = 0; c < checkpoints.size(); ++c) {
        const TraceRow& row =
            trace.rows[static_cast<size_t>(checkpoints[c]) - 1];
        at(static_cast<Eigen::Index>(c)) = row.R / row.t;
      }
      avg[static_cast<size_t>(idx)] = std::move(at);
    } catch (const std::exception& ex) {
      errors[static_cast<size_t>(idx)] = ex.what();
    }
  }
  for (int idx = 0; idx < total; ++idx) {
    if (!errors[static_cast<size_t>(idx)].empty()) {
      throw std::runtime_error("replication " +
                               std::to_string(idx % cfg.replications) +
                               " failed: " + errors[static_cast<size_t>(idx)]);
    }
  }

  AggregateReport report;
  for (int e = 0; e < ne; ++e) {
    for (size_t c = 0; c < checkpoints.size(); ++c) {
      std::vector<double> vals;
      vals.reserve(static_cast<size_t>(cfg.replications));
      for (int rep = 0; rep < cfg.replications; ++rep) {
        vals.push_back(avg[static_cast<size_t>(e * cfg.replications + rep)](
            static_cast<Eigen::Index>(c)));
      }
      AggregateCell cell;
      cell.benchmark = cfg.benchmark;
      cell.nugget = cfg.eps_list[static_cast<size_t>(e)];
      cell.checkpoint = checkpoints[c];
      cell.mean =
          std::accumulate(vals.begin(), vals.end(), 0.0) / vals.size();
      cell.median = percentile(vals, 0.5);
      cell.p25 = percentile(vals, 0.25);
      cell.p75 = percentile(vals, 0.75);
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

void write_aggregate_csv(const AggregateReport& report, std::ostream& os) {
  os << "benchmark,epsilon,t,mean,median,p25,p75\n";
  for (const AggregateCell& c : report.cells) {
    os << c.benchmark << "," << fmt17(c.nugget) << "," << c.checkpoint << ","
       << fmt17(c.mean) << "," << fmt17(c.median) << "," << fmt17(c.p25)
       << "," << fmt17(c.p75) << "\n";
  }
}

AggregateReport parse_aggregate_csv(std::istream& is) {
  AggregateReport report;
  std::string line;
  if (!std::getline(is, line) ||
      line != "benchmark,epsilon,t,mean,median,p25,p75") {
    throw std::runtime_error("aggregate csv: bad header");
  }
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    AggregateCell c;
    std::string field;
    std::getline(ls, c.benchmark, ',');
    std::getline(ls, field, ',');
    c.nugget = std::stod(field);
    std::getline(ls, field, ',');
    c.checkpoint = std::stoi(field);
    std::getline(ls, field, ',');
    c.mean = std::stod(field);
    std::getline(ls, field, ',');
    c.median = std::stod(field);
    std::getline(ls, field, ',');
    c.p25 = std::stod(field);
    std::getline(ls, field, ',');
    c.p75 = std::stod(field);
    report.cells.push_back(std::move(c));
  }
  return report;
}

std::string format_bench_table(const ExperimentConfig& cfg,
                               const AggregateReport& report) {
  std::map<double, std::map<int, double>> by_eps;
  std::vector<int> checkpoints;
  for (const AggregateCell& c : report.cells) {
    by_eps[c.nugget][c.checkpoint] = c.mean;
    if (std::find(checkpoints.begin(), checkpoints.end(), c.checkpoint) ==
        checkpoints.end()) {
      checkpoints.push_back(c.checkpoint);
    }
  }
  std::sort(checkpoints.begin(), checkpoints.end());

  int d = 2;
  if (!is_gp_benchmark(cfg.benchmark)) {
    d = synthetic_benchmark(cfg.benchmark).dim;
  } else if (cfg.benchmark.find("4d") != std::string::npos) {
    d = 4;
  }
  std::ostringstream os;
  os << "d\tkernel\tepsilon";
  for (int t : checkpoints) os << "\tt=" << t;
  os << "\n";
  for (const auto& [eps, row] : by_eps) {
    os << d << "\t" << cfg.kernel << "\t" << fmt_tag(eps);
    for (int t : checkpoints) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.3f", row.at(t));
      os << "\t" << buf;
    }
    os << "\n";
  }
  return os.str();
}

std::vector<SweepCell> run_bounds_sweep(const ExperimentConfig& cfg) {
  std::vector<double> grid = cfg.bounds_eps_grid;
  if (grid.empty()) {
    for (int i = 0; i < 25; ++i) {
      grid.push_back(std::pow(10.0, -8.0 + 8.0 * i / 24.0));
    }
  }
  const BoundConstants bc(cfg.bound_B, grid.front());
  if (cfg.bounds_kernel == "se") {
    const MigConstants mc = MigConstants::se(
        cfg.bounds_d, cfg.bounds_length_scale, cfg.c_dl1, cfg.c_dl2, cfg.c_dl3);
    return sweep_nugget(KernelFamily::SE, cfg.T_list, grid, bc, mc);
  }
  if (cfg.bounds_kernel == "matern") {
    const MigConstants mc = MigConstants::matern(
        cfg.bounds_d, cfg.bounds_nu, cfg.bounds_length_scale, cfg.c_nu,
        cfg.c_dnul1, cfg.c_dnul2, cfg.c_add);
    return sweep_nugget(KernelFamily::Matern, cfg.T_list, grid, bc, mc);
  }
  throw std::invalid_argument("unknown bounds kernel: " + cfg.bounds_kernel);
}

void write_sweep_csv(const std::vector<SweepCell>& cells, std::ostream& os) {
  os << "kernel,T,epsilon,c_T,u_T,case\n";
  for (const SweepCell& c : cells) {
    os << (c.kernel == KernelFamily::SE ? "se" : "matern") << ","
       << fmt17(c.T) << "," << fmt17(c.nugget) << "," << fmt17(c.c_t) << ","
       << fmt17(c.u_t) << "," << to_string(c.label) << "\n";
  }
}

void write_sweep_svg(const std::vector<SweepCell>& cells,
                     const std::string& path) {
  if (cells.empty()) throw std::invalid_argument("svg: no sweep cells");
  const double W = 640, H = 480, ml = 70, mr = 20, mt = 20, mb = 50;
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  std::map<double, std::vector<const SweepCell*>> by_t;
  for (const SweepCell& c : cells) {
    const double x = std::log10(c.nugget);
    const double y = std::log10(std::max(c.u_t, 1e-300));
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
    by_t[c.T].push_back(&c);
  }
  if (xmax <= xmin) xmax = xmin + 1;
  if (ymax <= ymin) ymax = ymin + 1;
  const auto px = [&](double x) {
    return ml + (x - xmin) / (xmax - xmin) * (W - ml - mr);
  };
  const auto py = [&](double y) {
    return H - mb - (y - ymin) / (ymax - ymin) * (H - mt - mb);
  };
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                 "#9467bd", "#ff7f0e"};
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W
     << "' height='" << H << "'>\n";
  os << "<rect width='100%' height='100%' fill='white'/>\n";
  os << "<line x1='" << ml << "' y1='" << H - mb << "' x2='" << W - mr
     << "' y2='" << H - mb << "' stroke='black'/>\n";
  os << "<line x1='" << ml << "' y1='" << mt << "' x2='" << ml << "' y2='"
     << H - mb << "' stroke='black'/>\n";
  os << "<text x='" << (W / 2) << "' y='" << (H - 12)
     << "' text-anchor='middle' font-size='14'>log10 epsilon</text>\n";
  os << "<text x='18' y='" << (H / 2)
     << "' text-anchor='middle' font-size='14' transform='rotate(-90 18 "
     << (H / 2) << ")'>log10 u_T</text>\n";
  int ci = 0;
  for (const auto& [T, pts] : by_t) {
    os << "<polyline fill='none' stroke='" << colors[ci % 5]
       << "' stroke-width='1.5' points='";
    for (const SweepCell* c : pts) {
      os << px(std::log10(c->nugget)) << ","
         << py(std::log10(std::max(c->u_t, 1e-300))) << " ";
    }
    os << "'/>\n";
    os << "<text x='" << (W - mr - 120) << "' y='" << (mt + 16 + 16 * ci)
       << "' fill='" << colors[ci % 5] << "' font-size='13'>T=" << fmt_tag(T)
       << "</text>\n";
    ++ci;
  }
  os << "</svg>\n";
}

EiGridResult run_ei_grid(const ExperimentConfig& cfg) {
  if (is_gp_benchmark(cfg.benchmark)) {
    throw std::invalid_argument("ei-grid: needs a synthetic 2-D benchmark");
  }
  const BenchmarkSpec spec = synthetic_benchmark(cfg.benchmark);
  if (spec.dim != 2) {
    throw std::invalid_argument("ei-grid: benchmark must be 2-D");
  }
  if (cfg.eps_list.empty()) {
    throw std::invalid_argument("ei-grid: empty eps list");
  }
  if (cfg.grid_resolution < 1) {
    throw std::invalid_argument("ei-grid: grid resolution must be >= 1");
  }

  const Box unit = Box::unit(2);
  Eigen::MatrixXd Xu;
  Eigen::VectorXd y;
  if (cfg.sample_source == "ego") {
    RunConfig run;
    run.objective = spec.evaluator;
    run.box = spec.box;
    run.n_init = cfg.ei_grid_init;
    run.n_iter = cfg.ei_grid_iters;
    run.nugget = cfg.ei_grid_reference_eps;
    run.seed = cfg.seed;
    run.f_star = spec.f_star;
    if (cfg.length_scale > 0.0) {
      run.kernel = kernel_from_config(cfg, cfg.length_scale);
    } else {
      run.kernel = kernel_from_config(cfg, 1.0);
      run.select_length_scale = true;
      run.refit_every_iteration = cfg.refit_every_iteration;
    }
    const RunTrace trace = run_practical_ego(run);
    const int n = cfg.ei_grid_init + cfg.ei_grid_iters;
    Xu.resize(n, 2);
    y.resize(n);
    for (int i = 0; i < cfg.ei_grid_init; ++i) {
      Xu.row(i) =
          spec.box.to_unit(trace.init_x.row(i).transpose()).transpose();
      y(i) = trace.init_f(i);
    }
    for (int t = 0; t < cfg.ei_grid_iters; ++t) {
      Xu.row(cfg.ei_grid_init + t) =
          spec.box.to_unit(trace.rows[static_cast<size_t>(t)].x).transpose();
      y(cfg.ei_grid_init + t) = trace.rows[static_cast<size_t>(t)].f;
    }
  } else if (cfg.sample_source == "random") {
    Rng rng(cfg.seed);
    const int n = cfg.ei_grid_init + cfg.ei_grid_iters;
    Xu.resize(n, 2);
    y.resize(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < 2; ++j) Xu(i, j) = uniform01(rng);
      y(i) = spec.evaluator(spec.box.from_unit(Xu.row(i).transpose()));
    }
  } else {
    throw std::invalid_argument("ei-grid: sample_source must be ego|random");
  }

  // One length scale for every refit so the nugget is the only thing that
  // changes between the contours.
  KernelParams kernel = cfg.length_scale > 0.0
                            ? kernel_from_config(cfg, cfg.length_scale)
                            : select_length_scale(
                                  Xu, y, kernel_from_config(cfg, 1.0),
                                  cfg.ei_grid_reference_eps,
                                  default_length_scale_grid());

  EiGridResult result;
  result.eps = cfg.eps_list;
  std::sort(result.eps.begin(), result.eps.end());

  const int res = cfg.grid_resolution;
  Eigen::MatrixXd grid_unit(res * res, 2);
  result.grid_x.resize(res * res, 2);
  for (int i = 0; i < res; ++i) {
    for (int j = 0; j < res; ++j) {
      const Eigen::Index k = static_cast<Eigen::Index>(i) * res + j;
      grid_unit(k, 0) = res == 1 ? 0.5 : static_cast<double>(i) / (res - 1);
      grid_unit(k, 1) = res == 1 ? 0.5 : static_cast<double>(j) / (res - 1);
      result.grid_x.row(k) =
          spec.box.from_unit(grid_unit.row(k).transpose()).transpose();
    }
  }

  const double f_plus = y.minCoeff();
  for (double eps : result.eps) {
    const GpModel model = fit(Xu, y, kernel, eps);
    Eigen::VectorXd mean, sd;
    model.posterior_batch(grid_unit, mean, sd);
    Eigen::VectorXd ei(res * res);
    for (Eigen::Index k = 0; k < ei.size(); ++k) {
      ei(k) = ei_value(f_plus, {mean(k), sd(k)});
    }
    result.ei_max.push_back(ei.maxCoeff());
    result.ei.push_back(std::move(ei));
  }
  return result;
}

int cmd_run(const ExperimentConfig& cfg) {
  const double eps = cfg.eps_list.empty() ? 1e-6 : cfg.eps_list.front();
  const SingleRunSetup setup = make_single_run(cfg, eps, cfg.seed);
  const RunTrace trace = run_practical_ego(setup.run);
  const std::string file =
      cfg.benchmark + "_eps" + fmt_tag(eps) + "_seed" +
      std::to_string(cfg.seed) + ".csv";
  write_trace_csv(trace, out_path(cfg, file).string());
  const RegretSeries series = regret_series(trace, setup.run.f_star);
  std::cout << "benchmark " << cfg.benchmark << " eps " << fmt_tag(eps)
            << " seed " << cfg.seed << "\n"
            << "iterations " << cfg.n_iter << "  best f "
            << trace.final_f_plus() << "  f_star " << setup.run.f_star
            << "\n"
            << "R_T " << series.cumulative(series.cumulative.size() - 1)
            << "  R_T/T " << series.average(series.average.size() - 1)
            << "\n"
            << "trace " << out_path(cfg, file).string() << "\n";
  if (series.f_star_warning) {
    std::cout << "warning: f_star above best observed value\n";
  }
  return 0;
}

int cmd_bench(const ExperimentConfig& cfg) {
  const AggregateReport report = run_bench(cfg);
  const auto path = out_path(cfg, cfg.benchmark + "_bench.csv");
  std::ofstream os(path);
  write_aggregate_csv(report, os);
  std::cout << format_bench_table(cfg, report) << "aggregate " << path.string()
            << "\n";
  return 0;
}

int cmd_bounds(const ExperimentConfig& cfg) {
  const std::vector<SweepCell> cells = run_bounds_sweep(cfg);
  const auto csv = out_path(cfg, "bounds_" + cfg.bounds_kernel + ".csv");
  std::ofstream os(csv);
  write_sweep_csv(cells, os);
  const auto svg = out_path(cfg, "bounds_" + cfg.bounds_kernel + ".svg");
  write_sweep_svg(cells, svg.string());
  std::cout << "sweep " << csv.string() << "\nchart " << svg.string() << "\n";
  return 0;
}

int cmd_ei_grid(const ExperimentConfig& cfg) {
  const EiGridResult result = run_ei_grid(cfg);
  for (size_t e = 0; e < result.eps.size(); ++e) {
    const auto path = out_path(
        cfg, "ei_grid_" + cfg.sample_source + "_eps" + fmt_tag(result.eps[e]) +
                 ".csv");
    std::ofstream os(path);
    os << "x_1,x_2,ei\n";
    const Eigen::VectorXd& ei = result.ei[e];
    for (Eigen::Index k = 0; k < ei.size(); ++k) {
      os << fmt17(result.grid_x(k, 0)) << "," << fmt17(result.grid_x(k, 1))
         << "," << fmt17(ei(k)) << "\n";
    }
  }
  const auto maxima = out_path(cfg, "ei_grid_" + cfg.sample_source + "_max.csv");
  std::ofstream os(maxima);
  os << "epsilon,ei_max\n";
  std::cout << "epsilon\tei_max\n";
  for (size_t e = 0; e < result.eps.size(); ++e) {
    os << fmt17(result.eps[e]) << "," << fmt17(result.ei_max[e]) << "\n";
    std::cout << fmt_tag(result.eps[e]) << "\t" << result.ei_max[e] << "\n";
  }
  std::cout << "maxima " << maxima.string() << "\n";
  return 0;
}

}  // namespace pego
