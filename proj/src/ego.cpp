#include "pego/ego.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

namespace pego {

namespace {

void validate(const RunConfig& cfg) {
  cfg.box.validate();
  if (!cfg.objective) throw std::invalid_argument("run: missing objective");
  if (cfg.n_init < 1) throw std::invalid_argument("run: n_init must be >= 1");
  if (cfg.n_iter < 1) throw std::invalid_argument("run: n_iter must be >= 1");
  if (!(cfg.nugget > 0.0)) {
    throw std::invalid_argument("run: nugget must be positive");
  }
  if (!std::isfinite(cfg.f_star)) {
    throw std::invalid_argument("run: f_star must be finite");
  }
}

std::string point_to_string(const Eigen::VectorXd& x) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    os << (i ? ", " : "") << x(i);
  }
  os << ")";
  return os.str();
}

double observe(const Objective& f, const Eigen::VectorXd& x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    throw std::runtime_error("objective returned a non-finite value at " +
                             point_to_string(x));
  }
  return v;
}

void format_double(std::ostream& os, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  os << buf;
}

}  // namespace

double RunTrace::incumbent_before(int t) const {
  if (t <= 1) return init_f.minCoeff();
  return rows[static_cast<size_t>(t) - 2].f_plus;
}

double RunTrace::final_f_plus() const {
  return rows.empty() ? init_f.minCoeff() : rows.back().f_plus;
}

Eigen::MatrixXd latin_hypercube(int n, const Box& box, Rng& rng) {
  box.validate();
  if (n < 1) throw std::invalid_argument("latin_hypercube: n must be >= 1");
  const Eigen::Index d = box.dim();
  Eigen::MatrixXd P(n, d);
  std::vector<int> perm(static_cast<size_t>(n));
  for (Eigen::Index j = 0; j < d; ++j) {
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) {
      const int k = static_cast<int>(uniform01(rng) * (i + 1));
      std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(k)]);
    }
    for (int i = 0; i < n; ++i) {
      const double u = (perm[static_cast<size_t>(i)] + uniform01(rng)) / n;
      P(i, j) = box.lo(j) + (box.hi(j) - box.lo(j)) * u;
    }
  }
  return P;
}

RunTrace run_practical_ego(const RunConfig& cfg) {
  validate(cfg);
  const Eigen::Index d = cfg.box.dim();
  const Box unit = Box::unit(d);
  const int budget =
      cfg.acq_budget > 0 ? cfg.acq_budget : default_acquisition_budget(d);
  Rng rng(cfg.seed);

  RunTrace trace;
  trace.f_star = cfg.f_star;

  Eigen::MatrixXd Xu = latin_hypercube(cfg.n_init, unit, rng);
  trace.init_x.resize(cfg.n_init, d);
  trace.init_f.resize(cfg.n_init);
  Eigen::VectorXd y(cfg.n_init);
  for (int i = 0; i < cfg.n_init; ++i) {
    const Eigen::VectorXd x = cfg.box.from_unit(Xu.row(i).transpose());
    trace.init_x.row(i) = x.transpose();
    y(i) = observe(cfg.objective, x);
    trace.init_f(i) = y(i);
  }

  const std::vector<double> grid = cfg.length_scale_grid.empty()
                                       ? default_length_scale_grid()
                                       : cfg.length_scale_grid;
  KernelParams kernel = cfg.kernel;
  if (cfg.select_length_scale) {
    kernel = select_length_scale(Xu, y, cfg.kernel, cfg.nugget, grid);
  }

  const auto fit_at = [&](int iteration) {
    try {
      return fit(Xu, y, kernel, cfg.nugget);
    } catch (const CholeskyError& e) {
      throw std::runtime_error("iteration " + std::to_string(iteration) +
                               ": " + e.what());
    }
  };
  GpModel model = fit_at(0);

  trace.rows.reserve(static_cast<size_t>(cfg.n_iter));
  double f_plus = y.minCoeff();
  double cum_regret = 0.0;
  for (int t = 1; t <= cfg.n_iter; ++t) {
    Eigen::Index best_i = 0;
    y.minCoeff(&best_i);
    const Incumbent inc{f_plus, Xu.row(best_i).transpose()};
    const AcquisitionResult acq =
        maximize_acquisition(model, inc, unit, budget, rng);
    const double sigma_prev = model.posterior(acq.x).sd;

    const Eigen::VectorXd x_orig = cfg.box.from_unit(acq.x);
    const double fx = observe(cfg.objective, x_orig);
    f_plus = std::min(f_plus, fx);
    cum_regret += fx - cfg.f_star;

    TraceRow row;
    row.t = t;
    row.x = x_orig;
    row.f = fx;
    row.f_plus = f_plus;
    row.sigma_prev = sigma_prev;
    row.ei_max = acq.ei;
    row.r = fx - cfg.f_star;
    row.R = cum_regret;
    trace.rows.push_back(std::move(row));

    Xu.conservativeResize(Xu.rows() + 1, Eigen::NoChange);
    Xu.row(Xu.rows() - 1) = acq.x.transpose();
    y.conservativeResize(y.size() + 1);
    y(y.size() - 1) = fx;

    if (cfg.select_length_scale && cfg.refit_every_iteration) {
      kernel = select_length_scale(Xu, y, cfg.kernel, cfg.nugget, grid);
    }
    model = fit_at(t);
  }

  trace.f_star_warning = cfg.f_star > f_plus + 1e-9;
  return trace;
}

RegretSeries regret_series(const RunTrace& trace, double f_star) {
  const int T = static_cast<int>(trace.rows.size());
  RegretSeries s;
  s.r.resize(T);
  s.cumulative.resize(T);
  s.average.resize(T);
  double cum = 0.0;
  double fmin = trace.init_f.size() ? trace.init_f.minCoeff()
                                    : std::numeric_limits<double>::infinity();
  for (int t = 0; t < T; ++t) {
    const TraceRow& row = trace.rows[static_cast<size_t>(t)];
    fmin = std::min(fmin, row.f);
    s.r(t) = row.f - f_star;
    cum += s.r(t);
    s.cumulative(t) = cum;
    s.average(t) = cum / (t + 1);
  }
  s.f_star_warning = f_star > fmin + 1e-9;
  return s;
}

double exploitation_telescope_sum(const RunTrace& trace) {
  double sum = 0.0;
  for (size_t i = 0; i < trace.rows.size(); ++i) {
    const double prev = trace.incumbent_before(static_cast<int>(i) + 1);
    sum += std::max(prev - trace.rows[i].f, 0.0);
  }
  return sum;
}

void write_trace_csv(const RunTrace& trace, std::ostream& os) {
  const Eigen::Index d = trace.init_x.cols();
  os << "t";
  for (Eigen::Index j = 0; j < d; ++j) os << ",x_" << (j + 1);
  os << ",f,f_plus,sigma_prev,ei_max,r,R\n";
  for (const TraceRow& row : trace.rows) {
    os << row.t;
    for (Eigen::Index j = 0; j < d; ++j) {
      os << ",";
      format_double(os, row.x(j));
    }
    for (double v : {row.f, row.f_plus, row.sigma_prev, row.ei_max, row.r,
                     row.R}) {
      os << ",";
      format_double(os, v);
    }
    os << "\n";
  }
}

void write_trace_csv(const RunTrace& trace, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  write_trace_csv(trace, os);
}

}  // namespace pego
