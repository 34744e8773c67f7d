// Timing comparison between the OpenMP kernels and their serial reference
// implementations, and between parallel and serial replication fan-out.
// Also asserts that both paths produce identical bits.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "pego/experiment.hpp"
#include "pego/gp.hpp"

using namespace pego;

namespace {

double seconds(const std::function<void()>& fn, int repeats) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < repeats; ++i) fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count() / repeats;
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-28s %10.4f ms %10.4f ms %8.2fx\n", name, serial * 1e3,
              parallel * 1e3, serial / parallel);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "openmp",
              "speedup");

  Rng rng(7);
  const int n = 400, m = 8192, d = 4;
  Eigen::MatrixXd X(n, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j) X(i, j) = uniform01(rng);
  Eigen::MatrixXd Q(m, d);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < d; ++j) Q(i, j) = uniform01(rng);
  const KernelParams kp = KernelParams::matern(2.5, 0.4);

  {
    Eigen::MatrixXd Ks, Kp;
    const double ts = seconds([&] { Ks = serial::kernel_matrix(kp, X); }, 20);
    const double tp = seconds([&] { Kp = kernel_matrix(kp, X); }, 20);
    if (Ks != Kp) {
      std::fprintf(stderr, "kernel_matrix mismatch\n");
      return 1;
    }
    report("kernel_matrix n=400", ts, tp);
  }

  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) y(i) = std::sin(3.0 * X(i, 0)) + X(i, 1);
  const GpModel model = fit(X, y, kp, 1e-6);
  {
    Eigen::VectorXd ms, ss, mp, sp;
    const double ts =
        seconds([&] { model.posterior_batch_serial(Q, ms, ss); }, 10);
    const double tp = seconds([&] { model.posterior_batch(Q, mp, sp); }, 10);
    if (ms != mp || ss != sp) {
      std::fprintf(stderr, "posterior_batch mismatch\n");
      return 1;
    }
    report("posterior_batch m=8192", ts, tp);
  }

  {
    ExperimentConfig cfg = preset("branin");
    cfg.replications = 8;
    cfg.eps_list = {1e-4};
    cfg.n_iter = 16;
    cfg.acq_budget = 512;
    AggregateReport serial_report, parallel_report;
    const double ts = seconds([&] { serial_report = run_bench(cfg, false); }, 1);
    const double tp = seconds([&] { parallel_report = run_bench(cfg, true); }, 1);
    for (size_t i = 0; i < serial_report.cells.size(); ++i) {
      if (serial_report.cells[i].mean != parallel_report.cells[i].mean) {
        std::fprintf(stderr, "replication fan-out mismatch\n");
        return 1;
      }
    }
    report("bench fan-out 8 reps", ts, tp);
  }
  return 0;
}
