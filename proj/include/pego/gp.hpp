#pragma once

#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "pego/kernels.hpp"
#include "pego/rng.hpp"

namespace pego {

// Cholesky breakdown: a nonpositive pivot was met even though the nugget
// was added. Carries the zero-based pivot index.
struct CholeskyError : std::runtime_error {
  explicit CholeskyError(int pivot_index);
  int pivot;
};

// In-place lower Cholesky of a symmetric matrix (lower triangle read).
// Throws CholeskyError on a nonpositive pivot.
void cholesky_in_place(Eigen::MatrixXd& A);

struct PosteriorStats {
  double mean = 0.0;
  double sd = 1.0;
};

// Deterministic-observation GP with nugget. Immutable once fitted: the
// posterior is mean = k(x)^T alpha, var = 1 - |L^{-1} k(x)|^2 with
// L L^T = K + eps*I and alpha = (K + eps*I)^{-1} y. Negative computed
// variances (round-off) are clamped to zero; the eps/(n+eps) floor is a
// test-time assertion, not a production clamp.
class GpModel {
 public:
  // n = 0 yields the prior model: posterior (0, 1) everywhere.
  GpModel(Eigen::MatrixXd X, Eigen::VectorXd y, KernelParams params,
          double nugget);

  const KernelParams& params() const { return params_; }
  double nugget() const { return nugget_; }
  Eigen::Index size() const { return X_.rows(); }
  const Eigen::MatrixXd& train_x() const { return X_; }
  const Eigen::VectorXd& train_y() const { return y_; }
  const Eigen::MatrixXd& chol() const { return L_; }
  const Eigen::VectorXd& weights() const { return alpha_; }

  PosteriorStats posterior(const Eigen::VectorXd& x) const;

  // Posterior at every row of Xq. OpenMP-parallel over query blocks,
  // bit-identical to posterior_batch_serial.
  void posterior_batch(const Eigen::MatrixXd& Xq, Eigen::VectorXd& mean,
                       Eigen::VectorXd& sd) const;
  void posterior_batch_serial(const Eigen::MatrixXd& Xq, Eigen::VectorXd& mean,
                              Eigen::VectorXd& sd) const;

 private:
  KernelParams params_;
  double nugget_;
  Eigen::MatrixXd X_;
  Eigen::VectorXd y_;
  Eigen::MatrixXd L_;
  Eigen::VectorXd alpha_;
};

GpModel fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
            const KernelParams& params, double nugget);

inline PosteriorStats posterior(const GpModel& m, const Eigen::VectorXd& x) {
  return m.posterior(x);
}

// Realized information gain 0.5 * log det(I + K/eps) of the rows of X,
// in nats, via the Cholesky factor of I + K/eps.
double realized_info_gain(const KernelParams& params, double nugget,
                          const Eigen::MatrixXd& X);

// -0.5 y^T alpha - sum_i log L_ii - n/2 log(2*pi). Requires n >= 1.
double log_marginal_likelihood(const GpModel& m);

// Grid search over length scales by marginal likelihood; ties resolved
// toward the smallest value. Throws if every fit on the grid fails.
KernelParams select_length_scale(const Eigen::MatrixXd& X,
                                 const Eigen::VectorXd& y,
                                 const KernelParams& tmpl, double nugget,
                                 const std::vector<double>& grid);

inline std::vector<double> default_length_scale_grid() {
  std::vector<double> g;
  for (int i = 0; i < 25; ++i) {
    g.push_back(std::pow(10.0, -2.0 + 3.0 * i / 24.0));
  }
  return g;
}

// Lazily materialized draw from a GP prior: each query is sampled from the
// conditional given every value drawn so far and cached, so repeated
// queries return the identical number and the whole history is one joint
// sample. The conditioning factor uses its own small jitter (independent
// of any optimizer nugget) so the realized function is deterministic given
// the seed and the query order.
class LazyGpOracle {
 public:
  LazyGpOracle(KernelParams params, double sample_jitter, std::uint64_t seed);

  double sample(const Eigen::VectorXd& x);

  // Draws all rows of X in order (same law as repeated sample() calls).
  Eigen::VectorXd sample_block(const Eigen::MatrixXd& X);

  Eigen::Index size() const { return count_; }
  Eigen::VectorXd values() const { return vals_.head(count_); }
  Eigen::MatrixXd points() const { return pts_.topRows(count_); }

 private:
  double draw_fresh(const Eigen::VectorXd& x);

  KernelParams params_;
  double jitter_;
  Rng rng_;
  Eigen::Index count_ = 0;
  Eigen::MatrixXd pts_;    // count_ x d, over-allocated
  Eigen::VectorXd vals_;   // cached draws
  Eigen::MatrixXd lchol_;  // growing factor of K_cache + jitter*I
  Eigen::VectorXd w_;      // L^{-1} vals
};

inline double lazy_sample(LazyGpOracle& o, const Eigen::VectorXd& x) {
  return o.sample(x);
}

}  // namespace pego
