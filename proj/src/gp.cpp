#include "pego/gp.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace pego {

namespace {

constexpr double kLog2Pi = 1.8378770664093454836;

Eigen::VectorXd whiten(const Eigen::MatrixXd& L, Eigen::VectorXd v) {
  L.triangularView<Eigen::Lower>().solveInPlace(v);
  return v;
}

}  // namespace

CholeskyError::CholeskyError(int pivot_index)
    : std::runtime_error(
          "Cholesky pivot " + std::to_string(pivot_index) +
          " is not positive: matrix ill-conditioned even with nugget"),
      pivot(pivot_index) {}

void cholesky_in_place(Eigen::MatrixXd& A) {
  const Eigen::Index n = A.rows();
  for (Eigen::Index j = 0; j < n; ++j) {
    double d = A(j, j) - A.row(j).head(j).squaredNorm();
    if (!(d > 0.0)) throw CholeskyError(static_cast<int>(j));
    d = std::sqrt(d);
    A(j, j) = d;
    if (j + 1 < n) {
      auto col = A.col(j).tail(n - j - 1);
      col.noalias() -=
          A.bottomLeftCorner(n - j - 1, j) * A.row(j).head(j).transpose();
      col /= d;
    }
  }
  A.triangularView<Eigen::StrictlyUpper>().setZero();
}

GpModel::GpModel(Eigen::MatrixXd X, Eigen::VectorXd y, KernelParams params,
                 double nugget)
    : params_(params), nugget_(nugget), X_(std::move(X)), y_(std::move(y)) {
  if (!(nugget_ > 0.0)) {
    throw std::invalid_argument("fit: nugget must be positive");
  }
  if (X_.rows() != y_.size()) {
    throw std::invalid_argument("fit: X and y sizes differ");
  }
  if (!X_.allFinite() || !y_.allFinite()) {
    throw std::invalid_argument("fit: non-finite training data");
  }
  const Eigen::Index n = X_.rows();
  if (n == 0) {
    L_.resize(0, 0);
    alpha_.resize(0);
    return;
  }
  L_ = kernel_matrix(params_, X_);
  L_.diagonal().array() += nugget_;
  cholesky_in_place(L_);
  alpha_ = whiten(L_, y_);
  L_.transpose().triangularView<Eigen::Upper>().solveInPlace(alpha_);
}

GpModel fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
            const KernelParams& params, double nugget) {
  return GpModel(X, y, params, nugget);
}

PosteriorStats GpModel::posterior(const Eigen::VectorXd& x) const {
  if (size() == 0) return {0.0, 1.0};
  if (x.size() != X_.cols()) {
    throw std::invalid_argument("posterior: dimension mismatch");
  }
  const Eigen::VectorXd k = cross_vector(params_, X_, x);
  const double mean = k.dot(alpha_);
  const double var = 1.0 - whiten(L_, k).squaredNorm();
  return {mean, std::sqrt(std::max(var, 0.0))};
}

void GpModel::posterior_batch_serial(const Eigen::MatrixXd& Xq,
                                     Eigen::VectorXd& mean,
                                     Eigen::VectorXd& sd) const {
  const Eigen::Index m = Xq.rows();
  mean.resize(m);
  sd.resize(m);
  if (size() == 0) {
    mean.setZero();
    sd.setOnes();
    return;
  }
  Eigen::MatrixXd V = serial::cross_matrix(params_, X_, Xq);
  mean.noalias() = V.transpose() * alpha_;
  for (Eigen::Index j = 0; j < m; ++j) {
    auto col = V.col(j);
    L_.triangularView<Eigen::Lower>().solveInPlace(col);
    sd(j) = std::sqrt(std::max(1.0 - col.squaredNorm(), 0.0));
  }
}

void GpModel::posterior_batch(const Eigen::MatrixXd& Xq, Eigen::VectorXd& mean,
                              Eigen::VectorXd& sd) const {
  const Eigen::Index m = Xq.rows();
  mean.resize(m);
  sd.resize(m);
  if (size() == 0) {
    mean.setZero();
    sd.setOnes();
    return;
  }
  Eigen::MatrixXd V = cross_matrix(params_, X_, Xq);
  mean.noalias() = V.transpose() * alpha_;
  // Column solves are independent; doing them one by one keeps the result
  // bit-identical to the serial path under any thread count.
#pragma omp parallel for schedule(static)
  for (Eigen::Index j = 0; j < m; ++j) {
    auto col = V.col(j);
    L_.triangularView<Eigen::Lower>().solveInPlace(col);
    sd(j) = std::sqrt(std::max(1.0 - col.squaredNorm(), 0.0));
  }
}

double realized_info_gain(const KernelParams& params, double nugget,
                          const Eigen::MatrixXd& X) {
  if (!(nugget > 0.0)) {
    throw std::invalid_argument("realized_info_gain: nugget must be positive");
  }
  const Eigen::Index n = X.rows();
  if (n == 0) return 0.0;
  Eigen::MatrixXd M = kernel_matrix(params, X) / nugget;
  M.diagonal().array() += 1.0;
  cholesky_in_place(M);
  return M.diagonal().array().log().sum();
}

double log_marginal_likelihood(const GpModel& m) {
  const Eigen::Index n = m.size();
  if (n < 1) {
    throw std::invalid_argument("log_marginal_likelihood: empty model");
  }
  const double quad = m.train_y().dot(m.weights());
  const double logdet_half = m.chol().diagonal().array().log().sum();
  return -0.5 * quad - logdet_half - 0.5 * static_cast<double>(n) * kLog2Pi;
}

KernelParams select_length_scale(const Eigen::MatrixXd& X,
                                 const Eigen::VectorXd& y,
                                 const KernelParams& tmpl, double nugget,
                                 const std::vector<double>& grid) {
  if (grid.empty()) {
    throw std::invalid_argument("select_length_scale: empty grid");
  }
  std::vector<double> sorted = grid;
  std::sort(sorted.begin(), sorted.end());
  double best_lml = -std::numeric_limits<double>::infinity();
  double best_l = 0.0;
  for (double l : sorted) {
    if (!(l > 0.0)) {
      throw std::invalid_argument("select_length_scale: nonpositive grid value");
    }
    KernelParams p = tmpl;
    p.length_scale = l;
    try {
      const double lml = log_marginal_likelihood(fit(X, y, p, nugget));
      if (lml > best_lml) {
        best_lml = lml;
        best_l = l;
      }
    } catch (const CholeskyError&) {
      continue;
    }
  }
  if (best_l == 0.0) {
    throw std::runtime_error("select_length_scale: every fit failed");
  }
  KernelParams p = tmpl;
  p.length_scale = best_l;
  return p;
}

LazyGpOracle::LazyGpOracle(KernelParams params, double sample_jitter,
                           std::uint64_t seed)
    : params_(params), jitter_(sample_jitter), rng_(seed) {
  if (!(jitter_ > 0.0)) {
    throw std::invalid_argument("LazyGpOracle: jitter must be positive");
  }
}

double LazyGpOracle::sample(const Eigen::VectorXd& x) {
  for (Eigen::Index i = 0; i < count_; ++i) {
    if ((pts_.row(i).transpose().array() == x.array()).all()) return vals_(i);
  }
  return draw_fresh(x);
}

Eigen::VectorXd LazyGpOracle::sample_block(const Eigen::MatrixXd& X) {
  Eigen::VectorXd out(X.rows());
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    out(i) = sample(X.row(i).transpose());
  }
  return out;
}

double LazyGpOracle::draw_fresh(const Eigen::VectorXd& x) {
  const Eigen::Index n = count_;
  if (n == 0) {
    pts_.resize(16, x.size());
    vals_.resize(16);
    lchol_.resize(16, 16);
  } else if (n == pts_.rows()) {
    pts_.conservativeResize(2 * n, Eigen::NoChange);
    vals_.conservativeResize(2 * n);
    lchol_.conservativeResize(2 * n, 2 * n);
  }
  if (pts_.cols() != x.size()) {
    throw std::invalid_argument("LazyGpOracle: dimension mismatch");
  }

  double mean = 0.0;
  double piv2 = 1.0 + jitter_;
  Eigen::VectorXd v;
  if (n > 0) {
    v = cross_vector(params_, pts_.topRows(n), x);
    lchol_.topLeftCorner(n, n)
        .triangularView<Eigen::Lower>()
        .solveInPlace(v);
    mean = v.dot(w_.head(n));
    piv2 -= v.squaredNorm();
  }
  // Round-off can push the pivot below the jitter level; keep the factor
  // positive definite.
  const double piv = std::sqrt(std::max(piv2, jitter_));
  const double z = normal01(rng_);
  const double value = mean + piv * z;

  pts_.row(n) = x.transpose();
  vals_(n) = value;
  if (n > 0) lchol_.row(n).head(n) = v.transpose();
  lchol_(n, n) = piv;
  w_.conservativeResize(n + 1);
  w_(n) = z;
  ++count_;
  return value;
}

}  // namespace pego
