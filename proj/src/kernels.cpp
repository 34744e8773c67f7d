#include "pego/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace pego {

namespace {

void validate(const KernelParams& p) {
  if (!(p.length_scale > 0.0)) {
    throw std::invalid_argument("kernel: length_scale must be positive");
  }
  if (p.family == KernelFamily::Matern && p.nu != 0.5 && p.nu != 1.5 &&
      p.nu != 2.5) {
    throw std::invalid_argument("kernel: Matern nu must be 1/2, 3/2 or 5/2");
  }
}

constexpr double kSqrt3 = 1.7320508075688772935;
constexpr double kSqrt5 = 2.2360679774997896964;

}  // namespace

KernelParams KernelParams::se(double length_scale) {
  KernelParams p{KernelFamily::SE, length_scale, 2.5};
  validate(p);
  return p;
}

KernelParams KernelParams::matern(double nu, double length_scale) {
  KernelParams p{KernelFamily::Matern, length_scale, nu};
  validate(p);
  return p;
}

double kernel_eval_r(const KernelParams& p, double r) {
  const double s = r / p.length_scale;
  if (p.family == KernelFamily::SE) {
    return std::exp(-0.5 * s * s);
  }
  if (p.nu == 0.5) {
    return std::exp(-s);
  }
  if (p.nu == 1.5) {
    const double t = kSqrt3 * s;
    return (1.0 + t) * std::exp(-t);
  }
  const double t = kSqrt5 * s;
  return (1.0 + t + t * t / 3.0) * std::exp(-t);
}

double kernel_eval(const KernelParams& p, const Eigen::VectorXd& x,
                   const Eigen::VectorXd& x2) {
  validate(p);
  if (x.size() != x2.size()) {
    throw std::invalid_argument("kernel_eval: dimension mismatch");
  }
  return kernel_eval_r(p, (x - x2).norm());
}

Eigen::MatrixXd kernel_matrix(const KernelParams& p, const Eigen::MatrixXd& X) {
  validate(p);
  const Eigen::Index n = X.rows();
  Eigen::MatrixXd K(n, n);
#pragma omp parallel for schedule(static)
  for (Eigen::Index i = 0; i < n; ++i) {
    K(i, i) = 1.0;
    for (Eigen::Index j = 0; j < i; ++j) {
      const double v = kernel_eval_r(p, (X.row(i) - X.row(j)).norm());
      K(i, j) = v;
      K(j, i) = v;
    }
  }
  return K;
}

Eigen::VectorXd cross_vector(const KernelParams& p, const Eigen::MatrixXd& X,
                             const Eigen::VectorXd& x) {
  validate(p);
  const Eigen::Index n = X.rows();
  if (n > 0 && X.cols() != x.size()) {
    throw std::invalid_argument("cross_vector: dimension mismatch");
  }
  Eigen::VectorXd k(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    k(i) = kernel_eval_r(p, (X.row(i).transpose() - x).norm());
  }
  return k;
}

Eigen::MatrixXd cross_matrix(const KernelParams& p, const Eigen::MatrixXd& X,
                             const Eigen::MatrixXd& Xq) {
  validate(p);
  if (X.rows() > 0 && Xq.rows() > 0 && X.cols() != Xq.cols()) {
    throw std::invalid_argument("cross_matrix: dimension mismatch");
  }
  Eigen::MatrixXd K(X.rows(), Xq.rows());
#pragma omp parallel for schedule(static)
  for (Eigen::Index j = 0; j < Xq.rows(); ++j) {
    for (Eigen::Index i = 0; i < X.rows(); ++i) {
      K(i, j) = kernel_eval_r(p, (X.row(i) - Xq.row(j)).norm());
    }
  }
  return K;
}

namespace serial {

Eigen::MatrixXd kernel_matrix(const KernelParams& p, const Eigen::MatrixXd& X) {
  validate(p);
  const Eigen::Index n = X.rows();
  Eigen::MatrixXd K(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    K(i, i) = 1.0;
    for (Eigen::Index j = 0; j < i; ++j) {
      const double v = kernel_eval_r(p, (X.row(i) - X.row(j)).norm());
      K(i, j) = v;
      K(j, i) = v;
    }
  }
  return K;
}

Eigen::MatrixXd cross_matrix(const KernelParams& p, const Eigen::MatrixXd& X,
                             const Eigen::MatrixXd& Xq) {
  validate(p);
  if (X.rows() > 0 && Xq.rows() > 0 && X.cols() != Xq.cols()) {
    throw std::invalid_argument("cross_matrix: dimension mismatch");
  }
  Eigen::MatrixXd K(X.rows(), Xq.rows());
  for (Eigen::Index j = 0; j < Xq.rows(); ++j) {
    for (Eigen::Index i = 0; i < X.rows(); ++i) {
      K(i, j) = kernel_eval_r(p, (X.row(i) - Xq.row(j)).norm());
    }
  }
  return K;
}

}  // namespace serial

}  // namespace pego
