#pragma once

#include <Eigen/Dense>

namespace pego {

enum class KernelFamily { SE, Matern };

// Isotropic stationary kernel with unit variance, k(x,x) = 1.
// Matern is restricted to the half-integer smoothness values that have
// closed forms (1/2, 3/2, 5/2); experiments use nu = 2.5.
struct KernelParams {
  KernelFamily family = KernelFamily::SE;
  double length_scale = 1.0;
  double nu = 2.5;  // Matern only

  static KernelParams se(double length_scale);
  static KernelParams matern(double nu, double length_scale);
};

double kernel_eval(const KernelParams& p, const Eigen::VectorXd& x,
                   const Eigen::VectorXd& x2);

// Kernel value as a function of the pairwise distance r >= 0.
double kernel_eval_r(const KernelParams& p, double r);

// n x n covariance matrix of the rows of X. OpenMP-parallel over rows;
// bit-identical to serial::kernel_matrix.
Eigen::MatrixXd kernel_matrix(const KernelParams& p, const Eigen::MatrixXd& X);

// k_n(x) = [k(x_1,x), ..., k(x_n,x)]^T for the rows of X.
Eigen::VectorXd cross_vector(const KernelParams& p, const Eigen::MatrixXd& X,
                             const Eigen::VectorXd& x);

// Cross-covariance block between the rows of X (n) and of Xq (m), n x m.
// OpenMP-parallel over query columns.
Eigen::MatrixXd cross_matrix(const KernelParams& p, const Eigen::MatrixXd& X,
                             const Eigen::MatrixXd& Xq);

namespace serial {
// Plain-loop reference implementations, kept for correctness tests and the
// kernel benchmark. Must match the parallel versions exactly.
Eigen::MatrixXd kernel_matrix(const KernelParams& p, const Eigen::MatrixXd& X);
Eigen::MatrixXd cross_matrix(const KernelParams& p, const Eigen::MatrixXd& X,
                             const Eigen::MatrixXd& Xq);
}  // namespace serial

}  // namespace pego
