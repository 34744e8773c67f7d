#include <doctest.h>

#include <cmath>

#include <Eigen/Eigenvalues>

#include "pego/kernels.hpp"
#include "pego/rng.hpp"

using namespace pego;

namespace {

Eigen::MatrixXd random_points(Rng& rng, int n, int d) {
  Eigen::MatrixXd X(n, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j) X(i, j) = uniform(rng, -2.0, 2.0);
  return X;
}

// Bessel form of the Matern kernel, used only as a test oracle for the
// half-integer closed forms.
double matern_bessel(double nu, double l, double r) {
  if (r == 0.0) return 1.0;
  const double s = std::sqrt(2.0 * nu) * r / l;
  return std::pow(2.0, 1.0 - nu) / std::tgamma(nu) * std::pow(s, nu) *
         std::cyl_bessel_k(nu, s);
}

}  // namespace

TEST_CASE("kernel_eval basics") {
  Rng rng(5);
  const KernelParams se = KernelParams::se(1.0);
  const KernelParams m52 = KernelParams::matern(2.5, 1.0);
  for (int i = 0; i < 50; ++i) {
    const Eigen::VectorXd x = random_points(rng, 1, 3).row(0);
    CHECK(kernel_eval(se, x, x) == 1.0);
    CHECK(kernel_eval(m52, x, x) == 1.0);
  }
  Eigen::VectorXd a(2), b(2);
  a << 0.0, 0.0;
  b << 1.0, 0.0;
  CHECK(kernel_eval(se, a, b) ==
        doctest::Approx(0.6065306597126334).epsilon(1e-15));
  CHECK(kernel_eval(m52, a, b) ==
        doctest::Approx(0.5239941088318203).epsilon(1e-14));
  Eigen::VectorXd c(3);
  c.setZero();
  CHECK_THROWS_AS(kernel_eval(se, a, c), std::invalid_argument);
}

TEST_CASE("half-integer closed forms match the Bessel oracle") {
  for (double nu : {0.5, 1.5, 2.5}) {
    const KernelParams p = KernelParams::matern(nu, 0.7);
    for (double r : {0.05, 0.2, 0.5, 1.0, 2.3}) {
      CHECK(kernel_eval_r(p, r) ==
            doctest::Approx(matern_bessel(nu, 0.7, r)).epsilon(1e-12));
    }
  }
}

TEST_CASE("kernel symmetry, stationarity, decay") {
  Rng rng(6);
  for (const KernelParams& p :
       {KernelParams::se(0.6), KernelParams::matern(1.5, 0.9)}) {
    for (int i = 0; i < 40; ++i) {
      const Eigen::MatrixXd P = random_points(rng, 2, 4);
      const Eigen::VectorXd x = P.row(0), y = P.row(1);
      CHECK(kernel_eval(p, x, y) == kernel_eval(p, y, x));
      const Eigen::VectorXd shift = random_points(rng, 1, 4).row(0);
      CHECK(std::abs(kernel_eval(p, x + shift, y + shift) -
                     kernel_eval(p, x, y)) <= 1e-14);
      const double v = kernel_eval(p, x, y);
      CHECK(v > 0.0);
      CHECK(v <= 1.0);
    }
    double prev = 2.0;
    for (double r = 0.0; r < 4.0; r += 0.05) {
      const double v = kernel_eval_r(p, r);
      CHECK(v < prev);
      prev = v;
    }
  }
}

TEST_CASE("kernel_matrix structure") {
  const KernelParams p = KernelParams::se(0.5);
  Eigen::MatrixXd one(1, 2);
  one << 0.3, 0.4;
  CHECK(kernel_matrix(p, one) == Eigen::MatrixXd::Ones(1, 1));

  Rng rng(7);
  Eigen::MatrixXd X = random_points(rng, 12, 2);
  X.row(7) = X.row(2);  // duplicated point
  const Eigen::MatrixXd K = kernel_matrix(p, X);
  CHECK(K == K.transpose());
  CHECK((K.diagonal().array() == 1.0).all());
  CHECK(K.row(7) == K.row(2));

  const double eps = 1e-6;
  Eigen::MatrixXd Keps = K;
  Keps.diagonal().array() += eps;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Keps);
  CHECK(es.eigenvalues().minCoeff() >= eps * (1.0 - 1e-8));
}

TEST_CASE("cross_vector agrees with kernel_eval") {
  Rng rng(8);
  const KernelParams p = KernelParams::matern(2.5, 0.8);
  const Eigen::MatrixXd X = random_points(rng, 9, 3);
  const Eigen::VectorXd x = random_points(rng, 1, 3).row(0);
  const Eigen::VectorXd k = cross_vector(p, X, x);
  for (int i = 0; i < 9; ++i) {
    CHECK(k(i) == kernel_eval(p, X.row(i).transpose(), x));
  }
  CHECK(cross_vector(p, X, X.row(4).transpose())(4) == 1.0);
  CHECK(cross_vector(p, Eigen::MatrixXd(0, 3), x).size() == 0);
}

TEST_CASE("parallel kernels match the serial reference bit for bit") {
  Rng rng(9);
  const KernelParams p = KernelParams::matern(2.5, 0.4);
  const Eigen::MatrixXd X = random_points(rng, 73, 3);
  const Eigen::MatrixXd Q = random_points(rng, 41, 3);
  CHECK(kernel_matrix(p, X) == serial::kernel_matrix(p, X));
  CHECK(cross_matrix(p, X, Q) == serial::cross_matrix(p, X, Q));
}
