#include <doctest.h>

#include <cmath>

#include <Eigen/Dense>

#include "pego/gp.hpp"
#include "pego/rng.hpp"

using namespace pego;

namespace {

Eigen::MatrixXd random_points(Rng& rng, int n, int d, double lo = 0.0,
                              double hi = 1.0) {
  Eigen::MatrixXd X(n, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j) X(i, j) = uniform(rng, lo, hi);
  return X;
}

Eigen::MatrixXd dense_cov(const KernelParams& p, const Eigen::MatrixXd& X,
                          double eps) {
  Eigen::MatrixXd K = serial::kernel_matrix(p, X);
  K.diagonal().array() += eps;
  return K;
}

// Explicit-inverse posterior, the oracle for small instances.
PosteriorStats dense_posterior(const KernelParams& p, const Eigen::MatrixXd& X,
                               const Eigen::VectorXd& y, double eps,
                               const Eigen::VectorXd& x) {
  const Eigen::MatrixXd Kinv = dense_cov(p, X, eps).inverse();
  const Eigen::VectorXd k = cross_vector(p, X, x);
  const double mean = k.dot(Kinv * y);
  const double var = 1.0 - k.dot(Kinv * k);
  return {mean, std::sqrt(std::max(var, 0.0))};
}

double dense_log_marginal(const KernelParams& p, const Eigen::MatrixXd& X,
                          const Eigen::VectorXd& y, double eps) {
  const Eigen::MatrixXd K = dense_cov(p, X, eps);
  const double logdet = std::log(K.determinant());
  return -0.5 * y.dot(K.inverse() * y) - 0.5 * logdet -
         0.5 * X.rows() * std::log(2.0 * 3.14159265358979323846);
}

double dense_info_gain(const KernelParams& p, const Eigen::MatrixXd& X,
                       double eps) {
  Eigen::MatrixXd M = serial::kernel_matrix(p, X) / eps;
  M.diagonal().array() += 1.0;
  return 0.5 * std::log(M.determinant());
}

}  // namespace

TEST_CASE("empty fit gives the prior") {
  const GpModel m = fit(Eigen::MatrixXd(0, 2), Eigen::VectorXd(0),
                        KernelParams::se(0.5), 1e-6);
  Rng rng(3);
  for (int i = 0; i < 10; ++i) {
    const PosteriorStats s = m.posterior(random_points(rng, 1, 2).row(0));
    CHECK(s.mean == 0.0);
    CHECK(s.sd == 1.0);
  }
}

TEST_CASE("one-point fit solves the 1x1 system") {
  Eigen::MatrixXd X(1, 2);
  X << 0.4, 0.6;
  Eigen::VectorXd y(1);
  y << 2.5;
  const double eps = 1e-3;
  const GpModel m = fit(X, y, KernelParams::se(1.0), eps);
  CHECK(m.posterior(X.row(0).transpose()).mean ==
        doctest::Approx(2.5 / (1.0 + eps)).epsilon(1e-14));
}

TEST_CASE("posterior matches the dense oracle on small instances") {
  Rng rng(17);
  for (int rep = 0; rep < 40; ++rep) {
    const int n = 1 + static_cast<int>(uniform01(rng) * 8);
    const int d = 1 + static_cast<int>(uniform01(rng) * 3);
    const KernelParams p = (rep % 2 == 0)
                               ? KernelParams::se(uniform(rng, 0.2, 1.5))
                               : KernelParams::matern(2.5, uniform(rng, 0.2, 1.5));
    // below 1e-6 the oracle's explicit inverse loses more digits than the
    // tolerance allows
    const double eps = std::pow(10.0, uniform(rng, -6.0, -2.0));
    const Eigen::MatrixXd X = random_points(rng, n, d);
    Eigen::VectorXd y(n);
    for (int i = 0; i < n; ++i) y(i) = uniform(rng, -2.0, 2.0);
    const GpModel m = fit(X, y, p, eps);
    for (int q = 0; q < 4; ++q) {
      const Eigen::VectorXd x = random_points(rng, 1, d).row(0);
      const PosteriorStats got = m.posterior(x);
      const PosteriorStats want = dense_posterior(p, X, y, eps, x);
      CHECK(std::abs(got.mean - want.mean) <= 1e-8);
      CHECK(std::abs(got.sd * got.sd - want.sd * want.sd) <= 1e-8);
    }
    CHECK(log_marginal_likelihood(m) ==
          doctest::Approx(dense_log_marginal(p, X, y, eps)).epsilon(1e-9));
  }
}

TEST_CASE("fit residual and factor reconstruction") {
  Rng rng(19);
  const KernelParams p = KernelParams::matern(2.5, 0.5);
  const double eps = 1e-8;
  const Eigen::MatrixXd X = random_points(rng, 24, 2);
  Eigen::VectorXd y(24);
  for (int i = 0; i < 24; ++i) y(i) = std::sin(4.0 * X(i, 0)) - X(i, 1);
  const GpModel m = fit(X, y, p, eps);
  const Eigen::MatrixXd K = dense_cov(p, X, eps);
  CHECK((K * m.weights() - y).norm() <= 1e-8 * y.norm());
  const Eigen::MatrixXd R = m.chol() * m.chol().transpose();
  CHECK((R - K).norm() <= 1e-8 * K.norm());
  CHECK((m.chol().diagonal().array() > 0.0).all());
}

TEST_CASE("stacked duplicates touch the variance floor exactly") {
  for (double eps : {1e-6, 1e-4, 1e-2, 1.0}) {
    for (int t : {1, 2, 5, 20, 50}) {
      Eigen::MatrixXd X(t, 2);
      for (int i = 0; i < t; ++i) X.row(i) << 0.3, 0.7;
      const GpModel m = fit(X, Eigen::VectorXd::Zero(t),
                            KernelParams::se(1.0), eps);
      const double sd = m.posterior(X.row(0).transpose()).sd;
      CHECK(std::abs(sd * sd - eps / (t + eps)) <= 1e-12);
      CHECK(std::abs(sd - std::sqrt(eps / (t + eps))) <= 1e-10);
    }
  }
}

TEST_CASE("far query recovers the prior") {
  Eigen::MatrixXd X(3, 2);
  X << 0.0, 0.0, 0.1, 0.0, 0.0, 0.1;
  Eigen::VectorXd y(3);
  y << 1.0, 2.0, 3.0;
  const GpModel m = fit(X, y, KernelParams::se(0.05), 1e-8);
  Eigen::VectorXd far(2);
  far << 50.0, 50.0;
  const PosteriorStats s = m.posterior(far);
  CHECK(std::abs(s.mean) <= 1e-6);
  CHECK(std::abs(s.sd - 1.0) <= 1e-6);
}

TEST_CASE("near-interpolation at a training point with a tiny nugget") {
  Rng rng(23);
  const Eigen::MatrixXd X = random_points(rng, 12, 2);
  Eigen::VectorXd y(12);
  for (int i = 0; i < 12; ++i) y(i) = std::cos(3.0 * X(i, 0)) + X(i, 1);
  const GpModel m = fit(X, y, KernelParams::se(0.4), 1e-10);
  for (int i = 0; i < 12; ++i) {
    const double mu = m.posterior(X.row(i).transpose()).mean;
    CHECK(std::abs(mu - y(i)) <= 1e-4 * (1.0 + y.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("posterior variance never rises when data are added") {
  Rng rng(29);
  const KernelParams p = KernelParams::matern(1.5, 0.4);
  Eigen::MatrixXd X = random_points(rng, 10, 2);
  Eigen::VectorXd y(10);
  for (int i = 0; i < 10; ++i) y(i) = uniform(rng, -1.0, 1.0);
  const Eigen::MatrixXd queries = random_points(rng, 20, 2);
  GpModel before = fit(X, y, p, 1e-6);
  for (int add = 0; add < 5; ++add) {
    X.conservativeResize(X.rows() + 1, Eigen::NoChange);
    X.row(X.rows() - 1) = random_points(rng, 1, 2);
    y.conservativeResize(y.size() + 1);
    y(y.size() - 1) = uniform(rng, -1.0, 1.0);
    const GpModel after = fit(X, y, p, 1e-6);
    for (int q = 0; q < queries.rows(); ++q) {
      const double s0 = before.posterior(queries.row(q).transpose()).sd;
      const double s1 = after.posterior(queries.row(q).transpose()).sd;
      CHECK(s1 <= s0 + 1e-9);
    }
    before = after;
  }
}

TEST_CASE("sigma floor holds for random configurations") {
  Rng rng(31);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 1 + static_cast<int>(uniform01(rng) * 50);
    const double eps = std::pow(10.0, uniform(rng, -10.0, -1.0));
    const KernelParams p = rep % 2 ? KernelParams::se(uniform(rng, 0.1, 1.0))
                                   : KernelParams::matern(2.5, uniform(rng, 0.1, 1.0));
    const Eigen::MatrixXd X = random_points(rng, n, 2);
    Eigen::VectorXd y(n);
    for (int i = 0; i < n; ++i) y(i) = uniform(rng, -1.0, 1.0);
    const GpModel m = fit(X, y, p, eps);
    const PosteriorStats s = m.posterior(random_points(rng, 1, 2).row(0));
    CHECK(s.sd >= std::sqrt(eps / (n + eps)) - 1e-9);
    CHECK(s.sd <= 1.0);
  }
}

TEST_CASE("Cholesky breakdown reports the pivot") {
  Eigen::MatrixXd X(3, 1);
  X << 0.5, 0.5, 0.5;
  try {
    fit(X, Eigen::VectorXd::Zero(3), KernelParams::se(1.0), 1e-18);
    FAIL("expected CholeskyError");
  } catch (const CholeskyError& e) {
    CHECK(e.pivot == 1);
  }
  CHECK_THROWS_AS(fit(X, Eigen::VectorXd::Zero(3), KernelParams::se(1.0), 0.0),
                  std::invalid_argument);
}

TEST_CASE("batch posterior equals pointwise and serial paths") {
  Rng rng(37);
  const KernelParams p = KernelParams::se(0.3);
  const Eigen::MatrixXd X = random_points(rng, 30, 2);
  Eigen::VectorXd y(30);
  for (int i = 0; i < 30; ++i) y(i) = uniform(rng, -1.0, 1.0);
  const GpModel m = fit(X, y, p, 1e-6);
  const Eigen::MatrixXd Q = random_points(rng, 57, 2);
  Eigen::VectorXd mean, sd, mean_s, sd_s;
  m.posterior_batch(Q, mean, sd);
  m.posterior_batch_serial(Q, mean_s, sd_s);
  CHECK(mean == mean_s);
  CHECK(sd == sd_s);
  for (int q = 0; q < Q.rows(); ++q) {
    // gemv and dot accumulate in different orders; the weights are large
    // at small nuggets, so agreement is absolute, not bitwise
    const PosteriorStats s = m.posterior(Q.row(q).transpose());
    CHECK(std::abs(mean(q) - s.mean) <= 1e-8);
    CHECK(std::abs(sd(q) - s.sd) <= 1e-10);
  }
}

TEST_CASE("realized information gain") {
  const KernelParams p = KernelParams::se(0.4);
  Eigen::MatrixXd one(1, 2);
  one << 0.2, 0.9;
  for (double eps : {1e-6, 1e-2, 1.0}) {
    CHECK(realized_info_gain(p, eps, one) ==
          doctest::Approx(0.5 * std::log1p(1.0 / eps)).epsilon(1e-12));
  }

  Rng rng(41);
  Eigen::MatrixXd X = random_points(rng, 7, 2);
  CHECK(realized_info_gain(p, 1e-4, X) ==
        doctest::Approx(dense_info_gain(p, X, 1e-4)).epsilon(1e-9));
  // duplicate appended: still matches the dense log-det oracle
  X.conservativeResize(8, Eigen::NoChange);
  X.row(7) = X.row(3);
  const double with_dup = realized_info_gain(p, 1e-4, X);
  CHECK(with_dup == doctest::Approx(dense_info_gain(p, X, 1e-4)).epsilon(1e-9));
  CHECK(with_dup > realized_info_gain(p, 1e-4, X.topRows(7)));

  // gain decreases to zero as the nugget blows up
  double prev = 1e300;
  for (double eps : {1e-2, 1.0, 1e2, 1e4, 1e8}) {
    const double g = realized_info_gain(p, eps, X);
    CHECK(g >= 0.0);
    CHECK(g < prev);
    prev = g;
  }
  CHECK(prev <= 1e-6);

  // nondecreasing as points are appended
  double running = 0.0;
  for (int t = 1; t <= X.rows(); ++t) {
    const double g = realized_info_gain(p, 1e-4, X.topRows(t));
    CHECK(g >= running - 1e-12);
    running = g;
  }
}

TEST_CASE("log marginal likelihood closed forms") {
  Eigen::MatrixXd X(1, 1);
  X << 0.5;
  const double eps = 1e-2;
  const GpModel m = fit(X, Eigen::VectorXd::Zero(1), KernelParams::se(1.0), eps);
  CHECK(log_marginal_likelihood(m) ==
        doctest::Approx(-0.5 * std::log1p(eps) -
                        0.5 * std::log(2.0 * 3.14159265358979323846))
            .epsilon(1e-12));

  Rng rng(43);
  const KernelParams p = KernelParams::se(0.5);
  const Eigen::MatrixXd Xn = random_points(rng, 6, 2);
  Eigen::VectorXd y(6);
  for (int i = 0; i < 6; ++i) y(i) = uniform(rng, -1.0, 1.0);
  const double base = log_marginal_likelihood(fit(Xn, y, p, 1e-4));
  // permutation invariance
  Eigen::MatrixXd Xp(6, 2);
  Eigen::VectorXd yp(6);
  const int perm[6] = {3, 1, 5, 0, 4, 2};
  for (int i = 0; i < 6; ++i) {
    Xp.row(i) = Xn.row(perm[i]);
    yp(i) = y(perm[i]);
  }
  CHECK(log_marginal_likelihood(fit(Xp, yp, p, 1e-4)) ==
        doctest::Approx(base).epsilon(1e-10));
}

TEST_CASE("length-scale selection") {
  const KernelParams tmpl = KernelParams::se(1.0);
  Rng rng(47);
  const Eigen::MatrixXd X = random_points(rng, 25, 1);
  Eigen::VectorXd y(25);
  for (int i = 0; i < 25; ++i) y(i) = std::sin(6.0 * X(i, 0));

  SUBCASE("single-element grid returns that element") {
    const KernelParams p = select_length_scale(X, y, tmpl, 1e-6, {0.37});
    CHECK(p.length_scale == 0.37);
  }

  SUBCASE("selected scale maximizes the likelihood over the grid") {
    const std::vector<double> grid = default_length_scale_grid();
    const KernelParams p = select_length_scale(X, y, tmpl, 1e-6, grid);
    double best = -1e300;
    double best_l = 0.0;
    for (double l : grid) {
      KernelParams q = tmpl;
      q.length_scale = l;
      const double lml = log_marginal_likelihood(fit(X, y, q, 1e-6));
      if (lml > best) {
        best = lml;
        best_l = l;
      }
    }
    CHECK(p.length_scale == best_l);
  }

  SUBCASE("constant data pick the grid scale with the smallest log-det") {
    const Eigen::VectorXd zeros = Eigen::VectorXd::Zero(25);
    const std::vector<double> grid{0.05, 0.2, 1.0, 5.0};
    const KernelParams p = select_length_scale(X, zeros, tmpl, 1e-6, grid);
    double best = -1e300;
    double best_l = 0.0;
    for (double l : grid) {
      KernelParams q = tmpl;
      q.length_scale = l;
      const double lml = log_marginal_likelihood(fit(X, zeros, q, 1e-6));
      if (lml > best) {
        best = lml;
        best_l = l;
      }
    }
    CHECK(p.length_scale == best_l);
  }

  SUBCASE("empty grid rejected") {
    CHECK_THROWS_AS(select_length_scale(X, y, tmpl, 1e-6, {}),
                    std::invalid_argument);
  }
}

TEST_CASE("length-scale recovery from prior draws") {
  const double true_l = 0.3;
  const std::vector<double> grid = default_length_scale_grid();
  // nearest grid index to the truth
  int near = 0;
  for (size_t i = 1; i < grid.size(); ++i) {
    if (std::abs(std::log(grid[i] / true_l)) <
        std::abs(std::log(grid[static_cast<size_t>(near)] / true_l))) {
      near = static_cast<int>(i);
    }
  }
  int hits = 0;
  for (int trial = 0; trial < 50; ++trial) {
    Rng rng(1000 + static_cast<unsigned>(trial));
    const Eigen::MatrixXd X = random_points(rng, 40, 1);
    LazyGpOracle oracle(KernelParams::se(true_l), 1e-12,
                        2000 + static_cast<unsigned>(trial));
    const Eigen::VectorXd y = oracle.sample_block(X);
    const KernelParams p =
        select_length_scale(X, y, KernelParams::se(1.0), 1e-6, grid);
    int idx = 0;
    for (size_t i = 0; i < grid.size(); ++i) {
      if (grid[i] == p.length_scale) idx = static_cast<int>(i);
    }
    if (std::abs(idx - near) <= 1) ++hits;
  }
  CHECK(hits >= 40);
}

TEST_CASE("lazy oracle caching and determinism") {
  const KernelParams p = KernelParams::se(0.4);
  LazyGpOracle a(p, 1e-12, 99);
  LazyGpOracle b(p, 1e-12, 99);
  Rng rng(53);
  const Eigen::MatrixXd X = random_points(rng, 20, 2);
  for (int i = 0; i < X.rows(); ++i) {
    const double va = a.sample(X.row(i).transpose());
    CHECK(va == b.sample(X.row(i).transpose()));
    CHECK(a.sample(X.row(i).transpose()) == va);  // cached exactly
  }
  CHECK(a.size() == X.rows());
  // block draw equals sequential draws under the same seed
  LazyGpOracle c(p, 1e-12, 99);
  const Eigen::VectorXd block = c.sample_block(X);
  CHECK(block == a.values());
}

TEST_CASE("lazy oracle marginal statistics") {
  const KernelParams p = KernelParams::se(0.1);
  Eigen::VectorXd first(500), second(500);
  Eigen::VectorXd x1(2), x2(2);
  x1 << 0.1, 0.1;
  x2 << 0.9, 0.9;  // eight length scales away
  for (int s = 0; s < 500; ++s) {
    LazyGpOracle o(p, 1e-12, 10000 + static_cast<unsigned>(s));
    first(s) = o.sample(x1);
    second(s) = o.sample(x2);
  }
  const double var = (first.array() - first.mean()).square().mean();
  CHECK(var >= 0.8);
  CHECK(var <= 1.2);
  const double c01 =
      ((first.array() - first.mean()) * (second.array() - second.mean()))
          .mean();
  const double v2 = (second.array() - second.mean()).square().mean();
  CHECK(std::abs(c01 / std::sqrt(var * v2)) < 0.15);
}
