#include <array>
#include <stdexcept>

#include "pego/pattern_search.hpp"
#include "pego/rng.hpp"

namespace pego {

namespace {

constexpr std::array<int, 10> kPrimes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29};

double radical_inverse(int index, int base) {
  double inv = 1.0 / base;
  double f = inv;
  double r = 0.0;
  int i = index;
  while (i > 0) {
    r += f * (i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

}  // namespace

Eigen::MatrixXd halton_points(int n, int d) {
  if (d > static_cast<int>(kPrimes.size())) {
    throw std::invalid_argument("halton_points: dimension above 10");
  }
  Eigen::MatrixXd P(n, d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) {
      P(i, j) = radical_inverse(i + 1, kPrimes[static_cast<size_t>(j)]);
    }
  }
  return P;
}

PatternSearchResult pattern_search_minimize(
    const std::function<double(const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& x0, const Eigen::VectorXd& lo,
    const Eigen::VectorXd& hi, double step0, double tol, int max_evals) {
  const Eigen::Index d = x0.size();
  PatternSearchResult res;
  res.x = x0.cwiseMax(lo).cwiseMin(hi);
  res.value = f(res.x);
  res.evaluations = 1;

  double step = step0;
  Eigen::VectorXd cand = res.x;
  while (step >= tol && res.evaluations < max_evals) {
    bool improved = false;
    Eigen::VectorXd best_x = res.x;
    double best_v = res.value;
    for (Eigen::Index i = 0; i < d && res.evaluations < max_evals; ++i) {
      for (double sign : {+1.0, -1.0}) {
        if (res.evaluations >= max_evals) break;
        cand = res.x;
        cand(i) = std::min(hi(i), std::max(lo(i), cand(i) + sign * step));
        if (cand(i) == res.x(i)) continue;  // pinned at the boundary
        const double v = f(cand);
        ++res.evaluations;
        if (v < best_v) {
          best_v = v;
          best_x = cand;
          improved = true;
        }
      }
    }
    if (improved) {
      res.x = best_x;
      res.value = best_v;
    } else {
      step *= 0.5;
    }
  }
  return res;
}

}  // namespace pego
