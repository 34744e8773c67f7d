#include "pego/acquisition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "pego/pattern_search.hpp"
#include "pego/special_math.hpp"

namespace pego {

double ei_value(double f_plus, const PosteriorStats& stats) {
  const double a = f_plus - stats.mean;
  if (stats.sd <= 0.0) return std::max(a, 0.0);
  return ei_tradeoff(a, stats.sd);
}

double expected_improvement(const GpModel& m, const Incumbent& inc,
                            const Eigen::VectorXd& x) {
  return ei_value(inc.f_plus, m.posterior(x));
}

AcquisitionResult maximize_acquisition(const GpModel& m, const Incumbent& inc,
                                       const Box& box, int budget, Rng& rng) {
  box.validate();
  if (budget < 1) {
    throw std::invalid_argument("maximize_acquisition: budget must be >= 1");
  }
  const Eigen::Index d = box.dim();
  const int n_cand = std::max(1, static_cast<int>(std::ceil(0.8 * budget)));

  Eigen::MatrixXd cand(n_cand, d);
  for (int i = 0; i < n_cand; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      cand(i, j) = uniform(rng, box.lo(j), box.hi(j));
    }
  }

  Eigen::VectorXd mean, sd;
  m.posterior_batch(cand, mean, sd);
  Eigen::VectorXd ei(n_cand);
  for (int i = 0; i < n_cand; ++i) {
    ei(i) = ei_value(inc.f_plus, {mean(i), sd(i)});
  }

  const int n_starts = std::min(5, n_cand);
  std::vector<int> order(static_cast<size_t>(n_cand));
  std::iota(order.begin(), order.end(), 0);
  std::partial_sort(order.begin(), order.begin() + n_starts, order.end(),
                    [&](int a, int b) {
                      if (ei(a) != ei(b)) return ei(a) > ei(b);
                      return a < b;
                    });

  AcquisitionResult res;
  res.x = cand.row(order[0]).transpose();
  res.ei = ei(order[0]);
  res.evaluations = n_cand;

  const int remaining = budget - n_cand;
  const int per_start = remaining / std::max(1, n_starts);
  if (per_start < 1) return res;

  const auto neg_ei_unit = [&](const Eigen::VectorXd& u) {
    return -ei_value(inc.f_plus, m.posterior(box.from_unit(u)));
  };
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(d);
  const Eigen::VectorXd one = Eigen::VectorXd::Ones(d);
  for (int s = 0; s < n_starts; ++s) {
    const Eigen::VectorXd u0 = box.to_unit(cand.row(order[s]).transpose());
    const PatternSearchResult r =
        pattern_search_minimize(neg_ei_unit, u0, zero, one, 0.1, 1e-6,
                                per_start);
    res.evaluations += r.evaluations;
    if (-r.value > res.ei) {
      res.ei = -r.value;
      res.x = box.from_unit(r.x);
    }
  }
  return res;
}

}  // namespace pego
