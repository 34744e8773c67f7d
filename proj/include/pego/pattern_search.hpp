#pragma once

#include <functional>

#include <Eigen/Dense>

namespace pego {

struct PatternSearchResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int evaluations = 0;
};

// Derivative-free compass search: probe +-step along each axis, move to the
// best improving neighbour, halve the step when none improves. Stops when
// the step drops below `tol` or `max_evals` objective evaluations are spent.
// Iterates stay inside [lo, hi] (clamped).
PatternSearchResult pattern_search_minimize(
    const std::function<double(const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& x0, const Eigen::VectorXd& lo,
    const Eigen::VectorXd& hi, double step0, double tol, int max_evals);

}  // namespace pego
