#pragma once

#include <Eigen/Dense>

#include "pego/box.hpp"
#include "pego/gp.hpp"
#include "pego/rng.hpp"

namespace pego {

// Best observed value so far and the point attaining it (minimization).
struct Incumbent {
  double f_plus = 0.0;
  Eigen::VectorXd x_plus;
};

// EI from posterior statistics: (f+ - mu) Phi(z) + sd phi(z), z = (f+ - mu)/sd.
// Guards sd == 0 by returning the improvement part max(f+ - mu, 0).
double ei_value(double f_plus, const PosteriorStats& stats);

double expected_improvement(const GpModel& m, const Incumbent& inc,
                            const Eigen::VectorXd& x);

struct AcquisitionResult {
  Eigen::VectorXd x;
  double ei = 0.0;
  int evaluations = 0;
};

inline int default_acquisition_budget(Eigen::Index d) {
  return 2048 * static_cast<int>(d);
}

// Multistart EI maximization over the box: ceil(0.8*budget) uniform
// candidates (batch-evaluated, OpenMP-parallel), then a compass-search
// refinement of the five best candidates with the remaining budget split
// evenly. Ties break toward the first candidate found. Deterministic for a
// fixed seed; growing the budget extends the candidate prefix.
AcquisitionResult maximize_acquisition(const GpModel& m, const Incumbent& inc,
                                       const Box& box, int budget, Rng& rng);

}  // namespace pego
