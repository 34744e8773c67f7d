#pragma once

#include <string>
#include <vector>

#include "pego/kernels.hpp"

namespace pego {

// Constants of the instantaneous and cumulative regret bounds, derived
// from the RKHS norm bound B and the nugget. Everything downstream of B is
// recomputed on demand so nothing can go stale.
class BoundConstants {
 public:
  BoundConstants(double B, double nugget);

  double b() const { return b_; }
  double nugget() const { return nugget_; }
  double c_b() const;    // tau(B)/tau(-B), >= 1
  double c_b1() const;   // max(c_b - 1, 0)
  double cr1() const;    // 2 c_b1 B
  double cr2() const;    // log(1/(2 pi tau^2(-B)))
  double cr3() const;    // B + c_b (B + phi(0))
  double cr4() const;    // cr2 + cr3^2

 private:
  double b_;
  double nugget_;
};

// Global posterior standard-deviation floor sqrt(eps/(t+eps)).
double sigma_floor(double nugget, double t);

// sqrt(log((t+eps)/(2 pi tau^2(-B) eps))); throws std::domain_error when
// the log argument is not above 1.
double c_b_eps(double nugget, double t, double B);

// c_b1 * max{f_prev_plus - f_t, 0}
//   + (c_b_eps(eps,t) + B + c_b (B + phi(0))) * sigma_prev.
double instantaneous_bound(double f_prev_plus, double f_t, double sigma_prev,
                           const BoundConstants& bc, double t);

// 2 c_b1 B + (c_b_eps(eps,T) + B + c_b (B + phi(0))) * sqrt(C_gamma T gamma_T).
double cumulative_bound(double T, const BoundConstants& bc, double gamma_T);

// C_gamma(eps) = 2 / log(1 + 1/eps).
double c_gamma(double nugget);

// Kernel-specific constants of the information-gain upper bounds. The SE
// bound takes three free constants; the Matern bound takes the nu-dependent
// family (with the log2->ln conversion folded into c_nu1) plus two
// dimension/scale constants and an additive tail constant.
struct MigConstants {
  int d = 2;
  double nu = 2.5;
  double length_scale = 1.0;

  double c_dl1 = 1.0, c_dl2 = 1.0, c_dl3 = 1.0;  // SE

  double c_nu1 = 0.0, c_nu2 = 0.0, c_nu3 = 0.0, c_nu4 = 0.0;  // Matern
  double c_dnul1 = 1.0, c_dnul2 = 1.0;
  double c_add = 1.0;

  static MigConstants se(int d, double length_scale, double c1, double c2,
                         double c3);
  static MigConstants matern(int d, double nu, double length_scale,
                             double c_nu, double c_dnul1, double c_dnul2,
                             double c_add);
};

// s_T(eps) = c_dl1 [ log^{d+1}(1+T/eps) + c_dl2 log(1+T/eps) + c_dl3 ].
double mig_se_upper(double nugget, double T, const MigConstants& mc);

struct MaternMigBound {
  double value = 0.0;
  double c_t0 = 0.0;        // prefactor; the bound presumes c_t0 >= 1
  bool precondition_ok = false;
};

// s_T(eps) = c_t0(eps) * gamma_bar_T(eps) + C with
//   c_t0 = c_nu1 [ log(1 + c_nu2 log(T^2/eps)) + c_nu3 log(T^2/eps) + c_nu4 ]
//   gamma_bar_T = c_dnul1 [ log(1+2T/eps)
//                 + c_dnul2 (T/eps)^{d/(2nu+d)} log^{2nu/(2nu+d)}(1+2T/eps) ].
MaternMigBound mig_matern_upper(double nugget, double T,
                                const MigConstants& mc);

enum class NuggetCase { case1, case2, other };
std::string to_string(NuggetCase c);

// case1: (d+1) log(1+1/eps) > log(1+T/eps)       (bound falls as eps grows)
// case2: (d+2) log(1+1/eps) < (1+eps/T)/(1+eps) log(1+T/eps)  (bound rises)
NuggetCase classify_se(double nugget, double T, int d);
NuggetCase classify_matern(double nugget, double T, const MigConstants& mc);

struct UtCurvePoint {
  double c_t = 0.0;
  double u_t = 0.0;   // sqrt(2 c_t T)
  double bound = 0.0; // cr1 + u_t
  bool precondition_ok = true;
};

// c_T(eps) = (log(1+T/eps) + 2 cr3 sqrt(log(1+T/eps)+cr2) + cr4)
//            * s_T(eps) / log(1+1/eps);
// algebraically identical to cumulative_bound(T, bc, s_T(eps)).
UtCurvePoint u_t_curve(double T, double nugget, const BoundConstants& bc,
                       const MigConstants& mc, KernelFamily kernel);

struct SweepCell {
  KernelFamily kernel;
  double T = 0.0;
  double nugget = 0.0;
  double c_t = 0.0;
  double u_t = 0.0;
  NuggetCase label = NuggetCase::other;
};

// One cell per (T, eps) pair; cells are independent and computed in
// parallel. eps_grid must be positive and ascending.
std::vector<SweepCell> sweep_nugget(KernelFamily kernel,
                                    const std::vector<double>& T_list,
                                    const std::vector<double>& eps_grid,
                                    const BoundConstants& bc,
                                    const MigConstants& mc);

}  // namespace pego
