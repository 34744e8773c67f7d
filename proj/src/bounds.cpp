#include "pego/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "pego/special_math.hpp"

namespace pego {

namespace {

constexpr double kTwoPi = 6.2831853071795864769;
constexpr double kLog2 = 0.69314718055994530942;

void require_positive(double v, const char* what) {
  if (!(v > 0.0)) {
    throw std::invalid_argument(std::string(what) + " must be positive");
  }
}

}  // namespace

BoundConstants::BoundConstants(double B, double nugget)
    : b_(B), nugget_(nugget) {
  require_positive(B, "BoundConstants: B");
  require_positive(nugget, "BoundConstants: nugget");
}

double BoundConstants::c_b() const { return tau(b_) / tau(-b_); }
double BoundConstants::c_b1() const { return std::max(c_b() - 1.0, 0.0); }
double BoundConstants::cr1() const { return 2.0 * c_b1() * b_; }
double BoundConstants::cr2() const {
  const double t = tau(-b_);
  return std::log(1.0 / (kTwoPi * t * t));
}
double BoundConstants::cr3() const { return b_ + c_b() * (b_ + kPhi0); }
double BoundConstants::cr4() const {
  const double c3 = cr3();
  return cr2() + c3 * c3;
}

double sigma_floor(double nugget, double t) {
  require_positive(nugget, "sigma_floor: nugget");
  if (t < 0.0) throw std::invalid_argument("sigma_floor: t must be >= 0");
  return std::sqrt(nugget / (t + nugget));
}

double c_b_eps(double nugget, double t, double B) {
  require_positive(nugget, "c_b_eps: nugget");
  const double tb = tau(-B);
  const double arg = (t + nugget) / (kTwoPi * tb * tb * nugget);
  if (!(arg >= 1.0)) {
    throw std::domain_error("c_b_eps: log argument below 1");
  }
  return std::sqrt(std::log(arg));
}

double instantaneous_bound(double f_prev_plus, double f_t, double sigma_prev,
                           const BoundConstants& bc, double t) {
  const double exploit = bc.c_b1() * std::max(f_prev_plus - f_t, 0.0);
  const double coeff =
      c_b_eps(bc.nugget(), t, bc.b()) + bc.b() + bc.c_b() * (bc.b() + kPhi0);
  return exploit + coeff * sigma_prev;
}

double cumulative_bound(double T, const BoundConstants& bc, double gamma_T) {
  if (gamma_T < 0.0) {
    throw std::invalid_argument("cumulative_bound: gamma_T must be >= 0");
  }
  const double coeff =
      c_b_eps(bc.nugget(), T, bc.b()) + bc.b() + bc.c_b() * (bc.b() + kPhi0);
  return bc.cr1() + coeff * std::sqrt(c_gamma(bc.nugget()) * T * gamma_T);
}

double c_gamma(double nugget) {
  require_positive(nugget, "c_gamma: nugget");
  return 2.0 / std::log1p(1.0 / nugget);
}

MigConstants MigConstants::se(int d, double length_scale, double c1, double c2,
                              double c3) {
  MigConstants mc;
  mc.d = d;
  mc.length_scale = length_scale;
  mc.c_dl1 = c1;
  mc.c_dl2 = c2;
  mc.c_dl3 = c3;
  return mc;
}

MigConstants MigConstants::matern(int d, double nu, double length_scale,
                                  double c_nu, double c_dnul1, double c_dnul2,
                                  double c_add) {
  require_positive(nu, "MigConstants: nu");
  require_positive(c_nu, "MigConstants: c_nu");
  MigConstants mc;
  mc.d = d;
  mc.nu = nu;
  mc.length_scale = length_scale;
  const double gamma_nu = std::tgamma(nu);
  mc.c_nu1 = 1.0 / kLog2;
  mc.c_nu2 = gamma_nu / c_nu;
  mc.c_nu3 = 1.0 / nu;
  mc.c_nu4 = std::log(1.0 / (nu * gamma_nu)) / nu + kLog2;
  mc.c_dnul1 = c_dnul1;
  mc.c_dnul2 = c_dnul2;
  mc.c_add = c_add;
  return mc;
}

double mig_se_upper(double nugget, double T, const MigConstants& mc) {
  require_positive(nugget, "mig_se_upper: nugget");
  if (!(T >= 1.0)) throw std::invalid_argument("mig_se_upper: T must be >= 1");
  const double L = std::log1p(T / nugget);
  return mc.c_dl1 *
         (std::pow(L, mc.d + 1) + mc.c_dl2 * L + mc.c_dl3);
}

MaternMigBound mig_matern_upper(double nugget, double T,
                                const MigConstants& mc) {
  require_positive(nugget, "mig_matern_upper: nugget");
  if (!(T >= 1.0)) {
    throw std::invalid_argument("mig_matern_upper: T must be >= 1");
  }
  const double log_t2e = std::log(T * T / nugget);
  const double inner = 1.0 + mc.c_nu2 * log_t2e;
  if (!(inner > 0.0)) {
    throw std::domain_error("mig_matern_upper: nonpositive log argument");
  }
  MaternMigBound out;
  out.c_t0 = mc.c_nu1 *
             (std::log(inner) + mc.c_nu3 * log_t2e + mc.c_nu4);
  out.precondition_ok = out.c_t0 >= 1.0;

  const double L2 = std::log1p(2.0 * T / nugget);
  const double expo = mc.d / (2.0 * mc.nu + mc.d);
  const double gamma_bar =
      mc.c_dnul1 *
      (L2 + mc.c_dnul2 * std::pow(T / nugget, expo) *
                std::pow(L2, 2.0 * mc.nu / (2.0 * mc.nu + mc.d)));
  out.value = out.c_t0 * gamma_bar + mc.c_add;
  return out;
}

std::string to_string(NuggetCase c) {
  switch (c) {
    case NuggetCase::case1: return "case1";
    case NuggetCase::case2: return "case2";
    default: return "other";
  }
}

NuggetCase classify_se(double nugget, double T, int d) {
  require_positive(nugget, "classify_se: nugget");
  if (!(T >= 1.0)) throw std::invalid_argument("classify_se: T must be >= 1");
  const double A = std::log1p(1.0 / nugget);
  const double L = std::log1p(T / nugget);
  const bool c1 = (d + 1) * A > L;
  const bool c2 = (d + 2) * A < (1.0 + nugget / T) / (1.0 + nugget) * L;
  if (c1 && c2) {
    throw std::logic_error("classify_se: both cases fired");
  }
  if (c1) return NuggetCase::case1;
  if (c2) return NuggetCase::case2;
  return NuggetCase::other;
}

NuggetCase classify_matern(double nugget, double T, const MigConstants& mc) {
  require_positive(nugget, "classify_matern: nugget");
  if (!(T >= 1.0)) {
    throw std::invalid_argument("classify_matern: T must be >= 1");
  }
  const double A = std::log1p(1.0 / nugget);
  const double two_nu_d = 2.0 * mc.nu + mc.d;
  const bool c1 =
      A * mc.d / two_nu_d > 1.0 + 1.0 / mc.c_dnul2 &&
      mc.c_nu1 * mc.c_dnul1 * mc.c_nu3 * A * std::log1p(2.0 * T / nugget) >
          mc.c_add;
  bool c2 = false;
  if (T > nugget) {
    const double log_te = std::log(T / nugget);
    const double bracket = mc.d / two_nu_d + mc.c_nu1 * mc.c_nu3 +
                           ((4.0 * mc.nu + mc.d) / two_nu_d + mc.c_nu1) /
                               log_te;
    c2 = A * bracket < 1.0 / (1.0 + nugget);
  }
  if (c1 && c2) {
    throw std::logic_error("classify_matern: both cases fired");
  }
  if (c1) return NuggetCase::case1;
  if (c2) return NuggetCase::case2;
  return NuggetCase::other;
}

UtCurvePoint u_t_curve(double T, double nugget, const BoundConstants& bc,
                       const MigConstants& mc, KernelFamily kernel) {
  if (!(T >= 1.0)) throw std::invalid_argument("u_t_curve: T must be >= 1");
  double s_t = 0.0;
  UtCurvePoint out;
  if (kernel == KernelFamily::SE) {
    s_t = mig_se_upper(nugget, T, mc);
  } else {
    const MaternMigBound b = mig_matern_upper(nugget, T, mc);
    s_t = b.value;
    out.precondition_ok = b.precondition_ok;
  }
  const double L = std::log1p(T / nugget);
  out.c_t = (L + 2.0 * bc.cr3() * std::sqrt(L + bc.cr2()) + bc.cr4()) /
            std::log1p(1.0 / nugget) * s_t;
  out.u_t = std::sqrt(2.0 * out.c_t * T);
  out.bound = bc.cr1() + out.u_t;
  return out;
}

std::vector<SweepCell> sweep_nugget(KernelFamily kernel,
                                    const std::vector<double>& T_list,
                                    const std::vector<double>& eps_grid,
                                    const BoundConstants& bc,
                                    const MigConstants& mc) {
  if (T_list.empty() || eps_grid.empty()) {
    throw std::invalid_argument("sweep_nugget: empty grid");
  }
  for (size_t i = 0; i < eps_grid.size(); ++i) {
    if (!(eps_grid[i] > 0.0) || (i > 0 && eps_grid[i] <= eps_grid[i - 1])) {
      throw std::invalid_argument(
          "sweep_nugget: eps grid must be positive ascending");
    }
  }
  const Eigen::Index nt = static_cast<Eigen::Index>(T_list.size());
  const Eigen::Index ne = static_cast<Eigen::Index>(eps_grid.size());
  std::vector<SweepCell> cells(static_cast<size_t>(nt * ne));
#pragma omp parallel for collapse(2) schedule(static)
  for (Eigen::Index i = 0; i < nt; ++i) {
    for (Eigen::Index j = 0; j < ne; ++j) {
      const double T = T_list[static_cast<size_t>(i)];
      const double eps = eps_grid[static_cast<size_t>(j)];
      const BoundConstants bce(bc.b(), eps);
      const UtCurvePoint pt = u_t_curve(T, eps, bce, mc, kernel);
      SweepCell& cell = cells[static_cast<size_t>(i * ne + j)];
      cell.kernel = kernel;
      cell.T = T;
      cell.nugget = eps;
      cell.c_t = pt.c_t;
      cell.u_t = pt.u_t;
      cell.label = kernel == KernelFamily::SE
                       ? classify_se(eps, T, mc.d)
                       : classify_matern(eps, T, mc);
    }
  }
  return cells;
}

}  // namespace pego
