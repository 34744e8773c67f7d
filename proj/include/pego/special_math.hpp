#pragma once

namespace pego {

// Standard-normal density phi(z) = exp(-z^2/2)/sqrt(2*pi).
double std_normal_pdf(double z);

// Standard-normal CDF Phi(z), absolute error below 1e-12.
double std_normal_cdf(double z);

// tau(z) = z*Phi(z) + phi(z). Strictly positive and strictly increasing;
// tau'(z) = Phi(z).
double tau(double z);

// Trade-off form of expected improvement for exploitation a and
// exploration b > 0:
//
//   EI(a, b) = a*Phi(a/b) + b*phi(a/b) = b*tau(a/b).
//
// For |a/b| > 40 the limit value (max(a,0)) is returned directly; the
// direct expression underflows there. Throws std::domain_error for b <= 0
// or non-finite input.
double ei_tradeoff(double a, double b);

inline constexpr double kPhi0 = 0.3989422804014326779;  // phi(0) = 1/sqrt(2*pi)

}  // namespace pego
