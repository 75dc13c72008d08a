#ifndef ELASTICA_CLOSED_FORM_HPP
#define ELASTICA_CLOSED_FORM_HPP

#include <optional>

namespace elastica {

// Parameters of the closed-form curvature law
//
//   k(s) = (alpha cn(omega s | m) + beta) / (gamma cn(omega s | m) + 1)
//
// solving k'' = -k^3/2 - lambda k + mu with k(0) = k_max, k'(0) = 0.
// One integration gives the first integral
//   (k')^2 = -k^4/4 - lambda k^2 + 2 mu k + C,
// whose quartic right-hand side has real roots k_max and k_min.  When the
// two roots coincide the law degenerates to the constant solution (a disk
// arc) and `degenerate` is set.
struct ElasticaParams {
  double mu = 0.0;
  double lambda = 0.0;
  double k_max = 0.0;

  double first_integral_c = 0.0;  // C
  double k_min = 0.0;
  double sigma = 0.0;   // (k_max + k_min)/2
  double delta = 0.0;   // (k_max - k_min)/2
  double gamma = 0.0;   // root in (-1, 0) of the Moebius quadratic
  double alpha = 0.0;   // gamma*sigma + delta
  double beta = 0.0;    // gamma*delta + sigma
  double omega = 0.0;   // frequency, omega^2 = sigma*delta*(gamma^2-1)/(2*gamma)
  double m = 0.0;       // elliptic parameter tau^2 in (0, 1)
  double r0_sq = 0.0;   // (lambda^2 + C)/mu^2; squared turning radius.
                        // Negative on branches where the curvature never
                        // vanishes (the turning circle is empty).
  int q = 1;            // periodicity index
  bool degenerate = false;

  // half period of k in arclength, 2 K(m) / omega (non-degenerate only)
  double half_period() const;
};

// Derive all closed-form parameters from (mu, lambda, k_max).  k_min is
// located by a sign scan of the quartic followed by safeguarded Newton.
// Throws InconsistentParametersError when (k')^2 has no admissible orbit
// through k_max, and std::domain_error for mu <= 0, k_max <= 0 or
// lambda < 0.
ElasticaParams build_params(double mu, double lambda, double k_max, int q = 1);

// k(s); the constant k_max on the degenerate branch.  The denominator
// gamma*cn + 1 >= 1 - |gamma| > 0, so the law is globally defined.
double curvature_at(const ElasticaParams& p, double s);

// k'(s) via cn' = -sn dn (zero on the degenerate branch).
double curvature_derivative_at(const ElasticaParams& p, double s);

// (k')^2 - (-k^4/4 - lambda k^2 + 2 mu k + C); zero by construction, so
// this measures accumulated floating-point error.  Returns 0 on the
// degenerate branch by convention.
double first_integral_residual(const ElasticaParams& p, double s);

// int_0^s k(u) du by adaptive Gauss-Kronrod, absolute accuracy 1e-10.
double theta_integral(const ElasticaParams& p, double s);

// Smallest s in (0, s_max] with k(s) = 0, by sign-change scan and bisection
// to 1e-12.  Empty when k stays positive (equivalently k_min > 0).
std::optional<double> first_zero(const ElasticaParams& p, double s_max);

}  // namespace elastica

#endif  // ELASTICA_CLOSED_FORM_HPP
