#include "elastica/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "elastica/errors.hpp"
#include "elastica/quadrature.hpp"
#include "elastica/special_functions.hpp"

namespace elastica {

namespace {

// Q(z) = -z^4/4 - lambda z^2 + 2 mu z + C in Horner form.
double quartic(double z, double lambda, double mu, double c) {
  return ((-0.25 * z * z - lambda) * z + 2.0 * mu) * z + c;
}

double quartic_derivative(double z, double lambda, double mu) {
  return (-z * z - 2.0 * lambda) * z + 2.0 * mu;
}

// Newton iteration bracketed by [lo, hi] with Q(hi) > 0 >= Q(lo).
double refine_root(double lo, double hi, double lambda, double mu, double c) {
  double z = 0.5 * (lo + hi);
  for (int it = 0; it < 100; ++it) {
    const double f = quartic(z, lambda, mu, c);
    (f > 0.0 ? hi : lo) = z;
    const double df = quartic_derivative(z, lambda, mu);
    double next = (df != 0.0) ? z - f / df : 0.5 * (lo + hi);
    if (!(next > std::min(lo, hi) && next < std::max(lo, hi)))
      next = 0.5 * (lo + hi);
    if (std::abs(next - z) <= 1e-16 * std::max(1.0, std::abs(z))) return next;
    z = next;
  }
  return z;
}

}  // namespace

double ElasticaParams::half_period() const {
  return 2.0 * complete_elliptic_k(m) / omega;
}

ElasticaParams build_params(double mu, double lambda, double k_max, int q) {
  if (!(mu > 0.0)) throw std::domain_error("build_params: mu must be positive");
  if (!(k_max > 0.0))
    throw std::domain_error("build_params: k_max must be positive");
  if (!(lambda >= 0.0))
    throw std::domain_error("build_params: lambda must be non-negative");
  if (q < 1) throw std::domain_error("build_params: q must be >= 1");

  ElasticaParams p;
  p.mu = mu;
  p.lambda = lambda;
  p.k_max = k_max;
  p.q = q;
  p.first_integral_c =
      0.25 * k_max * k_max * k_max * k_max + lambda * k_max * k_max -
      2.0 * mu * k_max;
  const double c = p.first_integral_c;
  p.r0_sq = (lambda * lambda + c) / (mu * mu);

  // k''(0); positive means k_max is not a curvature maximum.
  const double equilibrium = mu - lambda * k_max - 0.5 * k_max * k_max * k_max;
  if (equilibrium > 1e-8 * std::max(1.0, mu))
    throw InconsistentParametersError(
        "build_params: k_max is not a maximum of the curvature orbit");

  // Scan [-k_max, k_max) downward for the second root of the quartic.
  // Q > 0 on (k_min, k_max) for an admissible orbit.
  constexpr int kScanPoints = 256;
  double k_min = std::numeric_limits<double>::quiet_NaN();
  double prev_z = k_max;
  bool seen_positive = false;
  for (int i = 1; i <= kScanPoints; ++i) {
    const double z = k_max - (2.0 * k_max) * i / kScanPoints;
    const double qz = quartic(z, lambda, mu, c);
    if (qz > 0.0) seen_positive = true;
    if (seen_positive && qz <= 0.0) {
      k_min = refine_root(z, prev_z, lambda, mu, c);
      break;
    }
    prev_z = z;
  }

  if (!std::isfinite(k_min)) {
    if (std::abs(equilibrium) <= 1e-8) {
      p.degenerate = true;
      p.k_min = k_max;
      return p;
    }
    throw InconsistentParametersError(
        "build_params: first-integral quartic has no second real root below "
        "k_max");
  }

  if (std::abs(k_max - k_min) <= 1e-9) {
    if (std::abs(equilibrium) > 1e-8)
      throw InconsistentParametersError(
          "build_params: degenerate double root without the constant-solution "
          "identity");
    p.degenerate = true;
    p.k_min = k_max;
    return p;
  }

  p.k_min = k_min;
  p.sigma = 0.5 * (k_max + k_min);
  p.delta = 0.5 * (k_max - k_min);

  // gamma is the root in (-1, 0); the product of roots is 1 and the
  // rationalized form keeps full precision for large b.
  const double b =
      (3.0 * p.sigma * p.sigma + p.delta * p.delta + 2.0 * lambda) /
      (p.sigma * p.delta);
  p.gamma = -2.0 / (b + std::sqrt(b * b - 4.0));
  p.alpha = p.gamma * p.sigma + p.delta;
  p.beta = p.gamma * p.delta + p.sigma;

  const double omega_sq =
      p.sigma * p.delta * (p.gamma * p.gamma - 1.0) / (2.0 * p.gamma);
  p.m = (p.gamma * p.gamma + p.delta * p.gamma / (2.0 * p.sigma)) /
        (p.gamma * p.gamma - 1.0);
  if (!(omega_sq > 0.0) || !(p.m > 0.0 && p.m < 1.0))
    throw InconsistentParametersError(
        "build_params: derived elliptic parameters out of range (omega^2 = " +
        std::to_string(omega_sq) + ", m = " + std::to_string(p.m) + ")");
  p.omega = std::sqrt(omega_sq);
  return p;
}

double curvature_at(const ElasticaParams& p, double s) {
  if (p.degenerate) return p.k_max;
  const JacobiTriple j = jacobi_elliptic(p.omega * s, p.m);
  return (p.alpha * j.cn + p.beta) / (p.gamma * j.cn + 1.0);
}

double curvature_derivative_at(const ElasticaParams& p, double s) {
  if (p.degenerate) return 0.0;
  const JacobiTriple j = jacobi_elliptic(p.omega * s, p.m);
  const double den = p.gamma * j.cn + 1.0;
  return -p.omega * p.delta * (1.0 - p.gamma * p.gamma) * j.sn * j.dn /
         (den * den);
}

double first_integral_residual(const ElasticaParams& p, double s) {
  if (p.degenerate) return 0.0;
  const double k = curvature_at(p, s);
  const double kp = curvature_derivative_at(p, s);
  return kp * kp - quartic(k, p.lambda, p.mu, p.first_integral_c);
}

double theta_integral(const ElasticaParams& p, double s) {
  if (!(s >= 0.0)) throw std::domain_error("theta_integral: s must be >= 0");
  if (p.degenerate) return p.k_max * s;
  return integrate([&p](double u) { return curvature_at(p, u); }, 0.0, s,
                   1e-11, 1e-12);
}

std::optional<double> first_zero(const ElasticaParams& p, double s_max) {
  if (p.degenerate || p.k_min > 0.0) return std::nullopt;
  // k decreases monotonically from k_max to k_min over the half period, so
  // a sign change exists there iff k_min <= 0.
  const double hi = std::min(s_max, p.half_period());
  if (curvature_at(p, hi) > 0.0) return std::nullopt;

  constexpr int kScan = 64;
  double lo = 0.0;
  double hi_bracket = hi;
  for (int i = 1; i <= kScan; ++i) {
    const double s = hi * i / kScan;
    if (curvature_at(p, s) <= 0.0) {
      hi_bracket = s;
      break;
    }
    lo = s;
  }
  while (hi_bracket - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi_bracket);
    (curvature_at(p, mid) > 0.0 ? lo : hi_bracket) = mid;
  }
  return 0.5 * (lo + hi_bracket);
}

}  // namespace elastica
