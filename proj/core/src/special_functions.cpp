#include "elastica/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace elastica {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kMaxAgmIterations = 64;

}  // namespace

double complete_elliptic_k(double m) {
  if (!(m >= 0.0) || m >= 1.0)
    throw std::domain_error("complete_elliptic_k: requires 0 <= m < 1");
  double a = 1.0;
  double b = std::sqrt(1.0 - m);
  for (int i = 0; i < kMaxAgmIterations && std::abs(a - b) > 1e-17 * a; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return kPi / (2.0 * a);
}

double complete_elliptic_e(double m) {
  if (!(m >= 0.0) || m > 1.0)
    throw std::domain_error("complete_elliptic_e: requires 0 <= m <= 1");
  if (m == 1.0) return 1.0;
  double a = 1.0;
  double b = std::sqrt(1.0 - m);
  double c = std::sqrt(m);
  double sum = 0.5 * c * c;
  double pow2 = 1.0;
  for (int i = 0; i < kMaxAgmIterations && std::abs(c) > 1e-17 * a; ++i) {
    c = 0.5 * (a - b);
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
    pow2 *= 2.0;
    sum += 0.5 * pow2 * c * c;
  }
  return kPi / (2.0 * a) * (1.0 - sum);
}

JacobiTriple jacobi_elliptic(double u, double m) {
  if (!std::isfinite(u))
    throw std::domain_error("jacobi_elliptic: u must be finite");
  if (!(m >= 0.0) || m > 1.0)
    throw std::domain_error("jacobi_elliptic: requires 0 <= m <= 1");

  if (m == 0.0) return {std::sin(u), std::cos(u), 1.0};
  if (m == 1.0) {
    const double sech = 1.0 / std::cosh(u);
    return {std::tanh(u), sech, sech};
  }

  // Descending Landen: build the AGM scale ladder, then halve the
  // amplitude back down.
  double a[kMaxAgmIterations + 1];
  double c[kMaxAgmIterations + 1];
  a[0] = 1.0;
  c[0] = std::sqrt(m);
  double b = std::sqrt(1.0 - m);
  int n = 0;
  while (n < kMaxAgmIterations && std::abs(c[n]) > 1e-17 * a[n]) {
    a[n + 1] = 0.5 * (a[n] + b);
    c[n + 1] = 0.5 * (a[n] - b);
    b = std::sqrt(a[n] * b);
    ++n;
  }
  double phi = std::ldexp(1.0, n) * a[n] * u;
  for (int i = n; i >= 1; --i) {
    const double t = std::clamp(c[i] / a[i] * std::sin(phi), -1.0, 1.0);
    phi = 0.5 * (phi + std::asin(t));
  }
  const double sn = std::sin(phi);
  const double cn = std::cos(phi);
  const double dn = std::sqrt(1.0 - m * sn * sn);
  return {sn, cn, dn};
}

double rho_constant() {
  return 2.0 * std::sqrt(2.0 * kPi) *
         (2.0 * complete_elliptic_e(0.5) - complete_elliptic_k(0.5));
}

}  // namespace elastica
