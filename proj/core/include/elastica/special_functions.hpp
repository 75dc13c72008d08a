#ifndef ELASTICA_SPECIAL_FUNCTIONS_HPP
#define ELASTICA_SPECIAL_FUNCTIONS_HPP

namespace elastica {

// Values of the three Jacobi elliptic functions at a common argument.
// Parameter convention throughout: the *parameter* m (the quantity that
// multiplies t^2 inside the defining integrals), never the modulus k.
struct JacobiTriple {
  double sn;
  double cn;
  double dn;
};

// Complete elliptic integral of the first kind,
//   K(m) = int_0^1 dt / sqrt((1 - t^2)(1 - m t^2)),
// computed by the arithmetic-geometric mean.  Requires 0 <= m < 1;
// m = 1 is rejected (logarithmic divergence).
double complete_elliptic_k(double m);

// Complete elliptic integral of the second kind,
//   E(m) = int_0^1 sqrt((1 - m t^2) / (1 - t^2)) dt,
// for 0 <= m <= 1 (E(1) = 1).
double complete_elliptic_e(double m);

// (sn, cn, dn)(u | m) by the descending Landen transformation with
// amplitude back-substitution.  Requires finite u and 0 <= m <= 1.
JacobiTriple jacobi_elliptic(double u, double m);

// rho = 2 sqrt(2 pi) [2 E(1/2) - K(1/2)] ~ 4.2473; the scale constant of
// the large-penalization asymptotics of the optimal shapes.
double rho_constant();

}  // namespace elastica

#endif  // ELASTICA_SPECIAL_FUNCTIONS_HPP
