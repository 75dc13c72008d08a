#ifndef ELASTICA_GEOMETRY_HPP
#define ELASTICA_GEOMETRY_HPP

#include <array>
#include <string>
#include <vector>

namespace elastica {

// Truncated real Fourier series f(t) = mean + sum_k (a_k cos kt + b_k sin kt),
// with coefficient index i storing mode k = i + 1.
struct FourierSeries {
  double mean = 0.0;
  std::vector<double> cos_coeffs;
  std::vector<double> sin_coeffs;

  int order() const { return static_cast<int>(cos_coeffs.size()); }
  double operator()(double t) const;
  FourierSeries derivative() const;
  double cos_coeff(int k) const;
  double sin_coeff(int k) const;
};

// Area, perimeter and elastic energy of a convex body.  At perimeter 2*pi
// the elastic energy is bounded below by pi, with equality for the disk.
struct Functionals {
  double area = 0.0;
  double perimeter = 0.0;
  double elastic_energy = 0.0;
};

// Convex body represented by its support function
//   h(t) = a0 + sum_{k>=1} a_k cos(kt) + b_k sin(kt).
// The radius of curvature is phi = h'' + h; phi >= 0 is the convexity
// condition and the perimeter is 2*pi*a0.
class SupportBody {
 public:
  SupportBody() : h_{1.0, {}, {}} {}
  explicit SupportBody(FourierSeries h) : h_(std::move(h)) {}
  SupportBody(double a0, std::vector<double> cos_coeffs,
              std::vector<double> sin_coeffs)
      : h_{a0, std::move(cos_coeffs), std::move(sin_coeffs)} {}

  static SupportBody disk(double radius = 1.0) {
    return SupportBody(radius, {}, {});
  }

  const FourierSeries& series() const { return h_; }
  double a0() const { return h_.mean; }
  int order() const { return h_.order(); }

  double height(double t) const { return h_(t); }
  // phi(t) = h''(t) + h(t); mode k is scaled by (1 - k^2).
  double curvature_radius(double t) const;
  FourierSeries curvature_radius_series() const;
  double min_curvature_radius(int samples = 2048) const;

  // Plain-text coefficient list: "a0 <value>" then one "k a_k b_k" per line.
  std::string to_text() const;
  static SupportBody from_text(const std::string& text);

 private:
  FourierSeries h_;
};

// Tangent angle theta sampled on a uniform arclength grid over [0, P].
// Admissibility: theta non-decreasing, theta(P) - theta(0) = 2*pi, and the
// reconstructed curve closes.
struct ThetaFunction {
  std::vector<double> grid;
  std::vector<double> theta;
  double perimeter = 0.0;

  // Throws ConstraintViolationError if monotonicity (tolerance -1e-10 per
  // step) or the total-turning condition (1e-8) fails.
  void validate() const;
};

struct Polyline {
  std::vector<std::array<double, 2>> vertices;
  bool closed = false;

  double length() const;
  // Shoelace area (vertices traversed counterclockwise).
  double area() const;
};

// A, P, E from the support representation.  A and P use the Fourier-exact
// coefficient formulas, cross-checked against quadrature within 1e-10;
// E = (1/2) int dt/phi by trapezoidal quadrature (spectrally accurate for
// smooth h).  Throws NonConvexError when min phi <= 0.
Functionals functionals_from_support(const SupportBody& body,
                                     int grid_size = 2048);

// Operator G: solve h'' + h = phi with zero first harmonics.  phi must not
// contain cos t / sin t components (throws SolvabilityError beyond 1e-10).
SupportBody apply_g(const FourierSeries& phi);

// E = (1/2) int theta'^2 ds with centered differences, A by shoelace on the
// reconstructed polyline, P = tf.perimeter.
Functionals functionals_from_theta(const ThetaFunction& tf);

// x(s) = int_0^s cos theta, y(s) = int_0^s sin theta by composite Simpson
// on the grid.  closure_residual, when non-null, receives |(x(P), y(P))|.
Polyline reconstruct_polyline(const ThetaFunction& tf,
                              double* closure_residual = nullptr);

// Minkowski combination tau*b1 + (1-tau)*b0 (support functions combine
// coefficientwise).
SupportBody minkowski_combine(const SupportBody& b0, const SupportBody& b1,
                              double tau);

// Deformation field along the boundary, components as Fourier series in the
// normal-angle parameter t.
struct VectorField {
  FourierSeries x;
  FourierSeries y;

  static VectorField translation(double vx, double vy) {
    return {{vx, {}, {}}, {vy, {}, {}}};
  }
};

struct ShapeDerivatives {
  double d_area = 0.0;
  double d_perimeter = 0.0;
  double d_elastic_energy = 0.0;
};

// First-order shape derivatives
//   dA = int <V,n> ds, dP = int k <V,n> ds, dE = -int (k'' + k^3/2) <V,n> ds
// with k = 1/phi and arclength derivatives via ds = phi dt.  Requires a
// strictly convex body.
ShapeDerivatives shape_derivatives(const SupportBody& body,
                                   const VectorField& field,
                                   int grid_size = 2048);

// Normal component <V, n>(t) of a boundary field, projected back onto a
// truncated Fourier series (used to transport perturbations between the
// two representations).
FourierSeries normal_component_series(const VectorField& field, int order,
                                      int grid_size = 2048);

// Support -> tangent-angle conversion: inverts s(t) = int_0^t phi by
// monotone cubic interpolation and samples theta = t + pi/2 on a uniform
// arclength grid.
ThetaFunction theta_from_support(const SupportBody& body, int grid_size = 4096);

}  // namespace elastica

#endif  // ELASTICA_GEOMETRY_HPP
