#include "elastica/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "elastica/errors.hpp"
#include "elastica/quadrature.hpp"

namespace elastica {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}
}  // namespace

double FourierSeries::operator()(double t) const {
  double v = mean;
  for (int k = 1; k <= order(); ++k)
    v += cos_coeffs[k - 1] * std::cos(k * t) + sin_coeffs[k - 1] * std::sin(k * t);
  return v;
}

FourierSeries FourierSeries::derivative() const {
  FourierSeries d;
  d.mean = 0.0;
  d.cos_coeffs.resize(cos_coeffs.size());
  d.sin_coeffs.resize(sin_coeffs.size());
  for (int k = 1; k <= order(); ++k) {
    d.cos_coeffs[k - 1] = k * sin_coeffs[k - 1];
    d.sin_coeffs[k - 1] = -k * cos_coeffs[k - 1];
  }
  return d;
}

double FourierSeries::cos_coeff(int k) const {
  return (k >= 1 && k <= order()) ? cos_coeffs[k - 1] : 0.0;
}

double FourierSeries::sin_coeff(int k) const {
  return (k >= 1 && k <= order()) ? sin_coeffs[k - 1] : 0.0;
}

double SupportBody::curvature_radius(double t) const {
  double v = h_.mean;
  for (int k = 1; k <= order(); ++k) {
    const double scale = 1.0 - static_cast<double>(k) * k;
    v += scale * (h_.cos_coeffs[k - 1] * std::cos(k * t) +
                  h_.sin_coeffs[k - 1] * std::sin(k * t));
  }
  return v;
}

FourierSeries SupportBody::curvature_radius_series() const {
  FourierSeries phi = h_;
  for (int k = 1; k <= order(); ++k) {
    const double scale = 1.0 - static_cast<double>(k) * k;
    phi.cos_coeffs[k - 1] *= scale;
    phi.sin_coeffs[k - 1] *= scale;
  }
  return phi;
}

double SupportBody::min_curvature_radius(int samples) const {
  double lo = curvature_radius(0.0);
  for (int i = 1; i < samples; ++i)
    lo = std::min(lo, curvature_radius(kTwoPi * i / samples));
  return lo;
}

std::string SupportBody::to_text() const {
  std::string out = "a0 " + format_double(h_.mean) + "\n";
  for (int k = 1; k <= order(); ++k) {
    out += std::to_string(k) + " " + format_double(h_.cos_coeffs[k - 1]) + " " +
           format_double(h_.sin_coeffs[k - 1]) + "\n";
  }
  return out;
}

SupportBody SupportBody::from_text(const std::string& text) {
  std::istringstream in(text);
  std::string tag;
  double a0 = 0.0;
  if (!(in >> tag >> a0) || tag != "a0")
    throw std::invalid_argument("SupportBody::from_text: expected 'a0 <value>'");
  std::vector<double> ac, as;
  int k = 0;
  double a = 0.0, b = 0.0;
  while (in >> k >> a >> b) {
    if (k < 1) throw std::invalid_argument("SupportBody::from_text: k must be >= 1");
    if (static_cast<int>(ac.size()) < k) {
      ac.resize(k, 0.0);
      as.resize(k, 0.0);
    }
    ac[k - 1] = a;
    as[k - 1] = b;
  }
  if (!in.eof())
    throw std::invalid_argument("SupportBody::from_text: malformed coefficient line");
  return SupportBody(a0, std::move(ac), std::move(as));
}

void ThetaFunction::validate() const {
  if (grid.size() != theta.size() || grid.size() < 3)
    throw ConstraintViolationError("theta function: bad grid");
  for (std::size_t i = 1; i < theta.size(); ++i) {
    if (theta[i] - theta[i - 1] < -1e-10)
      throw ConstraintViolationError("theta function: theta must be non-decreasing");
  }
  const double turning = theta.back() - theta.front();
  if (std::abs(turning - kTwoPi) > 1e-8)
    throw ConstraintViolationError(
        "theta function: total turning is " + std::to_string(turning) +
        ", expected 2*pi");
}

double Polyline::length() const {
  double len = 0.0;
  for (std::size_t i = 1; i < vertices.size(); ++i)
    len += std::hypot(vertices[i][0] - vertices[i - 1][0],
                      vertices[i][1] - vertices[i - 1][1]);
  return len;
}

double Polyline::area() const {
  double twice = 0.0;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    twice += vertices[i][0] * vertices[i + 1][1] -
             vertices[i + 1][0] * vertices[i][1];
  if (!closed && n > 1)
    twice += vertices[n - 1][0] * vertices[0][1] -
             vertices[0][0] * vertices[n - 1][1];
  return 0.5 * twice;
}

Functionals functionals_from_support(const SupportBody& body, int grid_size) {
  if (grid_size < 16) throw std::invalid_argument("grid_size too small");
  const FourierSeries& h = body.series();

  // Fourier-exact area and perimeter.
  double area = kPi * h.mean * h.mean;
  for (int k = 1; k <= body.order(); ++k) {
    const double scale = 1.0 - static_cast<double>(k) * k;
    area += 0.5 * kPi * scale *
            (h.cos_coeffs[k - 1] * h.cos_coeffs[k - 1] +
             h.sin_coeffs[k - 1] * h.sin_coeffs[k - 1]);
  }
  const double perimeter = kTwoPi * h.mean;

  // Quadrature pass: E and the cross-check of A, P.  The trapezoidal rule
  // on the periodic grid is spectrally accurate here.
  const double dt = kTwoPi / grid_size;
  double min_phi = std::numeric_limits<double>::infinity();
  double a_quad = 0.0, p_quad = 0.0, e_quad = 0.0;
  for (int i = 0; i < grid_size; ++i) {
    const double t = i * dt;
    const double hv = h(t);
    const double phi = body.curvature_radius(t);
    min_phi = std::min(min_phi, phi);
    a_quad += hv * phi;
    p_quad += hv;
    if (phi > 0.0) e_quad += 1.0 / phi;
  }
  if (min_phi <= 0.0)
    throw NonConvexError(
        "functionals_from_support: radius of curvature reaches " +
        std::to_string(min_phi) + "; elastic energy undefined");
  a_quad *= 0.5 * dt;
  p_quad *= dt;
  e_quad *= 0.5 * dt;

  const double scale = std::max(1.0, std::abs(area));
  if (std::abs(a_quad - area) > 1e-10 * scale ||
      std::abs(p_quad - perimeter) > 1e-10 * std::max(1.0, perimeter))
    throw std::logic_error(
        "functionals_from_support: quadrature disagrees with coefficient "
        "formulas");

  return {area, perimeter, e_quad};
}

SupportBody apply_g(const FourierSeries& phi) {
  if (std::abs(phi.cos_coeff(1)) > 1e-10 || std::abs(phi.sin_coeff(1)) > 1e-10)
    throw SolvabilityError(
        "apply_g: phi has a resonant first harmonic; h'' + h = phi is not "
        "solvable with 2*pi periodicity");
  FourierSeries h;
  h.mean = phi.mean;
  h.cos_coeffs.assign(phi.cos_coeffs.size(), 0.0);
  h.sin_coeffs.assign(phi.sin_coeffs.size(), 0.0);
  for (int k = 2; k <= phi.order(); ++k) {
    const double scale = 1.0 - static_cast<double>(k) * k;
    h.cos_coeffs[k - 1] = phi.cos_coeffs[k - 1] / scale;
    h.sin_coeffs[k - 1] = phi.sin_coeffs[k - 1] / scale;
  }
  return SupportBody(std::move(h));
}

Functionals functionals_from_theta(const ThetaFunction& tf) {
  tf.validate();
  const std::size_t n = tf.grid.size();
  const double h = tf.perimeter / static_cast<double>(n - 1);

  // theta extends periodically as theta(s + P) = theta(s) + 2*pi, which
  // supplies the centered stencil at both ends.
  double sum = 0.0;
  for (std::size_t i = 0; i < n - 1; ++i) {
    const double dtheta = (i == 0)
                              ? tf.theta[1] - (tf.theta[n - 2] - kTwoPi)
                              : tf.theta[i + 1] - tf.theta[i - 1];
    const double deriv = dtheta / (2.0 * h);
    sum += deriv * deriv;
  }
  const double energy = 0.5 * sum * h;

  Polyline poly = reconstruct_polyline(tf);
  return {poly.area(), tf.perimeter, energy};
}

Polyline reconstruct_polyline(const ThetaFunction& tf, double* closure_residual) {
  const std::size_t n = tf.grid.size();
  if (n < 3 || tf.theta.size() != n)
    throw ConstraintViolationError("reconstruct_polyline: bad grid");
  const double h = tf.perimeter / static_cast<double>(n - 1);
  std::vector<double> c(n), s(n);
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = std::cos(tf.theta[i]);
    s[i] = std::sin(tf.theta[i]);
  }
  const std::vector<double> xs = cumulative_simpson(c, h);
  const std::vector<double> ys = cumulative_simpson(s, h);
  Polyline poly;
  poly.vertices.resize(n);
  for (std::size_t i = 0; i < n; ++i) poly.vertices[i] = {xs[i], ys[i]};
  poly.closed = std::hypot(xs.back(), ys.back()) < 1e-4;
  if (closure_residual) *closure_residual = std::hypot(xs.back(), ys.back());
  return poly;
}

SupportBody minkowski_combine(const SupportBody& b0, const SupportBody& b1,
                              double tau) {
  const int order = std::max(b0.order(), b1.order());
  FourierSeries h;
  h.mean = tau * b1.a0() + (1.0 - tau) * b0.a0();
  h.cos_coeffs.resize(order);
  h.sin_coeffs.resize(order);
  for (int k = 1; k <= order; ++k) {
    h.cos_coeffs[k - 1] =
        tau * b1.series().cos_coeff(k) + (1.0 - tau) * b0.series().cos_coeff(k);
    h.sin_coeffs[k - 1] =
        tau * b1.series().sin_coeff(k) + (1.0 - tau) * b0.series().sin_coeff(k);
  }
  return SupportBody(std::move(h));
}

ShapeDerivatives shape_derivatives(const SupportBody& body,
                                   const VectorField& field, int grid_size) {
  const FourierSeries phi = body.curvature_radius_series();
  const FourierSeries dphi = phi.derivative();
  const FourierSeries ddphi = dphi.derivative();

  const double dt = kTwoPi / grid_size;
  double d_area = 0.0, d_perimeter = 0.0, d_energy = 0.0;
  for (int i = 0; i < grid_size; ++i) {
    const double t = i * dt;
    const double p = phi(t);
    if (p <= 0.0)
      throw NonConvexError("shape_derivatives: body is not strictly convex");
    const double p1 = dphi(t);
    const double p2 = ddphi(t);
    // k = 1/phi with d/ds = (1/phi) d/dt:
    const double k = 1.0 / p;
    const double k_ss = -p2 / (p * p * p * p) + 3.0 * p1 * p1 / (p * p * p * p * p);
    const double vn = field.x(t) * std::cos(t) + field.y(t) * std::sin(t);
    d_area += vn * p;
    d_perimeter += vn;  // k * phi = 1
    d_energy -= (k_ss + 0.5 * k * k * k) * vn * p;
  }
  return {d_area * dt, d_perimeter * dt, d_energy * dt};
}

FourierSeries normal_component_series(const VectorField& field, int order,
                                      int grid_size) {
  FourierSeries out;
  out.cos_coeffs.assign(order, 0.0);
  out.sin_coeffs.assign(order, 0.0);
  const double dt = kTwoPi / grid_size;
  double mean = 0.0;
  std::vector<double> samples(grid_size);
  for (int i = 0; i < grid_size; ++i) {
    const double t = i * dt;
    samples[i] = field.x(t) * std::cos(t) + field.y(t) * std::sin(t);
    mean += samples[i];
  }
  out.mean = mean / grid_size;
  for (int k = 1; k <= order; ++k) {
    double a = 0.0, b = 0.0;
    for (int i = 0; i < grid_size; ++i) {
      a += samples[i] * std::cos(k * i * dt);
      b += samples[i] * std::sin(k * i * dt);
    }
    out.cos_coeffs[k - 1] = 2.0 * a / grid_size;
    out.sin_coeffs[k - 1] = 2.0 * b / grid_size;
  }
  return out;
}

ThetaFunction theta_from_support(const SupportBody& body, int grid_size) {
  if (body.min_curvature_radius() <= 0.0)
    throw NonConvexError("theta_from_support: body is not strictly convex");

  // s(t) = int_0^t phi in closed form, sampled on a fine t-grid.
  const int fine = std::max(4 * grid_size, 4096);
  const FourierSeries& h = body.series();
  std::vector<double> ts(fine + 1), ss(fine + 1);
  for (int i = 0; i <= fine; ++i) {
    const double t = kTwoPi * i / fine;
    double s = h.mean * t;
    for (int k = 1; k <= body.order(); ++k) {
      const double scale = 1.0 - static_cast<double>(k) * k;
      s += scale * (h.cos_coeffs[k - 1] * std::sin(k * t) -
                    h.sin_coeffs[k - 1] * (std::cos(k * t) - 1.0)) /
           k;
    }
    ts[i] = t;
    ss[i] = s;
  }
  const double perimeter = ss.back();
  MonotoneCubic t_of_s(ss, ts);

  ThetaFunction tf;
  tf.perimeter = perimeter;
  tf.grid.resize(grid_size + 1);
  tf.theta.resize(grid_size + 1);
  for (int i = 0; i <= grid_size; ++i) {
    const double s = perimeter * i / grid_size;
    tf.grid[i] = s;
    tf.theta[i] = t_of_s(s) + 0.5 * kPi;
  }
  // pin the endpoints exactly
  tf.theta.front() = 0.5 * kPi;
  tf.theta.back() = kTwoPi + 0.5 * kPi;
  return tf;
}

}  // namespace elastica
