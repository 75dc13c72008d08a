#include <cmath>
#include <random>

#include <doctest.h>

#include "elastica/errors.hpp"
#include "elastica/geometry.hpp"

using namespace elastica;

namespace {

constexpr double kPi = 3.14159265358979323846;

SupportBody random_convex_body(std::mt19937_64& rng, int max_order = 8) {
  std::uniform_int_distribution<int> pick_order(2, max_order);
  std::uniform_real_distribution<double> pick(-1.0, 1.0);
  const int order = pick_order(rng);
  std::vector<double> ac(order, 0.0), as(order, 0.0);
  for (int k = 2; k <= order; ++k) {
    ac[k - 1] = pick(rng) / (k * k);
    as[k - 1] = pick(rng) / (k * k);
  }
  SupportBody body(1.0, ac, as);
  while (body.min_curvature_radius() <= 1e-3) {
    for (auto& v : ac) v *= 0.5;
    for (auto& v : as) v *= 0.5;
    body = SupportBody(1.0, ac, as);
  }
  return body;
}

ThetaFunction unit_circle_theta(int n = 4096) {
  ThetaFunction tf;
  tf.perimeter = 2.0 * kPi;
  tf.grid.resize(n + 1);
  tf.theta.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    tf.grid[i] = 2.0 * kPi * i / n;
    tf.theta[i] = tf.grid[i];
  }
  return tf;
}

}  // namespace

TEST_CASE("functionals_from_support: disk and one-harmonic bodies") {
  const Functionals disk = functionals_from_support(SupportBody::disk());
  CHECK(disk.area == doctest::Approx(kPi).epsilon(1e-13));
  CHECK(disk.perimeter == doctest::Approx(2 * kPi).epsilon(1e-13));
  CHECK(disk.elastic_energy == doctest::Approx(kPi).epsilon(1e-13));

  // h = 1 + 0.1 cos 2t
  const Functionals f2 =
      functionals_from_support(SupportBody(1.0, {0.0, 0.1}, {0.0, 0.0}));
  CHECK(f2.area == doctest::Approx(kPi * (1.0 - 1.5 * 0.01)).epsilon(1e-13));
  CHECK(f2.perimeter == doctest::Approx(2 * kPi).epsilon(1e-13));
  CHECK(f2.elastic_energy ==
        doctest::Approx(kPi / std::sqrt(1.0 - 9.0 * 0.01)).epsilon(1e-12));

  // h = 1 + 0.1 cos 3t
  const Functionals f3 =
      functionals_from_support(SupportBody(1.0, {0.0, 0.0, 0.1}, {0.0, 0.0, 0.0}));
  CHECK(f3.area == doctest::Approx(0.96 * kPi).epsilon(1e-13));
  CHECK(f3.elastic_energy == doctest::Approx(kPi / 0.6).epsilon(1e-12));
}

TEST_CASE("functionals_from_support: non-convex bodies are rejected") {
  // h = 1 + 0.5 cos 2t has phi = 1 - 1.5 cos 2t < 0 at t = 0
  CHECK_THROWS_AS(
      (void)functionals_from_support(SupportBody(1.0, {0.0, 0.5}, {0.0, 0.0})),
      NonConvexError);
}

TEST_CASE("apply_g: modewise inverse of h'' + h") {
  const SupportBody flat = apply_g(FourierSeries{1.0, {}, {}});
  CHECK(flat.a0() == doctest::Approx(1.0));
  CHECK(flat.order() == 0);

  const SupportBody g2 = apply_g(FourierSeries{1.0, {0.0, 1.0}, {0.0, 0.0}});
  CHECK(g2.series().cos_coeff(2) == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));

  CHECK_THROWS_AS((void)apply_g(FourierSeries{1.0, {0.5}, {0.0}}),
                  SolvabilityError);
}

TEST_CASE("apply_g then h''+h recovers the harmonics exactly") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> pick(-0.2, 0.2);
  FourierSeries phi{1.0, {0.0, pick(rng), pick(rng), pick(rng)},
                    {0.0, pick(rng), pick(rng), pick(rng)}};
  const SupportBody h = apply_g(phi);
  const FourierSeries back = h.curvature_radius_series();
  for (int k = 2; k <= phi.order(); ++k) {
    CHECK(back.cos_coeff(k) == doctest::Approx(phi.cos_coeff(k)).epsilon(1e-15));
    CHECK(back.sin_coeff(k) == doctest::Approx(phi.sin_coeff(k)).epsilon(1e-15));
  }
}

TEST_CASE("functionals_from_theta: unit circle and constraint violations") {
  const Functionals f = functionals_from_theta(unit_circle_theta());
  CHECK(f.area == doctest::Approx(kPi).epsilon(1e-6));
  CHECK(f.perimeter == doctest::Approx(2 * kPi));
  CHECK(f.elastic_energy == doctest::Approx(kPi).epsilon(1e-9));

  ThetaFunction double_cover = unit_circle_theta();
  for (auto& th : double_cover.theta) th *= 2.0;  // turning 4*pi
  CHECK_THROWS_AS((void)functionals_from_theta(double_cover),
                  ConstraintViolationError);

  ThetaFunction dip = unit_circle_theta();
  dip.theta[100] = dip.theta[99] - 1e-3;
  CHECK_THROWS_AS((void)functionals_from_theta(dip), ConstraintViolationError);
}

TEST_CASE("reconstruct_polyline: circle through the origin") {
  const ThetaFunction tf = unit_circle_theta();
  double closure = 1.0;
  const Polyline poly = reconstruct_polyline(tf, &closure);
  CHECK(closure <= 1e-10);
  CHECK(poly.closed);
  // antipode of the start point on a unit circle
  const auto mid = poly.vertices[poly.vertices.size() / 2];
  CHECK(std::abs(mid[0]) <= 1e-10);
  CHECK(mid[1] == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("minkowski_combine: endpoints and disks") {
  const SupportBody a(1.0, {0.0, 0.1}, {0.0, 0.0});
  const SupportBody b(1.0, {0.0, 0.0, 0.05}, {0.0, 0.0, 0.0});
  const SupportBody at0 = minkowski_combine(a, b, 0.0);
  CHECK(at0.series().cos_coeff(2) == doctest::Approx(0.1));
  CHECK(at0.series().cos_coeff(3) == doctest::Approx(0.0));
  const SupportBody at1 = minkowski_combine(a, b, 1.0);
  CHECK(at1.series().cos_coeff(3) == doctest::Approx(0.05));

  const SupportBody disks =
      minkowski_combine(SupportBody::disk(), SupportBody::disk(), 0.37);
  CHECK(disks.a0() == doctest::Approx(1.0));
  for (int k = 1; k <= disks.order(); ++k) {
    CHECK(disks.series().cos_coeff(k) == doctest::Approx(0.0));
    CHECK(disks.series().sin_coeff(k) == doctest::Approx(0.0));
  }
}

TEST_CASE("minkowski_combine: elastic energy is convex along the sum") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> pick_tau(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const SupportBody b0 = random_convex_body(rng);
    const SupportBody b1 = random_convex_body(rng);
    const double tau = pick_tau(rng);
    const double lhs =
        functionals_from_support(minkowski_combine(b0, b1, tau)).elastic_energy;
    const double rhs =
        tau * functionals_from_support(b1).elastic_energy +
        (1.0 - tau) * functionals_from_support(b0).elastic_energy;
    CHECK(lhs <= rhs + 1e-10);
  }
}

TEST_CASE("shape_derivatives: translation invariance and scaling field") {
  const SupportBody body(1.0, {0.0, 0.05, 0.02}, {0.0, 0.0, 0.01});
  const ShapeDerivatives t =
      shape_derivatives(body, VectorField::translation(1.3, -0.4));
  CHECK(std::abs(t.d_area) <= 1e-9);
  CHECK(std::abs(t.d_perimeter) <= 1e-9);
  CHECK(std::abs(t.d_elastic_energy) <= 1e-9);

  // identity position field on the unit disk: d/dt of (t^2 A, t P, E/t)
  VectorField identity;
  identity.x = {0.0, {1.0}, {0.0}};  // cos t
  identity.y = {0.0, {0.0}, {1.0}};  // sin t
  const ShapeDerivatives d = shape_derivatives(SupportBody::disk(), identity);
  CHECK(d.d_area == doctest::Approx(2 * kPi).epsilon(1e-12));
  CHECK(d.d_perimeter == doctest::Approx(2 * kPi).epsilon(1e-12));
  CHECK(d.d_elastic_energy == doctest::Approx(-kPi).epsilon(1e-12));
}

TEST_CASE("shape_derivatives: central finite-difference oracle") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> pick(-0.6, 0.6);
  const double eps = 1e-5;
  for (int trial = 0; trial < 5; ++trial) {
    const SupportBody body(1.0, {0.0, 0.05, 0.0, 0.01}, {0.0, 0.0, 0.02, 0.0});
    VectorField field;
    field.x = {pick(rng), {pick(rng), pick(rng), pick(rng)},
               {pick(rng), pick(rng), pick(rng)}};
    field.y = {pick(rng), {pick(rng), pick(rng), pick(rng)},
               {pick(rng), pick(rng), pick(rng)}};
    const ShapeDerivatives d = shape_derivatives(body, field);

    const FourierSeries vn = normal_component_series(field, body.order() + 4);
    auto perturbed = [&](double sign) {
      FourierSeries h = body.series();
      h.mean += sign * eps * vn.mean;
      h.cos_coeffs.resize(vn.cos_coeffs.size(), 0.0);
      h.sin_coeffs.resize(vn.sin_coeffs.size(), 0.0);
      for (std::size_t i = 0; i < vn.cos_coeffs.size(); ++i) {
        h.cos_coeffs[i] += sign * eps * vn.cos_coeffs[i];
        h.sin_coeffs[i] += sign * eps * vn.sin_coeffs[i];
      }
      return functionals_from_support(SupportBody(h));
    };
    const Functionals plus = perturbed(1.0);
    const Functionals minus = perturbed(-1.0);
    const double scale_a = std::max(1.0, std::abs(d.d_area));
    const double scale_p = std::max(1.0, std::abs(d.d_perimeter));
    const double scale_e = std::max(1.0, std::abs(d.d_elastic_energy));
    CHECK(std::abs((plus.area - minus.area) / (2 * eps) - d.d_area) <=
          1e-4 * scale_a);
    CHECK(std::abs((plus.perimeter - minus.perimeter) / (2 * eps) -
                   d.d_perimeter) <= 1e-4 * scale_p);
    CHECK(std::abs((plus.elastic_energy - minus.elastic_energy) / (2 * eps) -
                   d.d_elastic_energy) <= 1e-4 * scale_e);
  }
}

TEST_CASE("shape_derivatives: non-convex body is rejected") {
  VectorField field = VectorField::translation(1.0, 0.0);
  CHECK_THROWS_AS(
      (void)shape_derivatives(SupportBody(1.0, {0.0, 0.6}, {0.0, 0.0}), field),
      NonConvexError);
}

TEST_CASE("isoperimetric, elastic and Gage inequalities on random bodies") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const Functionals f = functionals_from_support(random_convex_body(rng));
    CHECK(4.0 * kPi * f.area / (f.perimeter * f.perimeter) <= 1.0 + 1e-9);
    CHECK(f.elastic_energy * f.perimeter >= 2.0 * kPi * kPi - 1e-6);
    CHECK(f.elastic_energy * f.area / f.perimeter >= kPi / 2.0 - 1e-9);
  }
}

TEST_CASE("support -> theta round trip preserves the functionals") {
  const SupportBody body(1.0, {0.0, 0.05, 0.0}, {0.0, 0.0, 0.03});
  const Functionals from_support = functionals_from_support(body);
  const ThetaFunction tf = theta_from_support(body, 8192);
  const Functionals from_theta = functionals_from_theta(tf);
  CHECK(std::abs(from_theta.area - from_support.area) <= 1e-6);
  CHECK(std::abs(from_theta.perimeter - from_support.perimeter) <= 1e-6);
  CHECK(std::abs(from_theta.elastic_energy - from_support.elastic_energy) <=
        1e-6);
}

TEST_CASE("support body text serialization round trip") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const SupportBody body = random_convex_body(rng);
    const SupportBody back = SupportBody::from_text(body.to_text());
    CHECK(back.a0() == body.a0());
    CHECK(back.order() == body.order());
    for (int k = 1; k <= body.order(); ++k) {
      CHECK(back.series().cos_coeff(k) == body.series().cos_coeff(k));
      CHECK(back.series().sin_coeff(k) == body.series().sin_coeff(k));
    }
  }
  CHECK_THROWS_AS((void)SupportBody::from_text("bogus 1.0\n"),
                  std::invalid_argument);
}
