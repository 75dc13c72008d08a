#include <cmath>
#include <random>

#include <doctest.h>

#include "elastica/closed_form.hpp"
#include "elastica/errors.hpp"
#include "elastica/shooting.hpp"
#include "elastica/special_functions.hpp"

using namespace elastica;

namespace {
constexpr double kPi = 3.14159265358979323846;

double quartic_value(const ElasticaParams& p, double z) {
  return -0.25 * z * z * z * z - p.lambda * z * z + 2.0 * p.mu * z +
         p.first_integral_c;
}
}  // namespace

TEST_CASE("build_params: constant-curvature branch") {
  // -1/2 - 1.5 + 2 = 0, so k == 1 solves the optimality ODE
  const ElasticaParams p = build_params(2.0, 1.5, 1.0);
  CHECK(p.degenerate);
  CHECK(curvature_at(p, 0.3) == doctest::Approx(1.0));
  CHECK(curvature_derivative_at(p, 0.3) == doctest::Approx(0.0));
  CHECK(first_integral_residual(p, 0.7) == doctest::Approx(0.0));
  CHECK(theta_integral(p, kPi / 2) == doctest::Approx(kPi / 2));
  CHECK_FALSE(first_zero(p, 10.0).has_value());
}

TEST_CASE("build_params: rejected parameter combinations") {
  // no admissible orbit with k_max far below the equilibrium curvature
  CHECK_THROWS_AS((void)build_params(4.0, 0.0, 0.1),
                  InconsistentParametersError);
  CHECK_THROWS_AS((void)build_params(-1.0, 0.5, 1.0), std::domain_error);
  CHECK_THROWS_AS((void)build_params(2.0, -0.1, 1.0), std::domain_error);
  CHECK_THROWS_AS((void)build_params(2.0, 0.5, -1.0), std::domain_error);
}

TEST_CASE("build_params: closed-form identities at a solved shape") {
  const OptimalShape shape = solve_mu(4.0);
  const ElasticaParams& p = shape.params;

  // first-integral constant from its definition
  CHECK(p.first_integral_c ==
        doctest::Approx(0.25 * std::pow(p.k_max, 4) +
                        p.lambda * p.k_max * p.k_max - 2 * p.mu * p.k_max)
            .epsilon(1e-12));
  // both curvature extrema are roots of the quartic
  CHECK(std::abs(quartic_value(p, p.k_max)) <= 1e-10);
  CHECK(std::abs(quartic_value(p, p.k_min)) <= 1e-10);
  // Moebius coefficient root in (-1, 0)
  CHECK(p.gamma > -1.0);
  CHECK(p.gamma < 0.0);
  const double b =
      (3 * p.sigma * p.sigma + p.delta * p.delta + 2 * p.lambda) /
      (p.sigma * p.delta);
  CHECK(std::abs(p.gamma * p.gamma + b * p.gamma + 1.0) <= 1e-10);
  // frequency and elliptic parameter
  CHECK(p.omega * p.omega ==
        doctest::Approx(p.sigma * p.delta * (p.gamma * p.gamma - 1) /
                        (2 * p.gamma))
            .epsilon(1e-12));
  CHECK(p.m > 0.0);
  CHECK(p.m < 1.0);
  // extrema of the curvature law
  CHECK(curvature_at(p, 0.0) == doctest::Approx(p.k_max).epsilon(1e-12));
  CHECK(std::abs(curvature_at(p, p.half_period()) - p.k_min) <= 1e-9);
}

TEST_CASE("curvature_at: evenness and denominator safety") {
  const OptimalShape shape = solve_mu(5.0);
  const ElasticaParams& p = shape.params;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> pick(-8.0, 8.0);
  for (int i = 0; i < 64; ++i) {
    const double s = pick(rng);
    CHECK(curvature_at(p, -s) == doctest::Approx(curvature_at(p, s)).epsilon(1e-12));
  }
  CHECK(std::abs(p.gamma) < 1.0);  // gamma cn + 1 stays positive
}

TEST_CASE("first_integral_residual: solved parameters stay on the orbit") {
  const OptimalShape shape = solve_mu(4.0);
  const ElasticaParams& p = shape.params;
  const double tol = 1e-8 * (1.0 + std::pow(p.k_max, 4));
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> pick(0.0, 4.0 * p.half_period());
  for (int i = 0; i < 100; ++i)
    CHECK(std::abs(first_integral_residual(p, pick(rng))) <= tol);
  CHECK(std::abs(first_integral_residual(p, 0.0)) <= 1e-12);
}

TEST_CASE("theta_integral: rejects negative arclength") {
  const ElasticaParams p = build_params(2.0, 1.5, 1.0);
  CHECK_THROWS_AS((void)theta_integral(p, -0.1), std::domain_error);
}

TEST_CASE("theta_integral: monotone while the curvature is positive") {
  const OptimalShape shape = solve_mu(8.0);
  const ElasticaParams& p = shape.params;
  double prev = 0.0;
  for (int i = 1; i <= 16; ++i) {
    const double v = theta_integral(p, *shape.s1 * i / 16.0);
    CHECK(v > prev);
    prev = v;
  }
  // quarter turn over the fundamental arc
  CHECK(std::abs(theta_integral(p, *shape.s1) - kPi / 2) <= 1e-8);
}

TEST_CASE("first_zero: presence, absence and boundary slope") {
  // strictly convex parameters (solved shape below the segment onset)
  const OptimalShape convex = solve_mu(3.2);
  CHECK(convex.params.k_min > 0.0);
  CHECK_FALSE(first_zero(convex.params, kPi).has_value());

  const OptimalShape seg = solve_mu(8.0);
  const auto s1 = first_zero(seg.params, kPi / 2);
  REQUIRE(s1.has_value());
  CHECK(*s1 < kPi / 2);
  CHECK(std::abs(curvature_at(seg.params, *s1)) <= 1e-10);
  // slope at the junction equals -sqrt(C)
  CHECK(std::abs(curvature_derivative_at(seg.params, *s1) +
                 std::sqrt(seg.params.first_integral_c)) <= 1e-8);
}

TEST_CASE("optimality ODE holds along strictly convex arcs") {
  const OptimalShape shape = solve_mu(6.0);
  const ElasticaParams& p = shape.params;
  const double h = 1e-4;
  for (int i = 1; i <= 25; ++i) {
    const double s = 0.95 * *shape.s1 * i / 25.0;
    const double kdd =
        (curvature_at(p, s + h) - 2.0 * curvature_at(p, s) +
         curvature_at(p, s - h)) /
        (h * h);
    const double k = curvature_at(p, s);
    CHECK(std::abs(kdd - (-0.5 * k * k * k - p.lambda * k + p.mu)) <= 1e-5);
  }
}

TEST_CASE("curvature law is periodic with period 4K(m)/omega") {
  const OptimalShape shape = solve_mu(4.0);
  const ElasticaParams& p = shape.params;
  const double period = 2.0 * p.half_period();
  for (double s : {0.1, 0.5, 1.0, 2.0})
    CHECK(std::abs(curvature_at(p, s + period) - curvature_at(p, s)) <= 1e-8);
}

TEST_CASE("closed form matches a direct time-stepping integration") {
  // independent oracle: integrate k'' = -k^3/2 - lambda k + mu with RK4
  // from (k_max, 0) and compare against the elliptic-function law
  for (double mu : {3.2, 4.0, 8.0}) {
    const ElasticaParams p = solve_mu(mu).params;
    double k = p.k_max;
    double v = 0.0;  // k'
    const double h = 1e-4;
    const double s_end = 2.0 * p.half_period();
    auto acc = [&p](double kk) {
      return -0.5 * kk * kk * kk - p.lambda * kk + p.mu;
    };
    double worst = 0.0;
    double s = 0.0;
    const int steps = static_cast<int>(s_end / h);
    for (int i = 0; i < steps; ++i) {
      const double k1v = acc(k), k1k = v;
      const double k2v = acc(k + 0.5 * h * k1k), k2k = v + 0.5 * h * k1v;
      const double k3v = acc(k + 0.5 * h * k2k), k3k = v + 0.5 * h * k2v;
      const double k4v = acc(k + h * k3k), k4k = v + h * k3v;
      k += h / 6.0 * (k1k + 2 * k2k + 2 * k3k + k4k);
      v += h / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v);
      s += h;
      if (i % 256 == 0)
        worst = std::max(worst, std::abs(k - curvature_at(p, s)));
    }
    worst = std::max(worst, std::abs(k - curvature_at(p, s)));
    CHECK(worst <= 1e-8);
  }
}

TEST_CASE("turning-circle radius is consistent with the first integral") {
  for (double mu : {3.2, 4.0, 10.0}) {
    const ElasticaParams p = solve_mu(mu).params;
    CHECK(std::abs(p.mu * p.mu *
                       (p.r0_sq - (p.lambda / p.mu) * (p.lambda / p.mu)) -
                   p.first_integral_c) <= 1e-9);
  }
}
