#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "elastica/special_functions.hpp"
#include "oracle_quadrature.hpp"

using namespace elastica;

namespace {
constexpr double kPi = 3.14159265358979323846;

// frozen from the quadrature oracle (and re-derived below at runtime)
constexpr double kK_half = 1.8540746773013719;
constexpr double kE_half = 1.3506438810476755;
}  // namespace

TEST_CASE("complete K: closed values and oracle agreement") {
  CHECK(complete_elliptic_k(0.0) == doctest::Approx(kPi / 2).epsilon(1e-14));
  CHECK(complete_elliptic_k(0.5) == doctest::Approx(kK_half).epsilon(1e-12));
  CHECK(complete_elliptic_k(0.5) ==
        doctest::Approx(oracle::complete_k(0.5)).epsilon(1e-12));
  CHECK_THROWS_AS((void)complete_elliptic_k(1.0), std::domain_error);
  CHECK_THROWS_AS((void)complete_elliptic_k(-0.1), std::domain_error);
  CHECK_THROWS_AS((void)complete_elliptic_k(1.5), std::domain_error);
}

TEST_CASE("complete E: closed values and oracle agreement") {
  CHECK(complete_elliptic_e(0.0) == doctest::Approx(kPi / 2).epsilon(1e-14));
  CHECK(complete_elliptic_e(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(complete_elliptic_e(0.5) == doctest::Approx(kE_half).epsilon(1e-12));
  CHECK(complete_elliptic_e(0.5) ==
        doctest::Approx(oracle::complete_e(0.5)).epsilon(1e-12));
  CHECK_THROWS_AS((void)complete_elliptic_e(-0.2), std::domain_error);
  CHECK_THROWS_AS((void)complete_elliptic_e(1.2), std::domain_error);
}

TEST_CASE("K and E track the quadrature oracle across the m grid") {
  for (double m : {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99}) {
    CHECK(std::abs(complete_elliptic_k(m) - oracle::complete_k(m)) <= 1e-10);
    CHECK(std::abs(complete_elliptic_e(m) - oracle::complete_e(m)) <= 1e-10);
  }
}

TEST_CASE("jacobi_elliptic: special arguments") {
  for (double m : {0.0, 0.3, 0.99, 1.0}) {
    const JacobiTriple j = jacobi_elliptic(0.0, m);
    CHECK(j.sn == doctest::Approx(0.0));
    CHECK(j.cn == doctest::Approx(1.0));
    CHECK(j.dn == doctest::Approx(1.0));
  }
  const JacobiTriple trig = jacobi_elliptic(1.0, 0.0);
  CHECK(trig.sn == doctest::Approx(std::sin(1.0)).epsilon(1e-14));
  CHECK(trig.cn == doctest::Approx(std::cos(1.0)).epsilon(1e-14));
  CHECK(trig.dn == doctest::Approx(1.0));

  // K(m) is the first zero of cn
  CHECK(std::abs(jacobi_elliptic(complete_elliptic_k(0.5), 0.5).cn) <= 1e-10);

  CHECK_THROWS_AS((void)jacobi_elliptic(1.0, -0.1), std::domain_error);
  CHECK_THROWS_AS((void)jacobi_elliptic(1.0, 1.1), std::domain_error);
  CHECK_THROWS_AS((void)jacobi_elliptic(std::nan(""), 0.5), std::domain_error);
}

TEST_CASE("jacobi_elliptic: algebraic identities on random samples") {
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> pick_m(0.0, 1.0);
  std::uniform_real_distribution<double> pick_u(-25.0, 25.0);
  double worst_sc = 0.0, worst_dn = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double m = pick_m(rng);
    const JacobiTriple j = jacobi_elliptic(pick_u(rng), m);
    worst_sc = std::max(worst_sc, std::abs(j.sn * j.sn + j.cn * j.cn - 1.0));
    worst_dn =
        std::max(worst_dn, std::abs(j.dn * j.dn + m * j.sn * j.sn - 1.0));
  }
  CHECK(worst_sc <= 1e-11);
  CHECK(worst_dn <= 1e-11);
}

TEST_CASE("jacobi_elliptic: cn periodicity 4K(m)") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> pick_u(-10.0, 10.0);
  for (double m : {0.1, 0.5, 0.9}) {
    const double period = 4.0 * complete_elliptic_k(m);
    for (int i = 0; i < 50; ++i) {
      const double u = pick_u(rng);
      CHECK(std::abs(jacobi_elliptic(u + period, m).cn -
                     jacobi_elliptic(u, m).cn) <= 1e-9);
    }
  }
}

TEST_CASE("jacobi_elliptic: cn' = -sn dn by finite differences") {
  const double h = 1e-5;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> pick_u(-5.0, 5.0);
  for (double m : {0.2, 0.5, 0.8}) {
    for (int i = 0; i < 40; ++i) {
      const double u = pick_u(rng);
      const double fd =
          (jacobi_elliptic(u + h, m).cn - jacobi_elliptic(u - h, m).cn) /
          (2.0 * h);
      const JacobiTriple j = jacobi_elliptic(u, m);
      CHECK(std::abs(fd + j.sn * j.dn) <= 1e-6);
    }
  }
}

TEST_CASE("rho_constant: value and composition") {
  const double rho = rho_constant();
  CHECK(std::abs(rho - 4.2473) <= 5e-4);
  // composition of the two complete-integral oracles
  const double composed =
      2.0 * std::sqrt(2.0 * kPi) *
      (2.0 * oracle::complete_e(0.5) - oracle::complete_k(0.5));
  CHECK(rho == doctest::Approx(composed).epsilon(1e-12));
  CHECK(std::abs(rho * rho / (kPi * kPi) - 1.8278) <= 3e-4);
}
