#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include "elastica/closed_form.hpp"
#include "elastica/diagram.hpp"
#include "elastica/errors.hpp"
#include "elastica/geometry.hpp"
#include "elastica/quadrature.hpp"
#include "elastica/shooting.hpp"
#include "elastica/special_functions.hpp"
#include "render.hpp"

namespace elastica::tools {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::optional<ShootingMode> parse_mode(const std::string& mode) {
  if (mode == "auto" || mode.empty()) return std::nullopt;
  if (mode == "strict") return ShootingMode::strictly_convex;
  if (mode == "segments") return ShootingMode::with_segments;
  if (mode == "disk") return ShootingMode::disk_branch;
  throw std::invalid_argument("unknown --mode '" + mode + "'");
}

SolverOptions solver_options(const RunConfig& cfg) {
  SolverOptions options;
  options.q = cfg.q;
  options.mode_override = parse_mode(cfg.mode);
  options.grid_size = cfg.grid;
  if (cfg.tolerance) {
    if (*cfg.tolerance < 1e3 * std::numeric_limits<double>::epsilon())
      throw std::invalid_argument("--tol below 1000*machine epsilon");
    options.tolerance = *cfg.tolerance;
  }
  return options;
}

std::string json_path_for(const std::string& csv_path) {
  const auto dot = csv_path.rfind('.');
  const std::string stem =
      (dot == std::string::npos) ? csv_path : csv_path.substr(0, dot);
  return stem + ".json";
}

// ---- verify: a compact named-check registry -------------------------------

struct Check {
  std::string suite;
  std::string name;
  std::function<bool(std::string&)> run;  // fills a detail string
};

bool approx(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// quadrature oracle for the complete integrals (trig form of the defining
// integrals; independent of the AGM implementation path)
double oracle_k(double m) {
  return integrate(
      [m](double psi) {
        const double s = std::sin(psi);
        return 1.0 / std::sqrt(1.0 - m * s * s);
      },
      0.0, kPi / 2.0, 1e-13, 1e-13);
}

double oracle_e(double m) {
  return integrate(
      [m](double psi) {
        const double s = std::sin(psi);
        return std::sqrt(1.0 - m * s * s);
      },
      0.0, kPi / 2.0, 1e-13, 1e-13);
}

std::vector<Check> build_checks() {
  std::vector<Check> checks;
  auto add = [&checks](const std::string& suite, const std::string& name,
                       std::function<bool(std::string&)> run) {
    checks.push_back({suite, name, std::move(run)});
  };

  // ---- special functions ----
  add("special-functions", "K and E match quadrature oracles on the m-grid",
      [](std::string& detail) {
        double worst = 0.0;
        for (double m : {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99}) {
          worst = std::max(worst, std::abs(complete_elliptic_k(m) - oracle_k(m)));
          worst = std::max(worst, std::abs(complete_elliptic_e(m) - oracle_e(m)));
        }
        detail = "max defect " + std::to_string(worst);
        return worst <= 1e-10;
      });
  add("special-functions", "Jacobi identities on 10^4 random samples",
      [](std::string& detail) {
        std::mt19937_64 rng(12345);
        std::uniform_real_distribution<double> um(0.0, 1.0), uu(-20.0, 20.0);
        double worst = 0.0;
        for (int i = 0; i < 10000; ++i) {
          const double m = um(rng);
          const auto j = jacobi_elliptic(uu(rng), m);
          worst = std::max(worst, std::abs(j.sn * j.sn + j.cn * j.cn - 1.0));
          worst = std::max(worst,
                           std::abs(j.dn * j.dn + m * j.sn * j.sn - 1.0));
        }
        detail = "max defect " + std::to_string(worst);
        return worst <= 1e-11;
      });
  add("special-functions", "cn(K(1/2) | 1/2) = 0",
      [](std::string& detail) {
        const double cn = jacobi_elliptic(complete_elliptic_k(0.5), 0.5).cn;
        detail = "cn = " + std::to_string(cn);
        return std::abs(cn) <= 1e-10;
      });
  add("special-functions", "rho = 4.2473 within 5e-4", [](std::string& detail) {
    detail = "rho = " + std::to_string(rho_constant());
    return approx(rho_constant(), 4.2473, 5e-4);
  });

  // ---- geometry ----
  add("geometry", "unit disk functionals (pi, 2pi, pi)", [](std::string&) {
    const Functionals f = functionals_from_support(SupportBody::disk());
    return approx(f.area, kPi, 1e-12) && approx(f.perimeter, 2 * kPi, 1e-12) &&
           approx(f.elastic_energy, kPi, 1e-12);
  });
  add("geometry", "one-harmonic perturbation formulas", [](std::string&) {
    const SupportBody body(1.0, {0.0, 0.1}, {0.0, 0.0});  // 1 + 0.1 cos 2t
    const Functionals f = functionals_from_support(body);
    return approx(f.area, kPi * (1.0 - 1.5 * 0.01), 1e-12) &&
           approx(f.elastic_energy, kPi / std::sqrt(1.0 - 9.0 * 0.01), 1e-10);
  });
  add("geometry", "translation fields have zero shape derivatives",
      [](std::string& detail) {
        const SupportBody body(1.0, {0.0, 0.05, 0.02}, {0.0, 0.0, 0.01});
        const auto d =
            shape_derivatives(body, VectorField::translation(0.7, -0.3));
        const double worst = std::max(
            {std::abs(d.d_area), std::abs(d.d_perimeter),
             std::abs(d.d_elastic_energy)});
        detail = "max |d| = " + std::to_string(worst);
        return worst <= 1e-9;
      });
  add("geometry", "shape derivatives match central finite differences",
      [](std::string& detail) {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> coeff(-0.5, 0.5);
        double worst = 0.0;
        for (int trial = 0; trial < 3; ++trial) {
          const SupportBody body(1.0, {0.0, 0.04, 0.02}, {0.0, 0.01, 0.0});
          VectorField field;
          field.x = {coeff(rng), {coeff(rng), coeff(rng)}, {coeff(rng), coeff(rng)}};
          field.y = {coeff(rng), {coeff(rng), coeff(rng)}, {coeff(rng), coeff(rng)}};
          const auto d = shape_derivatives(body, field);
          const FourierSeries vn =
              normal_component_series(field, body.order() + 2);
          const double eps = 1e-5;
          auto shifted = [&](double sign) {
            FourierSeries h = body.series();
            h.mean += sign * eps * vn.mean;
            h.cos_coeffs.resize(
                std::max(h.cos_coeffs.size(), vn.cos_coeffs.size()), 0.0);
            h.sin_coeffs.resize(
                std::max(h.sin_coeffs.size(), vn.sin_coeffs.size()), 0.0);
            for (std::size_t i = 0; i < vn.cos_coeffs.size(); ++i) {
              h.cos_coeffs[i] += sign * eps * vn.cos_coeffs[i];
              h.sin_coeffs[i] += sign * eps * vn.sin_coeffs[i];
            }
            return functionals_from_support(SupportBody(h));
          };
          const Functionals fp = shifted(1.0), fm = shifted(-1.0);
          worst = std::max(worst, std::abs((fp.area - fm.area) / (2 * eps) -
                                           d.d_area));
          worst = std::max(worst,
                           std::abs((fp.perimeter - fm.perimeter) / (2 * eps) -
                                    d.d_perimeter));
          worst = std::max(
              worst, std::abs((fp.elastic_energy - fm.elastic_energy) /
                                  (2 * eps) -
                              d.d_elastic_energy));
        }
        detail = "max FD defect " + std::to_string(worst);
        return worst <= 1e-4;
      });
  add("geometry", "Gage inequality on 200 random convex bodies",
      [](std::string& detail) {
        std::mt19937_64 rng(99);
        std::uniform_real_distribution<double> coeff(-1.0, 1.0);
        std::uniform_int_distribution<int> order(2, 8);
        double worst = 1e9;
        for (int i = 0; i < 200; ++i) {
          const int n = order(rng);
          std::vector<double> ac(n, 0.0), as(n, 0.0);
          for (int k = 2; k <= n; ++k) {
            ac[k - 1] = coeff(rng) / (k * k);
            as[k - 1] = coeff(rng) / (k * k);
          }
          SupportBody body(1.0, ac, as);
          while (body.min_curvature_radius() <= 1e-3) {
            // shrink toward the disk until convex
            for (auto& v : ac) v *= 0.5;
            for (auto& v : as) v *= 0.5;
            body = SupportBody(1.0, ac, as);
          }
          const Functionals f = functionals_from_support(body);
          worst = std::min(worst, f.elastic_energy * f.area / f.perimeter);
        }
        detail = "min E*A/P = " + std::to_string(worst);
        return worst >= kPi / 2.0 - 1e-9;
      });

  // ---- elastica ----
  add("elastica", "closed-form parameter identities at a solved shape",
      [](std::string& detail) {
        const OptimalShape shape = solve_mu(4.0);
        const ElasticaParams& p = shape.params;
        double worst = std::abs(
            p.first_integral_c -
            (0.25 * std::pow(p.k_max, 4) + p.lambda * p.k_max * p.k_max -
             2.0 * p.mu * p.k_max));
        const double g = p.gamma;
        worst = std::max(
            worst, std::abs(g * g +
                            (3 * p.sigma * p.sigma + p.delta * p.delta +
                             2 * p.lambda) /
                                (p.sigma * p.delta) * g +
                            1.0));
        worst = std::max(worst, std::abs(curvature_at(p, 0.0) - p.k_max));
        worst = std::max(
            worst, std::abs(curvature_at(p, p.half_period()) - p.k_min));
        worst = std::max(
            worst, std::abs(p.mu * p.mu * (p.r0_sq -
                                           (p.lambda / p.mu) *
                                               (p.lambda / p.mu)) -
                            p.first_integral_c));
        detail = "max defect " + std::to_string(worst);
        return worst <= 1e-9;
      });
  add("elastica", "first-integral residual at 100 points",
      [](std::string& detail) {
        const OptimalShape shape = solve_mu(6.0);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i)
          worst = std::max(worst, std::abs(first_integral_residual(
                                      shape.params, 2.0 * *shape.s1 * i / 99.0)));
        detail = "max |residual| = " + std::to_string(worst);
        return worst <= 1e-8;
      });
  add("elastica", "ODE second-derivative check (finite differences)",
      [](std::string& detail) {
        const OptimalShape shape = solve_mu(5.0);
        const ElasticaParams& p = shape.params;
        const double h = 1e-4;
        double worst = 0.0;
        for (int i = 1; i <= 20; ++i) {
          const double s = 0.9 * *shape.s1 * i / 20.0;
          const double kdd = (curvature_at(p, s + h) - 2 * curvature_at(p, s) +
                              curvature_at(p, s - h)) /
                             (h * h);
          const double k = curvature_at(p, s);
          worst = std::max(
              worst, std::abs(kdd - (-0.5 * k * k * k - p.lambda * k + p.mu)));
        }
        detail = "max defect " + std::to_string(worst);
        return worst <= 1e-5;
      });

  // ---- shooting ----
  add("shooting", "disk regime at mu in {0.5, 1, 2, 3}", [](std::string&) {
    for (double mu : {0.5, 1.0, 2.0, 3.0}) {
      const OptimalShape s = solve_mu(mu);
      if (s.mode != ShootingMode::disk_branch) return false;
      if (!approx(s.params.k_max, 1.0, 1e-8)) return false;
      if (!approx(s.params.lambda, mu - 0.5, 1e-8)) return false;
    }
    return true;
  });
  add("shooting", "mu=4 beats the stadium value 5*pi", [](std::string& detail) {
    const OptimalShape s = solve_mu(4.0);
    detail = "objective = " + std::to_string(s.objective);
    return s.segment_count() == 2 && s.objective < 5.0 * kPi;
  });
  add("shooting", "multiplier relation lambda = (2 mu A - E)/(2 pi)",
      [](std::string& detail) {
        double worst = 0.0;
        for (double mu : {2.0, 3.2, 4.0, 10.0}) {
          const OptimalShape s = solve_mu(mu);
          worst = std::max(
              worst,
              std::abs(s.params.lambda -
                       (2 * mu * s.f.area - s.f.elastic_energy) / (2 * kPi)));
        }
        detail = "max defect " + std::to_string(worst);
        return worst <= 1e-6;
      });
  add("shooting", "a-priori bound report passes on a solved sweep",
      [](std::string& detail) {
        const SweepTable t = sweep(1.0, 60.0, 12);
        for (const auto& r : t.rows)
          if (!r.converged || !r.bounds_ok) {
            detail = "row mu=" + std::to_string(r.mu);
            return false;
          }
        return t.all_converged();
      });

  // ---- diagram ----
  add("diagram", "disk rows on mu in [1, 3]", [](std::string&) {
    const SweepTable t = sweep(1.0, 3.0, 5);
    for (const auto& r : t.rows)
      if (!r.converged || !approx(r.x, 1.0, 1e-6) || !approx(r.y, 1.0, 1e-6))
        return false;
    return true;
  });
  add("diagram", "interior families match the support functionals",
      [](std::string&) {
        return interior_families(6, 8).size() == 40;  // throws on mismatch
      });
  add("diagram", "diagram point invariants (x<=1, y>=1, xy>=1)",
      [](std::string&) {
        const SweepTable t = sweep(1.0, 40.0, 10);
        for (const auto& r : t.rows) {
          if (!r.converged) return false;
          if (r.x > 1.0 + 1e-9 || r.y < 1.0 - 1e-9 || r.x * r.y < 1.0 - 1e-9)
            return false;
        }
        return true;
      });

  return checks;
}

int run_onset_check(double width) {
  const double mu_star = find_segment_onset(3.0, 4.0, width);
  std::printf("segment onset mu* = %.6f (reference 3.3425 +/- 0.01)\n",
              mu_star);
  const bool ok = std::abs(mu_star - 3.3425) <= 0.01;
  std::printf("[%s] onset bisection\n", ok ? "PASS" : "FAIL");
  return ok ? 0 : 1;
}

}  // namespace

int cmd_solve(const RunConfig& cfg) {
  Solver solver(solver_options(cfg));
  OptimalShape shape;
  try {
    shape = solver.solve(cfg.mu);
  } catch (const ConvergenceError& err) {
    std::fprintf(stderr,
                 "solve failed at mu=%g: %s (best k_max=%g lambda=%g "
                 "residual=%g after %d iterations)\n",
                 cfg.mu, err.what(), err.k_max, err.lambda, err.residual_norm,
                 err.iterations);
    return 1;
  }

  const std::string out = cfg.out.empty() ? "shape.csv" : cfg.out;
  if (!write_file(out, shape_csv(shape))) {
    std::fprintf(stderr, "cannot write %s\n", out.c_str());
    return 1;
  }
  write_file(json_path_for(out), shape.to_json_record() + "\n");
  if (!cfg.svg.empty()) write_file(cfg.svg, shape_svg(shape));

  std::printf(
      "mu=%.12g mode=%s k_max=%.12g lambda=%.12g A=%.12g E=%.12g "
      "objective=%.12g L=%.12g x=%.12g y=%.12g residual=%.3g\n",
      shape.mu, to_string(shape.mode), shape.params.k_max, shape.params.lambda,
      shape.f.area, shape.f.elastic_energy, shape.objective,
      shape.segment_length.value_or(0.0), shape.diagram.x, shape.diagram.y,
      shape.residual_norm);
  return 0;
}

int cmd_sweep(const RunConfig& cfg) {
  SweepOptions options;
  options.q = cfg.q;
  options.solver = solver_options(cfg);
  options.solver.mode_override = std::nullopt;  // sweep always auto-selects
  const SweepTable table = sweep(cfg.mu_min, cfg.mu_max, cfg.steps, options);

  const std::string out = cfg.out.empty() ? "diagram.csv" : cfg.out;
  if (!write_file(out, diagram_csv(table))) {
    std::fprintf(stderr, "cannot write %s\n", out.c_str());
    return 1;
  }
  if (!cfg.svg.empty())
    write_file(cfg.svg, diagram_svg(table, interior_families(8, 40)));

  int failed = 0;
  for (const auto& r : table.rows)
    if (!r.converged) ++failed;
  std::printf("%zu rows written to %s (%d non-convergent)\n",
              table.rows.size(), out.c_str(), failed);
  return failed == 0 ? 0 : 2;
}

int cmd_onset(const RunConfig& cfg) {
  const double mu_star = find_segment_onset(3.0, 4.0, cfg.onset_width);
  std::printf("segment onset mu* = %.6f\n", mu_star);
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  if (cfg.onset) return run_onset_check(cfg.onset_width);

  int failures = 0;
  int ran = 0;
  for (const auto& check : build_checks()) {
    if (!cfg.only.empty() && check.suite != cfg.only) continue;
    ++ran;
    std::string detail;
    bool ok = false;
    try {
      ok = check.run(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    std::printf("[%s] %s :: %s%s%s\n", ok ? "PASS" : "FAIL",
                check.suite.c_str(), check.name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
  }
  if (cfg.only.empty()) {
    ++ran;
    if (run_onset_check(cfg.onset_width) != 0) ++failures;
  }
  if (ran == 0) {
    std::fprintf(stderr, "no checks matched --only '%s'\n", cfg.only.c_str());
    return 1;
  }
  std::printf("%d/%d checks passed\n", ran - failures, ran);
  return failures == 0 ? 0 : 1;
}

}  // namespace elastica::tools
