#include "elastica/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <stdexcept>
#include <string>
#include <thread>

#include "elastica/errors.hpp"
#include "elastica/geometry.hpp"

namespace elastica {

namespace {

constexpr double kPi = 3.14159265358979323846;

int worker_count(int requested, int rows) {
  int n = requested;
  if (n <= 0) {
    if (const char* env = std::getenv("ELASTICA_THREADS")) n = std::atoi(env);
  }
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  return std::clamp(n, 1, std::max(rows, 1));
}

std::vector<double> make_grid(double mu_min, double mu_max, int steps,
                              bool geometric) {
  std::vector<double> grid(steps);
  for (int i = 0; i < steps; ++i) {
    const double t = (steps == 1) ? 0.0 : static_cast<double>(i) / (steps - 1);
    grid[i] = geometric ? mu_min * std::pow(mu_max / mu_min, t)
                        : mu_min + (mu_max - mu_min) * t;
  }
  return grid;
}

SweepRow row_from_shape(const OptimalShape& shape) {
  SweepRow row;
  row.mu = shape.mu;
  row.mode = shape.mode;
  row.converged = true;
  row.k_max = shape.params.k_max;
  row.lambda = shape.params.lambda;
  row.s1 = shape.s1.value_or(0.0);
  row.segment_length = shape.segment_length.value_or(0.0);
  row.area = shape.f.area;
  row.energy = shape.f.elastic_energy;
  row.objective = shape.objective;
  row.x = shape.diagram.x;
  row.y = shape.diagram.y;
  row.residual_norm = shape.residual_norm;
  row.bounds_ok = check_bounds(shape).all_passed();
  row.params = shape.params;
  return row;
}

void fill_rows(Solver& solver, const std::vector<double>& grid, int begin,
               int end, std::vector<SweepRow>& rows) {
  for (int i = begin; i < end; ++i) {
    const double mu = grid[i];
    try {
      rows[i] = row_from_shape(solver.solve(mu));
    } catch (const std::exception&) {
      // retry once after a half-step solve to refresh the warm start
      try {
        if (i > begin) solver.solve(std::sqrt(grid[i - 1] * mu));
        rows[i] = row_from_shape(solver.solve(mu));
      } catch (const ConvergenceError& err) {
        rows[i].mu = mu;
        rows[i].converged = false;
        rows[i].k_max = err.k_max;
        rows[i].lambda = err.lambda;
        rows[i].residual_norm = err.residual_norm;
      } catch (const std::exception&) {
        rows[i].mu = mu;
        rows[i].converged = false;
      }
    }
  }
}

}  // namespace

bool SweepTable::all_converged() const {
  for (const auto& r : rows)
    if (!r.converged) return false;
  return true;
}

SweepTable sweep(double mu_min, double mu_max, int steps,
                 const SweepOptions& options) {
  if (!(mu_min > 0.0) || !(mu_max > mu_min))
    throw std::domain_error("sweep: need 0 < mu_min < mu_max");
  if (steps < 2) throw std::domain_error("sweep: steps must be >= 2");

  const std::vector<double> grid =
      make_grid(mu_min, mu_max, steps, options.geometric_grid);

  SolverOptions solver_options = options.solver;
  solver_options.q = options.q;

  // Phase 1: serial coarse continuation.
  Solver coarse(solver_options);
  struct Seed {
    double mu, k_max, lambda;
    ShootingMode mode;
  };
  std::vector<Seed> seeds;
  const int stride = std::max(1, steps / 8);
  for (int i = 0; i < steps; i += stride) {
    try {
      const OptimalShape shape = coarse.solve(grid[i]);
      if (shape.mode != ShootingMode::disk_branch)
        seeds.push_back({shape.mu, shape.params.k_max, shape.params.lambda,
                         shape.mode});
    } catch (const std::exception&) {
      // phase 2 retries every row anyway
    }
  }

  // Phase 2: contiguous chunks, one private solver per worker; the output
  // is a function of the phase-1 seeds only, not of scheduling.
  std::vector<SweepRow> rows(steps);
  const int workers = worker_count(options.threads, steps);
  const int chunk = (steps + workers - 1) / workers;
  std::vector<std::thread> pool;
  std::vector<std::unique_ptr<Solver>> solvers;
  for (int w = 0; w < workers; ++w) {
    solvers.push_back(std::make_unique<Solver>(solver_options));
    for (const auto& s : seeds) solvers.back()->seed(s.mu, s.k_max, s.lambda, s.mode);
  }
  for (int w = 0; w < workers; ++w) {
    const int begin = w * chunk;
    const int end = std::min(steps, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(fill_rows, std::ref(*solvers[w]), std::cref(grid), begin,
                      end, std::ref(rows));
  }
  for (auto& t : pool) t.join();

  SweepTable table;
  table.rows = std::move(rows);
  return table;
}

double find_segment_onset(double lo, double hi, double width) {
  if (!(lo > 0.0) || !(hi > lo) || !(width > 0.0))
    throw std::domain_error("find_segment_onset: bad bracket");

  Solver solver;
  auto has_segments = [&solver](double mu) {
    return solver.solve(mu).segment_count() > 0;
  };
  if (has_segments(lo) || !has_segments(hi))
    throw std::invalid_argument(
        "find_segment_onset: bracket invalid (need no segments at lo, "
        "segments at hi)");
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    (has_segments(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<DiagramPoint> interior_families(int n_max, int samples_per_n) {
  if (n_max < 2) throw std::domain_error("interior_families: n_max must be >= 2");
  if (samples_per_n < 2)
    throw std::domain_error("interior_families: need at least 2 samples");

  std::vector<DiagramPoint> points;
  points.reserve(static_cast<std::size_t>(n_max - 1) * samples_per_n);
  for (int n = 2; n <= n_max; ++n) {
    const double n2m1 = static_cast<double>(n) * n - 1.0;
    const double a_cap = 0.95 / n2m1;
    for (int j = 0; j < samples_per_n; ++j) {
      const double a = a_cap * j / (samples_per_n - 1);
      const double x = 1.0 - 0.5 * n2m1 * a * a;
      const double y = 1.0 / std::sqrt(1.0 - n2m1 * n2m1 * a * a);

      std::vector<double> cos_coeffs(n, 0.0);
      cos_coeffs[n - 1] = a;
      const SupportBody body(1.0, std::move(cos_coeffs), std::vector<double>(n, 0.0));
      const Functionals f = functionals_from_support(body);
      if (std::abs(f.area / kPi - x) > 1e-8 ||
          std::abs(f.elastic_energy / kPi - y) > 1e-8)
        throw std::logic_error(
            "interior_families: closed form disagrees with the support "
            "functionals");

      DiagramPoint p;
      p.x = x;
      p.y = y;
      char tag[64];
      std::snprintf(tag, sizeof tag, "family(n=%d,a=%.12g)", n, a);
      p.source = tag;
      points.push_back(std::move(p));
    }
  }
  return points;
}

AsymptoteMetrics asymptote_metrics(Solver& solver, double mu) {
  const OptimalShape shape = solver.solve(mu);
  AsymptoteMetrics metrics;
  metrics.e_over_sqrt_mu = shape.f.elastic_energy / std::sqrt(mu);
  metrics.a_times_sqrt_mu = shape.f.area * std::sqrt(mu);
  metrics.xy_product = shape.diagram.x * shape.diagram.y;
  return metrics;
}

AsymptoteMetrics asymptote_metrics(double mu) {
  Solver solver;
  return asymptote_metrics(solver, mu);
}

}  // namespace elastica
