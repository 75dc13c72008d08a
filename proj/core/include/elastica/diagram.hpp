#ifndef ELASTICA_DIAGRAM_HPP
#define ELASTICA_DIAGRAM_HPP

#include <vector>

#include "elastica/diagram_point.hpp"
#include "elastica/shooting.hpp"

namespace elastica {

// One solved penalization value.  s1 and segment_length are 0 on rows
// without segments; `converged` is false for rows that failed even after a
// halved-step retry (their numeric fields are then best-effort).
struct SweepRow {
  double mu = 0.0;
  ShootingMode mode = ShootingMode::disk_branch;
  bool converged = false;
  double k_max = 0.0;
  double lambda = 0.0;
  double s1 = 0.0;
  double segment_length = 0.0;
  double area = 0.0;
  double energy = 0.0;
  double objective = 0.0;
  double x = 0.0;
  double y = 0.0;
  double residual_norm = 0.0;
  bool bounds_ok = false;
  ElasticaParams params;
};

struct SweepTable {
  std::vector<SweepRow> rows;
  bool all_converged() const;
};

struct SweepOptions {
  int q = 1;
  bool geometric_grid = true;
  // 0: use ELASTICA_THREADS, falling back to the hardware concurrency.
  int threads = 0;
  SolverOptions solver;
};

// Solve the minimization on a mu grid.  Phase 1 walks a coarse subgrid
// serially to build warm starts; phase 2 fills all rows in contiguous
// chunks, one worker per chunk, so the output is independent of the thread
// count.
SweepTable sweep(double mu_min, double mu_max, int steps,
                 const SweepOptions& options = {});

// Bisection on the solved mode; returns the penalization mu* at which
// straight segments first appear on the optimal boundary.  Requires no
// segments at lo and segments at hi.
double find_segment_onset(double lo = 3.0, double hi = 4.0,
                          double width = 1e-3);

// Closed-form diagram curves of the one-harmonic bodies h = 1 + a cos(nt):
//   x(a; n) = 1 - (n^2-1) a^2 / 2,  y(a; n) = 1 / sqrt(1 - (n^2-1)^2 a^2),
// each point cross-checked against the support-function functionals within
// 1e-8.  These curves fill the diagram interior and accumulate on the
// half-line x = 1 as n grows.
std::vector<DiagramPoint> interior_families(int n_max, int samples_per_n);

struct AsymptoteMetrics {
  double e_over_sqrt_mu = 0.0;
  double a_times_sqrt_mu = 0.0;
  double xy_product = 0.0;
};

// Large-mu scaling diagnostics of the solved shape; both E/sqrt(mu) and
// A*sqrt(mu) approach rho_constant() as mu grows.
AsymptoteMetrics asymptote_metrics(double mu);
AsymptoteMetrics asymptote_metrics(Solver& solver, double mu);

}  // namespace elastica

#endif  // ELASTICA_DIAGRAM_HPP
