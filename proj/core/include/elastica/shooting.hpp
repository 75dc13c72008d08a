#ifndef ELASTICA_SHOOTING_HPP
#define ELASTICA_SHOOTING_HPP

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "elastica/closed_form.hpp"
#include "elastica/diagram_point.hpp"
#include "elastica/geometry.hpp"

namespace elastica {

// Which 2x2 system is being solved for (k_max, lambda) at fixed mu:
//   disk_branch      constant curvature (k = 1 at perimeter 2*pi),
//   strictly_convex  periodicity + quarter-turn conditions (case without
//                    segments),
//   with_segments    turning on [0, s1] + total-length condition (boundary
//                    contains 2q straight segments).
enum class ShootingMode { disk_branch, strictly_convex, with_segments };

const char* to_string(ShootingMode mode);

struct Residual {
  double r1 = 0.0;
  double r2 = 0.0;
  double norm() const;
};

// Residual of the selected system.  Throws ModeMismatchError when
// with_segments is requested but the curvature never vanishes on
// (0, pi/(2q)] (the caller should fall back to strictly_convex), and
// propagates parameter errors from build_params.
Residual shooting_residual(double k_max, double lambda, double mu, int q,
                           ShootingMode mode);

struct AssembledCurve {
  ThetaFunction tf;
  Polyline poly;
  double segment_length = 0.0;  // L, zero when there are no segments
  double closure_residual = 0.0;
  double turning = 0.0;  // theta(2*pi) - theta(0)
};

// Build the full boundary from one fundamental arc.  The closed-form
// curvature is extended by reflection across the segment (case b) or by its
// own periodicity (case a); the tile of length pi/q repeats 2q times.
// Throws AssemblyError when the reconstructed curve fails to close within
// 1e-4.
AssembledCurve assemble_shape(const ElasticaParams& params, ShootingMode mode,
                              std::optional<double> s1, double mu, int q,
                              int grid_size = 32768);

// Curvature of the assembled boundary at arclength s in [0, 2*pi]
// (closed form on arcs, zero on segments).
double boundary_curvature(const ElasticaParams& params, ShootingMode mode,
                          std::optional<double> s1, int q, double s);

// Solved minimizer of E + mu*A at perimeter 2*pi.
struct OptimalShape {
  double mu = 0.0;
  int q = 1;
  ShootingMode mode = ShootingMode::disk_branch;
  ElasticaParams params;
  std::optional<double> s1;              // first curvature zero (case b)
  std::optional<double> segment_length;  // L (case b)
  ThetaFunction tf;
  Polyline poly;
  Functionals f;
  double objective = 0.0;  // E + mu*A
  DiagramPoint diagram;
  double residual_norm = 0.0;

  int segment_count() const;
  // Structured text record with every closed-form parameter, for
  // reproducibility.
  std::string to_json_record() const;
};

struct BoundsReport {
  struct Entry {
    std::string name;
    bool applicable = true;
    bool passed = true;
    double slack = 0.0;  // margin by which the inequality holds (>= 0 pass)
  };
  std::vector<Entry> entries;
  bool all_passed() const;
};

// Evaluate the a-priori inequalities satisfied by optimal domains:
// energy bracket, Gage product, segment-regime sandwich, cubic moment
// identity, energy cap, area floor, and the large-mu segment guarantee.
BoundsReport check_bounds(const OptimalShape& shape);

struct SolverOptions {
  int q = 1;
  std::optional<ShootingMode> mode_override;
  double tolerance = 1e-10;  // residual norm target
  int max_iterations = 200;
  int grid_size = 32768;  // boundary assembly grid
};

// Shooting solver with a warm-start cache keyed by mu.  solve() is safe to
// call from multiple threads; the cache is the only shared state.
class Solver {
 public:
  explicit Solver(SolverOptions options = {});

  OptimalShape solve(double mu);

  // Inject a warm start (used to hand coarse continuation results to
  // per-worker solvers).
  void seed(double mu, double k_max, double lambda, ShootingMode mode);

  const SolverOptions& options() const { return options_; }

 private:
  struct WarmEntry {
    double k_max;
    double lambda;
    ShootingMode mode;
  };

  struct Candidate;

  OptimalShape solve_impl(double mu, int depth);
  std::optional<Candidate> try_mode(double mu, ShootingMode mode,
                                    const std::optional<WarmEntry>& warm) const;
  std::optional<WarmEntry> nearest_warm(double mu) const;
  void remember(double mu, const OptimalShape& shape);

  SolverOptions options_;
  mutable std::mutex mutex_;
  std::map<double, WarmEntry> cache_;
};

// One-off solve with a fresh solver (cold start + internal continuation).
OptimalShape solve_mu(double mu, int q = 1);

}  // namespace elastica

#endif  // ELASTICA_SHOOTING_HPP
