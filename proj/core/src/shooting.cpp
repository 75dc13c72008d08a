#include "elastica/shooting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "elastica/errors.hpp"
#include "elastica/quadrature.hpp"
#include "elastica/special_functions.hpp"

namespace elastica {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

// Degenerate (constant-curvature) parameter set; used for the disk branch
// where lambda = mu - 1/2 may be negative and build_params would refuse it.
ElasticaParams disk_params(double mu, int q) {
  ElasticaParams p;
  p.mu = mu;
  p.lambda = mu - 0.5;
  p.k_max = 1.0;
  p.k_min = 1.0;
  p.first_integral_c = 0.25 + p.lambda - 2.0 * mu;
  p.r0_sq = (p.lambda * p.lambda + p.first_integral_c) / (mu * mu);
  p.q = q;
  p.degenerate = true;
  return p;
}

double arc_energy_integral(const ElasticaParams& p, double s_end, int power) {
  return integrate(
      [&p, power](double s) {
        const double k = curvature_at(p, s);
        double v = k;
        for (int i = 1; i < power; ++i) v *= k;
        return v;
      },
      0.0, s_end, 1e-12, 1e-12);
}

// Enclosed area as (1/2) closed-int (x y' - y x') ds via Simpson, with the
// analytic tangent (cos theta, sin theta); an order of magnitude tighter
// than the inscribed-polygon shoelace at the same grid.
double enclosed_area(const ThetaFunction& tf, const Polyline& poly) {
  const std::size_t n = tf.grid.size() - 1;
  const double h = tf.perimeter / static_cast<double>(n);
  auto g = [&](std::size_t i) {
    return poly.vertices[i][0] * std::sin(tf.theta[i]) -
           poly.vertices[i][1] * std::cos(tf.theta[i]);
  };
  double sum = g(0) + g(n);
  for (std::size_t i = 1; i < n; ++i) sum += (i % 2 ? 4.0 : 2.0) * g(i);
  return 0.5 * (sum * h / 3.0);
}

struct LmOutcome {
  double k_max = 0.0;
  double lambda = 0.0;
  Residual residual;
  double rnorm = std::numeric_limits<double>::infinity();
  int iterations = 0;
  bool converged = false;
};

// Damped least squares on a 2x2 system with forward-difference Jacobian.
// The residual callback returns nullopt for infeasible parameters, which is
// treated like a rejected step.
template <class Fn>
LmOutcome levenberg_marquardt(Fn&& fn, double k0, double l0, double tol,
                              int max_iterations) {
  LmOutcome out;
  out.k_max = k0;
  out.lambda = l0;
  auto res = fn(k0, l0);
  if (!res) return out;
  out.residual = *res;
  out.rnorm = res->norm();

  double damping = 1e-3;
  for (out.iterations = 0; out.iterations < max_iterations; ++out.iterations) {
    if (out.rnorm <= tol) {
      out.converged = true;
      return out;
    }

    const double hk = 1e-7 * std::max(std::abs(out.k_max), 1.0);
    const double hl = 1e-7 * std::max(std::abs(out.lambda), 1.0);
    const auto rk = fn(out.k_max + hk, out.lambda);
    const auto rl = fn(out.k_max, out.lambda + hl);
    if (!rk || !rl) break;
    const double j11 = (rk->r1 - out.residual.r1) / hk;
    const double j21 = (rk->r2 - out.residual.r2) / hk;
    const double j12 = (rl->r1 - out.residual.r1) / hl;
    const double j22 = (rl->r2 - out.residual.r2) / hl;

    const double a11 = j11 * j11 + j21 * j21;
    const double a12 = j11 * j12 + j21 * j22;
    const double a22 = j12 * j12 + j22 * j22;
    const double g1 = j11 * out.residual.r1 + j21 * out.residual.r2;
    const double g2 = j12 * out.residual.r1 + j22 * out.residual.r2;

    bool stepped = false;
    while (damping <= 1e14) {
      const double m11 = a11 * (1.0 + damping);
      const double m22 = a22 * (1.0 + damping);
      const double det = m11 * m22 - a12 * a12;
      if (det != 0.0 && std::isfinite(det)) {
        const double dk = (-g1 * m22 + g2 * a12) / det;
        const double dl = (-g2 * m11 + g1 * a12) / det;
        const auto trial = fn(out.k_max + dk, out.lambda + dl);
        if (trial && trial->norm() < out.rnorm) {
          out.k_max += dk;
          out.lambda += dl;
          out.residual = *trial;
          out.rnorm = trial->norm();
          damping = std::max(damping / 10.0, 1e-14);
          stepped = true;
          break;
        }
      }
      damping *= 10.0;
    }
    if (!stepped) break;
  }
  out.converged = out.rnorm <= tol;
  return out;
}

}  // namespace

const char* to_string(ShootingMode mode) {
  switch (mode) {
    case ShootingMode::disk_branch:
      return "disk";
    case ShootingMode::strictly_convex:
      return "strict";
    case ShootingMode::with_segments:
      return "segments";
  }
  return "?";
}

double Residual::norm() const { return std::hypot(r1, r2); }

Residual shooting_residual(double k_max, double lambda, double mu, int q,
                           ShootingMode mode) {
  if (q < 1) throw std::domain_error("shooting_residual: q must be >= 1");
  if (mode == ShootingMode::disk_branch) {
    return {mu - lambda * k_max - 0.5 * k_max * k_max * k_max, k_max - 1.0};
  }

  const ElasticaParams p = build_params(mu, lambda, k_max, q);
  if (p.degenerate)
    throw InconsistentParametersError(
        "shooting_residual: parameters are degenerate; use the disk branch");
  const double quarter = kPi / (2.0 * q);

  if (mode == ShootingMode::strictly_convex) {
    const double r1 = 2.0 * complete_elliptic_k(p.m) - p.omega * quarter;
    const double r2 = theta_integral(p, quarter) - quarter;
    return {r1, r2};
  }

  const auto s1 = first_zero(p, quarter);
  if (!s1)
    throw ModeMismatchError(
        "shooting_residual: curvature never vanishes before pi/(2q); use the "
        "strictly convex system");
  const double r1 = theta_integral(p, *s1) - quarter;
  const double r2 =
      (2.0 / mu) * std::sqrt(std::max(p.first_integral_c, 0.0)) + 2.0 * *s1 -
      kPi / q;
  return {r1, r2};
}

AssembledCurve assemble_shape(const ElasticaParams& params, ShootingMode mode,
                              std::optional<double> s1, double mu, int q,
                              int grid_size) {
  if (mode == ShootingMode::with_segments && !s1)
    throw std::invalid_argument("assemble_shape: segment mode requires s1");
  if (grid_size < 64) throw std::invalid_argument("assemble_shape: grid too small");
  if (std::abs(params.mu - mu) > 1e-12 * std::max(1.0, mu))
    throw std::invalid_argument("assemble_shape: mu disagrees with params.mu");
  if (grid_size % 2 != 0) ++grid_size;  // Simpson needs an even interval count

  const double tile = kPi / q;
  const double seg_len =
      (mode == ShootingMode::with_segments) ? tile - 2.0 * *s1 : 0.0;

  auto k_at = [&](double s) {
    return boundary_curvature(params, mode, s1, q, s);
  };

  const int n = grid_size;
  const double h = kTwoPi / n;
  std::vector<double> k(n + 1);
  for (int i = 0; i <= n; ++i) k[i] = k_at(i * h);

  AssembledCurve curve;
  curve.tf.perimeter = kTwoPi;
  curve.tf.grid.resize(n + 1);
  for (int i = 0; i <= n; ++i) curve.tf.grid[i] = i * h;

  if (mode == ShootingMode::with_segments) {
    // k' jumps at the arc/segment junctions, which ruins Simpson stencils
    // that straddle them; integrate theta piece by piece instead, anchoring
    // each junction with the adaptive closed-form integral.  Tile layout:
    // arc [0, s1], segment [s1, s1+L], mirrored arc [s1+L, T], 2q tiles.
    const double arc_turn = theta_integral(params, *s1);
    std::vector<double> breaks{0.0};
    std::vector<double> break_theta{0.0};
    for (int t = 0; t < 2 * q; ++t) {
      const double s0 = t * tile;
      const double th0 = break_theta.back();
      breaks.insert(breaks.end(),
                    {s0 + *s1, s0 + *s1 + seg_len, s0 + tile});
      break_theta.insert(break_theta.end(),
                         {th0 + arc_turn, th0 + arc_turn,
                          th0 + 2.0 * arc_turn});
    }

    curve.tf.theta.assign(n + 1, 0.0);
    for (std::size_t piece = 0; piece + 1 < breaks.size(); ++piece) {
      const double a = breaks[piece];
      const double b = breaks[piece + 1];
      // nodes with a < i*h <= b; node 0 is the initial condition
      const auto first =
          static_cast<std::size_t>(std::floor(a / h)) + 1;
      const auto last = std::min(static_cast<std::size_t>(n),
                                 static_cast<std::size_t>(std::floor(b / h + 1e-9)));
      if (first > last) continue;
      const double anchor =
          break_theta[piece] + integrate(k_at, a, first * h, 1e-12, 1e-12);
      const std::span<const double> block(&k[first], last - first + 1);
      const std::vector<double> partial = cumulative_simpson(block, h);
      for (std::size_t i = first; i <= last; ++i)
        curve.tf.theta[i] = anchor + partial[i - first];
    }
    curve.tf.theta[n] = break_theta.back();
  } else {
    // strictly convex and disk branches are smooth on the whole range
    curve.tf.theta = cumulative_simpson(k, h);
  }
  curve.turning = curve.tf.theta.back() - curve.tf.theta.front();
  curve.segment_length = seg_len;

  curve.poly = reconstruct_polyline(curve.tf, &curve.closure_residual);
  if (curve.closure_residual > 1e-4)
    throw AssemblyError("assemble_shape: boundary fails to close (residual " +
                        std::to_string(curve.closure_residual) + ")");
  return curve;
}

double boundary_curvature(const ElasticaParams& params, ShootingMode mode,
                          std::optional<double> s1, int q, double s) {
  switch (mode) {
    case ShootingMode::disk_branch:
      return params.k_max;
    case ShootingMode::strictly_convex:
      // the closed form carries the tile periodicity itself
      return curvature_at(params, s);
    case ShootingMode::with_segments: {
      if (!s1)
        throw std::invalid_argument("boundary_curvature: segment mode requires s1");
      const double tile = kPi / q;
      double u = std::fmod(s, tile);
      if (u < 0.0) u += tile;
      if (u <= *s1) return curvature_at(params, u);
      if (u >= tile - *s1) return curvature_at(params, tile - u);
      return 0.0;
    }
  }
  return 0.0;
}

int OptimalShape::segment_count() const {
  if (mode != ShootingMode::with_segments) return 0;
  if (segment_length.value_or(0.0) <= 1e-9) return 0;
  return 2 * q;
}

std::string OptimalShape::to_json_record() const {
  nlohmann::json j;
  j["mu"] = mu;
  j["q"] = q;
  j["mode"] = to_string(mode);
  j["objective"] = objective;
  j["residual_norm"] = residual_norm;
  j["functionals"] = {{"area", f.area},
                      {"perimeter", f.perimeter},
                      {"elastic_energy", f.elastic_energy}};
  j["diagram"] = {{"x", diagram.x}, {"y", diagram.y}};
  if (s1) j["s1"] = *s1;
  if (segment_length) j["segment_length"] = *segment_length;
  j["params"] = {{"mu", params.mu},
                 {"lambda", params.lambda},
                 {"k_max", params.k_max},
                 {"k_min", params.k_min},
                 {"first_integral_c", params.first_integral_c},
                 {"sigma", params.sigma},
                 {"delta", params.delta},
                 {"gamma", params.gamma},
                 {"alpha", params.alpha},
                 {"beta", params.beta},
                 {"omega", params.omega},
                 {"m", params.m},
                 {"r0_sq", params.r0_sq},
                 {"q", params.q},
                 {"degenerate", params.degenerate}};
  return j.dump(2);
}

bool BoundsReport::all_passed() const {
  for (const auto& e : entries)
    if (e.applicable && !e.passed) return false;
  return true;
}

BoundsReport check_bounds(const OptimalShape& shape) {
  BoundsReport report;
  const double mu = shape.mu;
  const double a = shape.f.area;
  const double e = shape.f.elastic_energy;
  const double obj = shape.objective;
  const double slack_tol = 1e-9;

  auto add = [&report](const std::string& name, bool applicable, double slack,
                       double pass_floor) {
    report.entries.push_back({name, applicable, slack >= pass_floor, slack});
  };

  add("energy lower bound 2*pi*sqrt(mu) <= E + mu*A", mu > 1.0,
      obj - kTwoPi * std::sqrt(mu), -slack_tol);
  add("energy upper bound E + mu*A <= 3*pi*sqrt(mu) - pi", mu > 1.0,
      3.0 * kPi * std::sqrt(mu) - kPi - obj, -slack_tol);
  add("Gage product E*A >= pi^2", true, e * a - kPi * kPi, -slack_tol);

  const bool has_segments = shape.segment_count() > 0;
  add("segment regime E <= mu*A <= 2E", has_segments,
      std::min(mu * a - e, 2.0 * e - mu * a), -slack_tol);

  // (1/2) int k^3 over the whole boundary: 4q symmetric copies of the arc.
  double cubic = 0.0;
  if (shape.mode == ShootingMode::disk_branch) {
    cubic = kPi * shape.params.k_max * shape.params.k_max * shape.params.k_max;
  } else {
    const double s_end = shape.s1 ? *shape.s1 : kPi / (2.0 * shape.q);
    cubic = 2.0 * shape.q * arc_energy_integral(shape.params, s_end, 3);
  }
  const double cubic_defect =
      std::abs(kTwoPi * mu - kTwoPi * shape.params.lambda - cubic);
  add("cubic identity 2*pi*mu = 2*pi*lambda + (1/2) int k^3", true,
      1e-6 - cubic_defect, 0.0);

  add("energy cap E <= pi*sqrt(2*mu)", mu >= 1.0,
      kPi * std::sqrt(2.0 * mu) - e, -slack_tol);
  add("area floor mu*A >= (pi/4)(sqrt(1+16*mu) - 1)", mu >= 1.0,
      mu * a - 0.25 * kPi * (std::sqrt(1.0 + 16.0 * mu) - 1.0), -slack_tol);
  add("segments present for mu > 47.775", mu > 47.775,
      has_segments ? 1.0 : -1.0, 0.0);
  return report;
}

struct Solver::Candidate {
  ShootingMode mode = ShootingMode::disk_branch;
  double k_max = 1.0;
  double lambda = 0.0;
  double rnorm = 0.0;
  ElasticaParams params;
  std::optional<double> s1;
  double energy = kPi;
  double area = kPi;
  double objective = 0.0;
};

Solver::Solver(SolverOptions options) : options_(std::move(options)) {
  // q = 1 carries the minimizers; q = 2 is exposed for exploration only
  if (options_.q < 1 || options_.q > 2)
    throw std::domain_error("Solver: q must be 1 or 2");
}

void Solver::seed(double mu, double k_max, double lambda, ShootingMode mode) {
  std::lock_guard<std::mutex> lock(mutex_);
  cache_[mu] = WarmEntry{k_max, lambda, mode};
}

std::optional<Solver::WarmEntry> Solver::nearest_warm(double mu) const {
  std::lock_guard<std::mutex> lock(mutex_);
  if (cache_.empty()) return std::nullopt;
  auto it = cache_.lower_bound(mu);
  if (it == cache_.end()) return std::prev(it)->second;
  if (it == cache_.begin()) return it->second;
  const auto prev = std::prev(it);
  const double d_up = std::abs(std::log(it->first / mu));
  const double d_dn = std::abs(std::log(mu / prev->first));
  return (d_dn <= d_up) ? prev->second : it->second;
}

void Solver::remember(double mu, const OptimalShape& shape) {
  if (shape.mode == ShootingMode::disk_branch) return;
  std::lock_guard<std::mutex> lock(mutex_);
  cache_[mu] = WarmEntry{shape.params.k_max, shape.params.lambda, shape.mode};
}

std::optional<Solver::Candidate> Solver::try_mode(
    double mu, ShootingMode mode, const std::optional<WarmEntry>& warm) const {
  const int q = options_.q;
  auto residual_fn = [&](double k, double l) -> std::optional<Residual> {
    if (!(k > 0.0) || !(l >= 0.0) || !std::isfinite(k) || !std::isfinite(l))
      return std::nullopt;
    try {
      return shooting_residual(k, l, mu, q, mode);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };

  std::vector<std::pair<double, double>> seeds;
  if (warm) seeds.emplace_back(warm->k_max, warm->lambda);
  if (mode == ShootingMode::strictly_convex) {
    const double onset = 4.0 * q * q - 1.0;  // bifurcation from the disk
    const double bump = 0.3 * std::min(1.0, std::sqrt(std::max(mu - onset, 0.0)));
    seeds.emplace_back(1.05 + bump, std::max(mu - 0.5, 0.0));
  } else {
    static const double rho = rho_constant();
    seeds.emplace_back(std::sqrt(kPi * mu) * (1.0 + 0.4 * (q - 1)),
                       std::max(rho * std::sqrt(mu) / kTwoPi, 0.05));
  }

  for (const auto& [k0, l0] : seeds) {
    const LmOutcome out = levenberg_marquardt(residual_fn, k0, l0,
                                              options_.tolerance,
                                              options_.max_iterations);
    if (!out.converged) continue;

    ElasticaParams params;
    try {
      params = build_params(mu, out.lambda, out.k_max, q);
    } catch (const std::exception&) {
      continue;
    }
    if (params.degenerate) continue;

    Candidate c;
    c.mode = mode;
    c.k_max = out.k_max;
    c.lambda = out.lambda;
    c.rnorm = out.rnorm;
    c.params = params;

    double s_end = kPi / (2.0 * q);
    if (mode == ShootingMode::strictly_convex) {
      // a converged iterate that collapsed onto the disk or dips into
      // negative curvature is not an admissible strictly convex shape
      if (std::abs(out.k_max - 1.0) < 1e-7) continue;
      if (params.k_min < -1e-9) continue;
    } else {
      const auto s1 = first_zero(params, s_end);
      if (!s1) continue;
      c.s1 = *s1;
      s_end = *s1;
    }

    c.energy = 2.0 * q * arc_energy_integral(params, s_end, 2);
    c.area = (kTwoPi * out.lambda + c.energy) / (2.0 * mu);
    c.objective = c.energy + mu * c.area;
    return c;
  }
  return std::nullopt;
}

OptimalShape Solver::solve(double mu) { return solve_impl(mu, 0); }

OptimalShape Solver::solve_impl(double mu, int depth) {
  if (!(mu > 0.0)) throw std::domain_error("solve: mu must be positive");
  const int q = options_.q;
  const auto warm = nearest_warm(mu);

  Candidate disk;
  disk.mode = ShootingMode::disk_branch;
  disk.k_max = 1.0;
  disk.lambda = mu - 0.5;
  disk.params = disk_params(mu, q);
  disk.energy = kPi;
  disk.area = kPi;
  disk.objective = (1.0 + mu) * kPi;
  disk.rnorm =
      shooting_residual(1.0, mu - 0.5, mu, q, ShootingMode::disk_branch).norm();

  const auto allowed = [&](ShootingMode m) {
    return !options_.mode_override || *options_.mode_override == m;
  };

  std::optional<Candidate> strict, segments;
  if (allowed(ShootingMode::strictly_convex))
    strict = try_mode(mu, ShootingMode::strictly_convex, warm);
  if (allowed(ShootingMode::with_segments))
    segments = try_mode(mu, ShootingMode::with_segments, warm);

  // Continuation backoff: when neither curved branch converged from the
  // available seeds, populate the cache from a smaller mu and retry once.
  if (!strict && !segments && !options_.mode_override && mu > 2.0 &&
      depth < 40) {
    const OptimalShape smaller = solve_impl(0.7 * mu, depth + 1);
    if (smaller.mode != ShootingMode::disk_branch) {
      const auto retry_warm = nearest_warm(mu);
      strict = try_mode(mu, ShootingMode::strictly_convex, retry_warm);
      segments = try_mode(mu, ShootingMode::with_segments, retry_warm);
    }
  }

  // Ties break toward the disk, then the strictly convex branch.
  const Candidate* best = nullptr;
  if (!options_.mode_override || *options_.mode_override == ShootingMode::disk_branch)
    best = &disk;
  const double tie = 1e-12 * std::max(1.0, disk.objective);
  if (strict && (!best || strict->objective < best->objective - tie))
    best = &*strict;
  if (segments && (!best || segments->objective < best->objective - tie))
    best = &*segments;

  if (!best)
    throw ConvergenceError(
        "solve: requested mode did not converge at mu = " + std::to_string(mu),
        warm ? warm->k_max : 1.0, warm ? warm->lambda : mu - 0.5,
        std::numeric_limits<double>::infinity(), options_.max_iterations);

  OptimalShape shape;
  shape.mu = mu;
  shape.q = q;
  shape.mode = best->mode;
  shape.params = best->params;
  shape.s1 = best->s1;
  shape.residual_norm = best->rnorm;

  AssembledCurve curve = assemble_shape(shape.params, shape.mode, shape.s1, mu,
                                        q, options_.grid_size);
  if (shape.mode == ShootingMode::with_segments)
    shape.segment_length = curve.segment_length;
  shape.tf = std::move(curve.tf);
  shape.poly = std::move(curve.poly);

  // Energy from the closed form, area from the reconstructed boundary; the
  // multiplier relation lambda = (2 mu A - E)/(2 pi) then stays a genuine
  // cross-check.
  shape.f.elastic_energy = best->energy;
  shape.f.area = enclosed_area(shape.tf, shape.poly);
  shape.f.perimeter = shape.tf.perimeter;
  shape.objective = shape.f.elastic_energy + mu * shape.f.area;
  shape.diagram.x = shape.f.area / kPi;
  shape.diagram.y = shape.f.elastic_energy / kPi;
  char tag[64];
  std::snprintf(tag, sizeof tag, "solved mu=%.12g", mu);
  shape.diagram.source = tag;

  remember(mu, shape);
  return shape;
}

OptimalShape solve_mu(double mu, int q) {
  SolverOptions options;
  options.q = q;
  Solver solver(options);
  return solver.solve(mu);
}

}  // namespace elastica
