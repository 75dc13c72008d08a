#ifndef ELASTICA_ERRORS_HPP
#define ELASTICA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace elastica {

// Body is not strictly convex where strict convexity is required
// (the elastic energy integral needs a positive radius of curvature).
class NonConvexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// h'' + h = phi has no 2pi-periodic solution (resonant first harmonic).
class SolvabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A tangent-angle function violates the admissible-class constraints
// (monotonicity, total turning, closure).
class ConstraintViolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// (mu, lambda, k_max) does not define an admissible curvature orbit.
class InconsistentParametersError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A segment-mode residual was requested but the curvature never vanishes;
// the caller should switch to the strictly convex system.
class ModeMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Assembling the boundary from a solved system produced an inconsistent
// curve (closure residual too large).
class AssemblyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Nonlinear solve failed; carries the best iterate for diagnostics.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double k_max, double lambda,
                   double residual_norm, int iterations)
      : std::runtime_error(what),
        k_max(k_max),
        lambda(lambda),
        residual_norm(residual_norm),
        iterations(iterations) {}

  double k_max;
  double lambda;
  double residual_norm;
  int iterations;
};

}  // namespace elastica

#endif  // ELASTICA_ERRORS_HPP
