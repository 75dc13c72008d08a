#ifndef ELASTICA_QUADRATURE_HPP
#define ELASTICA_QUADRATURE_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace elastica {

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
inline constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
void gauss_kronrod_15(F& f, double a, double b, double& value, double& error) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  const double f_mid = f(mid);
  double kronrod = kKronrodWeights[7] * f_mid;
  double gauss = kGaussWeights[3] * f_mid;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double sum = f(mid - dx) + f(mid + dx);
    kronrod += kKronrodWeights[i] * sum;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * sum;
  }
  value = kronrod * half;
  error = std::abs((kronrod - gauss) * half);
}

}  // namespace detail

// Adaptive Gauss-Kronrod integration of f over [a, b].
template <class F>
double integrate(F&& f, double a, double b, double abs_tol = 1e-12,
                 double rel_tol = 1e-12, int max_depth = 48) {
  if (a == b) return 0.0;

  struct Interval {
    double a, b, value, error;
    int depth;
  };

  double value, error;
  detail::gauss_kronrod_15(f, a, b, value, error);
  std::vector<Interval> stack{{a, b, value, error, 0}};
  double total = value;
  double total_error = error;

  while (total_error > std::max(abs_tol, rel_tol * std::abs(total))) {
    // split the interval with the largest error estimate
    std::size_t worst = 0;
    for (std::size_t i = 1; i < stack.size(); ++i)
      if (stack[i].error > stack[worst].error) worst = i;
    Interval iv = stack[worst];
    if (iv.depth >= max_depth || iv.error == 0.0) break;

    const double mid = 0.5 * (iv.a + iv.b);
    Interval left{iv.a, mid, 0, 0, iv.depth + 1};
    Interval right{mid, iv.b, 0, 0, iv.depth + 1};
    detail::gauss_kronrod_15(f, left.a, left.b, left.value, left.error);
    detail::gauss_kronrod_15(f, right.a, right.b, right.value, right.error);

    total += left.value + right.value - iv.value;
    total_error += left.error + right.error - iv.error;
    stack[worst] = left;
    stack.push_back(right);
  }
  return total;
}

// Cumulative integral of uniformly spaced samples; F[0] = 0 and
// F[i] ~ integral of f over [x0, x0 + i*h].  Composite Simpson with a
// quadratic end rule at odd indices (fourth-order accurate).
inline std::vector<double> cumulative_simpson(std::span<const double> f,
                                              double h) {
  const std::size_t n = f.size();
  std::vector<double> out(n, 0.0);
  if (n < 2) return out;
  if (n == 2) {
    out[1] = 0.5 * h * (f[0] + f[1]);
    return out;
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (i % 2 == 0) {
      out[i] = out[i - 2] + h / 3.0 * (f[i - 2] + 4.0 * f[i - 1] + f[i]);
    } else if (i + 1 < n) {
      out[i] = out[i - 1] + h / 12.0 * (5.0 * f[i - 1] + 8.0 * f[i] - f[i + 1]);
    } else {
      out[i] = out[i - 1] + h / 12.0 * (-f[i - 2] + 8.0 * f[i - 1] + 5.0 * f[i]);
    }
  }
  return out;
}

// Monotone cubic interpolant (Fritsch-Carlson limited slopes).  Used to
// invert strictly increasing maps such as t -> s(t).
class MonotoneCubic {
 public:
  MonotoneCubic(std::vector<double> x, std::vector<double> y)
      : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 2 || n != y_.size())
      throw std::invalid_argument("MonotoneCubic: need matching arrays, n >= 2");
    std::vector<double> d(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const double dx = x_[i + 1] - x_[i];
      if (dx <= 0.0)
        throw std::invalid_argument("MonotoneCubic: x must increase strictly");
      d[i] = (y_[i + 1] - y_[i]) / dx;
    }
    slopes_.resize(n);
    slopes_[0] = d[0];
    slopes_[n - 1] = d[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (d[i - 1] * d[i] <= 0.0) {
        slopes_[i] = 0.0;
      } else {
        const double w1 = 2.0 * (x_[i + 1] - x_[i]) + (x_[i] - x_[i - 1]);
        const double w2 = (x_[i + 1] - x_[i]) + 2.0 * (x_[i] - x_[i - 1]);
        slopes_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
      }
    }
  }

  double operator()(double x) const {
    std::size_t lo = 0, hi = x_.size() - 1;
    if (x <= x_.front()) {
      hi = 1;
    } else if (x >= x_.back()) {
      lo = x_.size() - 2;
    } else {
      while (hi - lo > 1) {
        const std::size_t mid = (lo + hi) / 2;
        (x_[mid] <= x ? lo : hi) = mid;
      }
    }
    const double dx = x_[lo + 1] - x_[lo];
    const double t = (x - x_[lo]) / dx;
    const double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
    const double h10 = t * (1 - t) * (1 - t);
    const double h01 = t * t * (3 - 2 * t);
    const double h11 = t * t * (t - 1);
    return h00 * y_[lo] + h10 * dx * slopes_[lo] + h01 * y_[lo + 1] +
           h11 * dx * slopes_[lo + 1];
  }

 private:
  std::vector<double> x_, y_;
  std::vector<double> slopes_;
};

}  // namespace elastica

#endif  // ELASTICA_QUADRATURE_HPP
