#pragma once

#include <functional>
#include <vector>

#include "pipeflow/errors.hpp"

namespace pipeflow {

using ScalarFn = std::function<double(double)>;

/// Fixed-order Gauss-Legendre rule on [0,1], applied per panel on a uniform
/// composite subdivision. Nodes and weights are generated by Newton iteration
/// on the Legendre recurrence; the mapped weights sum to 1.
class Quadrature {
public:
  explicit Quadrature(int order = 16, int panels = 4);

  /// Average of h along the parameterized segment,
  ///   integral over xi in [0,1] of h(zL + (zR - zL) xi).
  /// A degenerate segment (zL == zR) returns h(zL) exactly.
  double line_average(const ScalarFn& h, double zL, double zR) const;

  /// Plain integral of f over [a,b] with the same composite rule.
  double integrate(const ScalarFn& f, double a, double b) const;

  int order() const { return static_cast<int>(nodes_.size()); }
  int panels() const { return panels_; }

private:
  std::vector<double> nodes_;    // on (0,1)
  std::vector<double> weights_;  // sum to 1
  int panels_;
};

/// Integral of f over [a,b], refining the composite Gauss-Legendre rule by
/// panel doubling until two successive levels agree to tol.
double integrate_to_tol(const ScalarFn& f, double a, double b, double tol);

/// Root of f on [lo,hi] given f(lo)*f(hi) <= 0. Bisection with secant
/// acceleration whenever the accelerated step stays inside the bracket;
/// the iterate never leaves [lo,hi]. Stops when |f(x)| <= tol or the
/// bracket width drops below tol*max(1,|x|).
double bracketed_root(const ScalarFn& f, double lo, double hi,
                      double tol = 1e-12);

/// Solution curve of an ODE stored as (xi, y, dy/dxi) samples with cubic
/// Hermite interpolation between them. xi is strictly monotone (either
/// direction); evaluating at a stored xi reproduces the stored state.
class DenseTrajectory {
public:
  struct Sample {
    double xi;
    std::vector<double> y;
    std::vector<double> dy;
  };

  DenseTrajectory() = default;

  void append(double xi, std::vector<double> y, std::vector<double> dy);

  std::vector<double> eval(double xi) const;

  /// Cubic Hermite between stored samples.
  static constexpr int kInterpolationOrder = 3;

  std::size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }
  const Sample& operator[](std::size_t i) const { return samples_[i]; }
  double front_xi() const { return samples_.front().xi; }
  double back_xi() const { return samples_.back().xi; }
  int dimension() const;

private:
  std::vector<Sample> samples_;
};

using OdeRhs =
    std::function<void(double xi, const std::vector<double>& y,
                       std::vector<double>& dydxi)>;

/// Adaptive Dormand-Prince 5(4) integration of dy/dxi = rhs(xi, y) from xi0
/// to xi1 (either direction), local error per step <= tol. Every accepted
/// step lands in the returned trajectory, so dense output is available on
/// the whole span. xi0 == xi1 yields the single-point trajectory.
DenseTrajectory integrate_ode(const OdeRhs& rhs, const std::vector<double>& y0,
                              double xi0, double xi1, double tol);

}  // namespace pipeflow
