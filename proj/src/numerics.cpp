#include "pipeflow/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace pipeflow {

namespace {

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on the
// three-term recurrence.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
}

}  // namespace

Quadrature::Quadrature(int order, int panels) : panels_(panels) {
  if (order < 1 || panels < 1)
    throw std::invalid_argument("Quadrature: order and panels must be >= 1");
  std::vector<double> x, w;
  gauss_legendre(order, x, w);
  nodes_.resize(order);
  weights_.resize(order);
  for (int i = 0; i < order; ++i) {
    nodes_[i] = 0.5 * (x[i] + 1.0);  // map [-1,1] -> [0,1]
    weights_[i] = 0.5 * w[i];
  }
}

double Quadrature::line_average(const ScalarFn& h, double zL, double zR) const {
  if (zL == zR) {
    const double v = h(zL);
    if (!std::isfinite(v))
      throw std::domain_error("line_average: non-finite integrand at xi=0");
    return v;
  }
  const double dz = zR - zL;
  double sum = 0.0;
  const double pw = 1.0 / panels_;
  for (int p = 0; p < panels_; ++p) {
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      const double xi = (p + nodes_[k]) * pw;
      const double v = h(zL + dz * xi);
      if (!std::isfinite(v))
        throw std::domain_error("line_average: non-finite integrand at xi=" +
                                std::to_string(xi));
      sum += weights_[k] * v;
    }
  }
  return sum * pw;
}

double Quadrature::integrate(const ScalarFn& f, double a, double b) const {
  return (b - a) * line_average(f, a, b);
}

double integrate_to_tol(const ScalarFn& f, double a, double b, double tol) {
  if (a == b) return 0.0;
  const Quadrature rule(16, 1);
  int panels = 1;
  double prev = 0.0;
  for (int level = 0; level < 22; ++level) {
    double sum = 0.0;
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p)
      sum += rule.integrate(f, a + p * h, a + (p + 1) * h);
    if (level > 0 && std::abs(sum - prev) <= tol * std::max(1.0, std::abs(sum)))
      return sum;
    prev = sum;
    panels *= 2;
  }
  throw std::runtime_error("integrate_to_tol: no convergence to requested tol");
}

double bracketed_root(const ScalarFn& f, double lo, double hi, double tol) {
  if (!(lo < hi)) throw BracketError("bracketed_root: requires lo < hi");
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0)
    throw BracketError("bracketed_root: no sign change on [" +
                       std::to_string(lo) + ", " + std::to_string(hi) + "]");
  double x = 0.5 * (a + b);
  for (int it = 0; it < 200; ++it) {
    // secant through the bracket endpoints, kept only if it lands inside
    double cand = b - fb * (b - a) / (fb - fa);
    if (!std::isfinite(cand) || cand <= a || cand >= b) cand = 0.5 * (a + b);
    x = cand;
    const double fx = f(x);
    if (std::abs(fx) <= tol) return x;
    if (fa * fx < 0.0) {
      b = x;
      fb = fx;
    } else {
      a = x;
      fa = fx;
    }
    if (b - a <= tol * std::max(1.0, std::abs(x))) return x;
    // force bisection if the secant stalls against one endpoint
    if (it % 2 == 1) {
      const double mid = 0.5 * (a + b);
      const double fm = f(mid);
      if (std::abs(fm) <= tol) return mid;
      if (fa * fm < 0.0) {
        b = mid;
        fb = fm;
      } else {
        a = mid;
        fa = fm;
      }
      x = mid;
      if (b - a <= tol * std::max(1.0, std::abs(x))) return 0.5 * (a + b);
    }
  }
  return x;
}

void DenseTrajectory::append(double xi, std::vector<double> y,
                             std::vector<double> dy) {
  if (!samples_.empty()) {
    if (y.size() != samples_.front().y.size())
      throw std::invalid_argument("DenseTrajectory: inconsistent dimension");
    const double prev = samples_.back().xi;
    const bool increasing = samples_.size() < 2
                                ? xi > prev
                                : samples_[1].xi > samples_[0].xi;
    if ((increasing && xi <= prev) || (!increasing && xi >= prev))
      throw std::invalid_argument("DenseTrajectory: xi must be strictly monotone");
  }
  samples_.push_back({xi, std::move(y), std::move(dy)});
}

int DenseTrajectory::dimension() const {
  return samples_.empty() ? 0 : static_cast<int>(samples_.front().y.size());
}

std::vector<double> DenseTrajectory::eval(double xi) const {
  if (samples_.empty())
    throw std::out_of_range("DenseTrajectory: empty trajectory");
  if (samples_.size() == 1) return samples_.front().y;

  const bool increasing = samples_.back().xi > samples_.front().xi;
  const double lo = increasing ? samples_.front().xi : samples_.back().xi;
  const double hi = increasing ? samples_.back().xi : samples_.front().xi;
  const double slack = 1e-9 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
  if (xi < lo - slack || xi > hi + slack)
    throw std::out_of_range("DenseTrajectory: xi outside stored range");
  xi = std::clamp(xi, lo, hi);

  auto cmp = [increasing](const Sample& s, double v) {
    return increasing ? s.xi < v : s.xi > v;
  };
  auto it = std::lower_bound(samples_.begin(), samples_.end(), xi, cmp);
  if (it == samples_.begin()) ++it;
  if (it == samples_.end()) --it;
  const Sample& s1 = *(it - 1);
  const Sample& s2 = *it;
  if (xi == s1.xi) return s1.y;
  if (xi == s2.xi) return s2.y;

  const double h = s2.xi - s1.xi;
  const double t = (xi - s1.xi) / h;
  const double t2 = t * t, t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1;
  const double h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2;
  const double h11 = t3 - t2;
  std::vector<double> out(s1.y.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = h00 * s1.y[i] + h10 * h * s1.dy[i] + h01 * s2.y[i] +
             h11 * h * s2.dy[i];
  return out;
}

namespace {

// Dormand-Prince 5(4) tableau
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                 a75 = -2187.0 / 6784, a76 = 11.0 / 84;
// y5 - y4 coefficients
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

}  // namespace

DenseTrajectory integrate_ode(const OdeRhs& rhs, const std::vector<double>& y0,
                              double xi0, double xi1, double tol) {
  const std::size_t n = y0.size();
  DenseTrajectory traj;

  std::vector<double> y = y0, k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n),
                      ytmp(n), ynew(n);
  rhs(xi0, y, k1);
  traj.append(xi0, y, k1);
  if (xi0 == xi1) return traj;

  const double dir = xi1 > xi0 ? 1.0 : -1.0;
  const double span = std::abs(xi1 - xi0);
  double xi = xi0;
  double h = dir * span / 100.0;

  for (int steps = 0; steps < 1000000; ++steps) {
    if (std::abs(h) < 1e-14 * std::max(1.0, span))
      throw IntegrationError("integrate_ode: step size underflow", xi);
    if ((xi + h - xi1) * dir > 0.0) h = xi1 - xi;

    for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
    rhs(xi + c2 * h, ytmp, k2);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    rhs(xi + c3 * h, ytmp, k3);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    rhs(xi + c4 * h, ytmp, k4);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    rhs(xi + c5 * h, ytmp, k5);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                            a64 * k4[i] + a65 * k5[i]);
    rhs(xi + h, ytmp, k6);
    for (std::size_t i = 0; i < n; ++i)
      ynew[i] = y[i] + h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] +
                            a75 * k5[i] + a76 * k6[i]);
    rhs(xi + h, ynew, k7);

    double errnorm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double err = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                              e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double sc = tol * (1.0 + std::max(std::abs(y[i]), std::abs(ynew[i])));
      errnorm += (err / sc) * (err / sc);
    }
    errnorm = std::sqrt(errnorm / n);

    if (errnorm <= 1.0) {
      xi += h;
      y = ynew;
      k1 = k7;  // FSAL
      traj.append(xi, y, k1);
      if (xi == xi1 || std::abs(xi - xi1) < 1e-15 * std::max(1.0, span)) break;
    }
    const double fac =
        std::clamp(0.9 * std::pow(std::max(errnorm, 1e-10), -0.2), 0.2, 5.0);
    h *= fac;
  }
  return traj;
}

}  // namespace pipeflow
