#pragma once

#include <cmath>
#include <stdexcept>

namespace confstab {

namespace detail {

// Gegenbauer C_k^alpha by the three-term recurrence; stable for the small k
// used here.
inline double gegenbauer(int k, double alpha, double x) {
  if (k < 0) return 0.0;
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * alpha * x;
  for (int j = 2; j <= k; ++j) {
    const double next = (2.0 * x * (j + alpha - 1.0) * cur - (j + 2.0 * alpha - 2.0) * prev) / j;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace detail

// Zonal Laplace eigenfunction on the round n-sphere of curvature 1:
// f(theta) = amplitude * C_k^{(n-1)/2}(cos theta), Delta f = lambda f with
// lambda = k(k+n-1) in the positive-spectrum convention Delta f = -tr(Ddf).
struct ZonalFunction {
  int n = 3;
  int k = 1;
  double lambda = 3.0;
  double amplitude = 1.0;

  double alpha() const { return 0.5 * (n - 1); }

  double value(double theta) const {
    return amplitude * detail::gegenbauer(k, alpha(), std::cos(theta));
  }
  // d/dx C_k^a = 2a C_{k-1}^{a+1}
  double dtheta(double theta) const {
    return -amplitude * std::sin(theta) * 2.0 * alpha() *
           detail::gegenbauer(k - 1, alpha() + 1.0, std::cos(theta));
  }
  double d2theta(double theta) const {
    const double x = std::cos(theta);
    const double a = alpha();
    const double d1 = 2.0 * a * detail::gegenbauer(k - 1, a + 1.0, x);
    const double d2 = 4.0 * a * (a + 1.0) * detail::gegenbauer(k - 2, a + 2.0, x);
    const double s = std::sin(theta);
    return amplitude * (s * s * d2 - x * d1);
  }
  // f'(theta) cot(theta) = -cos(theta) dC/dx(cos theta): finite at the poles
  double dtheta_cot(double theta) const {
    const double x = std::cos(theta);
    return -amplitude * x * 2.0 * alpha() *
           detail::gegenbauer(k - 1, alpha() + 1.0, x);
  }

  ZonalFunction scaled(double c) const {
    ZonalFunction out = *this;
    out.amplitude *= c;
    return out;
  }
};

inline ZonalFunction zonal_eigenfunction(int n, int k) {
  if (n < 2) throw std::invalid_argument("zonal_eigenfunction needs n >= 2");
  if (k < 1) throw std::invalid_argument("zonal_eigenfunction needs k >= 1");
  ZonalFunction f;
  f.n = n;
  f.k = k;
  f.lambda = static_cast<double>(k) * (k + n - 1);
  return f;
}

// f'' + (n-1) cot(theta) f' + lambda f; vanishes for an exact eigenfunction.
inline double radial_laplacian_residual(const ZonalFunction& f, double theta) {
  const double cot = std::cos(theta) / std::sin(theta);
  return f.d2theta(theta) + (f.n - 1) * cot * f.dtheta(theta) + f.lambda * f.value(theta);
}

}  // namespace confstab
