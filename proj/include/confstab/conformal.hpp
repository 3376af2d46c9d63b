#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "confstab/curvature_tensor.hpp"
#include "confstab/stability.hpp"
#include "confstab/zonal.hpp"

namespace confstab {

// Conformal factor profile for g~ = e^{2u} g0 with u a function of colatitude.
// du_cot supplies u'(theta) cot(theta) with its analytic limit at the poles.
struct RadialConformalFactor {
  std::function<double(double)> u;
  std::function<double(double)> du;
  std::function<double(double)> d2u;
  std::function<double(double)> du_cot;
};

// Straight-line conformal path g_t = (1 + t f) g0 on the round n-sphere of
// curvature 1; admissible t keeps 1 + t f >= 1/2 everywhere.
struct ConformalPath {
  ZonalFunction f;
};

namespace detail {

inline const double* gl16_nodes() {
  static const double x[8] = {
      0.0950125098376374402, 0.2816035507792589132, 0.4580167776572273863,
      0.6178762444026437484, 0.7554044083550030339, 0.8656312023878317439,
      0.9445750230732325761, 0.9894009349916499326};
  return x;
}

inline const double* gl16_weights() {
  static const double w[8] = {
      0.1894506104550684963, 0.1826034150449235889, 0.1691565193950025382,
      0.1495959888165767320, 0.1246289712555338721, 0.0951585116824927848,
      0.0622535239386478929, 0.0271524594117540949};
  return w;
}

}  // namespace detail

// Total node count for composite 16-point Gauss-Legendre quadrature; override
// with CONFSTAB_QUAD_NODES (clamped to [64, 65536], rounded up to 16).
inline int quadrature_node_count() {
  int nodes = 512;
  if (const char* env = std::getenv("CONFSTAB_QUAD_NODES")) {
    try {
      nodes = std::stoi(env);
    } catch (...) {
      throw std::invalid_argument("CONFSTAB_QUAD_NODES is not an integer");
    }
  }
  nodes = std::clamp(nodes, 64, 65536);
  return ((nodes + 15) / 16) * 16;
}

inline std::vector<std::pair<double, double>> gauss_legendre_nodes(double a, double b,
                                                                   int total_nodes) {
  if (!(b > a)) throw std::invalid_argument("gauss_legendre_nodes needs b > a");
  if (total_nodes % 16 != 0 || total_nodes <= 0)
    throw std::invalid_argument("total_nodes must be a positive multiple of 16");
  const int panels = total_nodes / 16;
  const double* xs = detail::gl16_nodes();
  const double* ws = detail::gl16_weights();
  std::vector<std::pair<double, double>> out;
  out.reserve(total_nodes);
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    const double half = 0.5 * h;
    for (int i = 0; i < 8; ++i) {
      out.emplace_back(mid - half * xs[i], ws[i] * half);
      out.emplace_back(mid + half * xs[i], ws[i] * half);
    }
  }
  return out;
}

// Surface area of the unit (n-1)-sphere, the zonal volume weight.
inline double sphere_surface_area(int n) {
  return 2.0 * std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n);
}

inline RadialConformalFactor path_factor(const ZonalFunction& f, double t) {
  RadialConformalFactor u;
  u.u = [f, t](double th) { return 0.5 * std::log(1.0 + t * f.value(th)); };
  u.du = [f, t](double th) {
    return 0.5 * t * f.dtheta(th) / (1.0 + t * f.value(th));
  };
  u.d2u = [f, t](double th) {
    const double w = 1.0 + t * f.value(th);
    const double dw = t * f.dtheta(th);
    return 0.5 * (t * f.d2theta(th) * w - dw * dw) / (w * w);
  };
  u.du_cot = [f, t](double th) {
    return 0.5 * t * f.dtheta_cot(th) / (1.0 + t * f.value(th));
  };
  return u;
}

namespace detail {

// Curvature of e^{2u} g0 in an orthonormal frame of the new metric, for a
// radial factor on the curvature-1 sphere: R~ = e^{-2u} (R0 - id (x) T) with
// T = Ddu - du (x) du + (1/2)|du|^2 g0 and (x) the Kulkarni-Nomizu product.
inline CurvatureTensor conformal_curvature_at(int n, const RadialConformalFactor& u,
                                              double theta) {
  const double du = u.du(theta);
  const double t11 = u.d2u(theta) - 0.5 * du * du;
  const double taa = u.du_cot(theta) + 0.5 * du * du;
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
  t(0, 0) = t11;
  for (int a = 1; a < n; ++a) t(a, a) = taa;
  CurvatureTensor r = constant_curvature_tensor(n, 1.0);
  r -= kulkarni_nomizu(Eigen::MatrixXd::Identity(n, n), t);
  r *= std::exp(-2.0 * u.u(theta));
  return r;
}

}  // namespace detail

inline CurvatureTensor conformal_curvature(int n, const RadialConformalFactor& u,
                                           double theta) {
  if (theta < 1e-3 || theta > M_PI - 1e-3)
    throw std::domain_error("conformal_curvature: evaluation too close to a pole");
  return detail::conformal_curvature_at(n, u, theta);
}

namespace detail {

inline void check_admissible(const ConformalPath& path, double t,
                             const std::vector<std::pair<double, double>>& nodes) {
  double min_w = 1.0 + t * path.f.value(0.0);
  min_w = std::min(min_w, 1.0 + t * path.f.value(M_PI));
  for (const auto& [th, w] : nodes) min_w = std::min(min_w, 1.0 + t * path.f.value(th));
  if (min_w < 0.5)
    throw std::domain_error("conformal path leaves the admissible range 1 + t f >= 1/2");
}

}  // namespace detail

// R_p along the path: integral of |R(g_t)|^p dv_{g_t}, reduced to one
// dimension by zonality. Deterministic for a fixed node count.
inline double functional_value(const ConformalPath& path, double t, double p) {
  const int n = path.f.n;
  const auto nodes = gauss_legendre_nodes(0.0, M_PI, quadrature_node_count());
  detail::check_admissible(path, t, nodes);
  const RadialConformalFactor u = path_factor(path.f, t);
  const double area = sphere_surface_area(n);
  double sum = 0.0;
  for (const auto& [th, w] : nodes) {
    const CurvatureTensor r = detail::conformal_curvature_at(n, u, th);
    const double density = std::pow(r.norm_sq(), 0.5 * p);
    const double vol = std::pow(1.0 + t * path.f.value(th), 0.5 * n) *
                       std::pow(std::sin(th), n - 1);
    sum += w * density * vol;
  }
  return area * sum;
}

inline double zonal_norm_sq(const ZonalFunction& f) {
  const auto nodes = gauss_legendre_nodes(0.0, M_PI, quadrature_node_count());
  const double area = sphere_surface_area(f.n);
  double sum = 0.0;
  for (const auto& [th, w] : nodes) {
    const double v = f.value(th);
    sum += w * v * v * std::pow(std::sin(th), f.n - 1);
  }
  return area * sum;
}

inline double zonal_mean(const ZonalFunction& f) {
  const auto nodes = gauss_legendre_nodes(0.0, M_PI, quadrature_node_count());
  const double area = sphere_surface_area(f.n);
  double sum = 0.0;
  for (const auto& [th, w] : nodes) sum += w * f.value(th) * std::pow(std::sin(th), f.n - 1);
  return area * sum;
}

struct FdResult {
  double estimate = 0.0;
  double error_bar = 0.0;
};

// Central second difference with two Richardson levels over halving steps.
inline FdResult fd_second_derivative(const ConformalPath& path, double p,
                                     const std::vector<double>& steps = {1e-2, 5e-3,
                                                                         2.5e-3}) {
  if (steps.size() < 3) throw std::invalid_argument("need three halving steps");
  for (std::size_t i = 1; i < steps.size(); ++i)
    if (std::abs(steps[i - 1] - 2.0 * steps[i]) > 1e-15 * steps[0])
      throw std::invalid_argument("steps must halve");
  const double f0 = functional_value(path, 0.0, p);
  std::vector<double> s;
  for (double h : steps) {
    const double fp = functional_value(path, h, p);
    const double fm = functional_value(path, -h, p);
    s.push_back((fp - 2.0 * f0 + fm) / (h * h));
  }
  const double r1a = (4.0 * s[1] - s[0]) / 3.0;
  const double r1b = (4.0 * s[2] - s[1]) / 3.0;
  FdResult out;
  out.estimate = (16.0 * r1b - r1a) / 15.0;
  out.error_bar = std::abs(r1b - r1a);
  // round-off dominance: extrapolants spreading wider than the raw differences
  const double raw_spread = std::abs(s[0] - s[2]);
  if (out.error_bar > 100.0 * raw_spread + 1e-9 * std::abs(f0))
    throw std::runtime_error("second-difference extrapolation diverged (steps too small)");
  return out;
}

inline double fd_first_derivative(const ConformalPath& path, double p,
                                  const std::vector<double>& steps = {1e-2, 5e-3, 2.5e-3}) {
  if (steps.size() < 3) throw std::invalid_argument("need three halving steps");
  std::vector<double> d;
  for (double h : steps)
    d.push_back((functional_value(path, h, p) - functional_value(path, -h, p)) / (2.0 * h));
  const double r1a = (4.0 * d[1] - d[0]) / 3.0;
  const double r1b = (4.0 * d[2] - d[1]) / 3.0;
  return (16.0 * r1b - r1a) / 15.0;
}

// Hessian value predicted by the quadratic form for a unit-speed conformal
// direction f with Delta f = lambda f on the curvature-1 n-sphere:
// p |R|^{p-2} Q(lambda) ||f||^2.
inline double predicted_second_derivative(int n, double p, double lambda,
                                          double norm_sq_f) {
  const double s = static_cast<double>(n) * (n - 1);
  const double norm_sq_r = 2.0 * s;
  const HessianCoefficients h = coefficients(n, p, s, norm_sq_r);
  return p * std::pow(norm_sq_r, 0.5 * (p - 2.0)) * q_form(h, lambda) * norm_sq_f;
}

}  // namespace confstab
