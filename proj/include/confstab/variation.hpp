#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "confstab/zonal.hpp"

namespace confstab {

// Finite-difference verification of the first-variation closed forms along
// g_t = (1 + t f) g0 on the 3-sphere, in the hyperspherical chart
// (theta, phi, psi) with g0 = diag(1, sin^2 theta, sin^2 theta sin^2 phi).
// All spatial structure is analytic; only d/dt and the Christoffel gradients
// entering the curvature are differenced.

struct VariationCheckReport {
  double connection_rel_dev = 0.0;  // dGamma/dt vs the half-sum-of-df closed form
  double curvature_rel_dev = 0.0;   // dR/dt vs f R0 - (1/2) Ddf (x) g0
  double density_rel_dev = 0.0;     // d|R|^p/dt vs the scalar-curvature closed form
  std::size_t samples = 0;
};

namespace chart3 {

using Vec3 = std::array<double, 3>;
using Diag = std::array<double, 3>;
using Gamma = std::array<std::array<std::array<double, 3>, 3>, 3>;
using Four = std::array<double, 81>;

inline int fidx(int i, int j, int k, int l) { return ((i * 3 + j) * 3 + k) * 3 + l; }

inline Diag metric(const ZonalFunction& f, double t, const Vec3& x) {
  const double w = 1.0 + t * f.value(x[0]);
  const double s2 = std::sin(x[0]) * std::sin(x[0]);
  const double sp2 = std::sin(x[1]) * std::sin(x[1]);
  return {w, w * s2, w * s2 * sp2};
}

// dmetric[m][i] = d g_ii / d x_m
inline std::array<Diag, 3> dmetric(const ZonalFunction& f, double t, const Vec3& x) {
  const double w = 1.0 + t * f.value(x[0]);
  const double dw = t * f.dtheta(x[0]);
  const double st = std::sin(x[0]), ct = std::cos(x[0]);
  const double sp = std::sin(x[1]), cp = std::cos(x[1]);
  std::array<Diag, 3> d{};
  d[0] = {dw, dw * st * st + 2.0 * w * st * ct,
          (dw * st * st + 2.0 * w * st * ct) * sp * sp};
  d[1] = {0.0, 0.0, w * st * st * 2.0 * sp * cp};
  d[2] = {0.0, 0.0, 0.0};
  return d;
}

inline Gamma christoffel(const ZonalFunction& f, double t, const Vec3& x) {
  const Diag g = metric(f, t, x);
  const auto dg = dmetric(f, t, x);
  Gamma c{};
  for (int l = 0; l < 3; ++l)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        double v = 0.0;
        if (l == k) v += dg[j][l];
        if (l == j) v += dg[k][l];
        if (j == k) v -= dg[l][j];
        c[l][j][k] = 0.5 * v / g[l];
      }
  return c;
}

// 4th-order central stencil for dGamma/dx_m; the only spatial differencing.
inline std::array<Gamma, 3> dchristoffel(const ZonalFunction& f, double t, const Vec3& x,
                                         double h = 1e-3) {
  std::array<Gamma, 3> out{};
  for (int m = 0; m < 3; ++m) {
    Vec3 xp = x, xpp = x, xm = x, xmm = x;
    xp[m] += h;
    xpp[m] += 2.0 * h;
    xm[m] -= h;
    xmm[m] -= 2.0 * h;
    const Gamma cp = christoffel(f, t, xp);
    const Gamma cpp = christoffel(f, t, xpp);
    const Gamma cm = christoffel(f, t, xm);
    const Gamma cmm = christoffel(f, t, xmm);
    for (int l = 0; l < 3; ++l)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          out[m][l][j][k] =
              (-cpp[l][j][k] + 8.0 * cp[l][j][k] - 8.0 * cm[l][j][k] + cmm[l][j][k]) /
              (12.0 * h);
  }
  return out;
}

// Lowered coordinate components R_ijkl with R_1221 > 0 on the round sphere.
inline Four curvature(const ZonalFunction& f, double t, const Vec3& x) {
  const Diag g = metric(f, t, x);
  const Gamma c = christoffel(f, t, x);
  const auto dc = dchristoffel(f, t, x);
  Four r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          double up = dc[i][l][j][k] - dc[j][l][i][k];
          for (int m = 0; m < 3; ++m)
            up += c[l][i][m] * c[m][j][k] - c[l][j][m] * c[m][i][k];
          r[fidx(i, j, k, l)] = g[l] * up;
        }
  return r;
}

inline double norm_sq(const Four& r, const Diag& g) {
  double sum = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          const double v = r[fidx(i, j, k, l)];
          sum += v * v / (g[i] * g[j] * g[k] * g[l]);
        }
  return sum;
}

}  // namespace chart3

// Max deviation of the chart curvature at t = 0 from g_il g_jk - g_ik g_jl;
// a self-check of the chart machinery, not of any variation formula.
inline double chart_curvature_self_check(double theta) {
  const ZonalFunction f = zonal_eigenfunction(3, 1);
  const chart3::Vec3 x{theta, 1.0, 0.7};
  const chart3::Diag g = chart3::metric(f, 0.0, x);
  const chart3::Four r = chart3::curvature(f, 0.0, x);
  double dev = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          const double want = (i == l && j == k ? g[i] * g[j] : 0.0) -
                              (i == k && j == l ? g[i] * g[j] : 0.0);
          dev = std::max(dev, std::abs(r[chart3::fidx(i, j, k, l)] - want));
        }
  return dev;
}

inline std::vector<double> equatorial_band(int count = 8, double half_width = 0.3) {
  std::vector<double> out;
  for (int i = 0; i < count; ++i)
    out.push_back(M_PI / 2 + half_width * (2.0 * i - (count - 1)) / (count - 1));
  return out;
}

inline VariationCheckReport first_variation_identity_checks(
    const ZonalFunction& f, double p, const std::vector<double>& thetas) {
  if (f.n != 3)
    throw std::invalid_argument("identity checks are implemented on the 3-sphere");
  using namespace chart3;

  const double ht = 2e-3;  // t-step; one Richardson level on the central difference
  VariationCheckReport rep;
  rep.samples = thetas.size();

  double conn_dev = 0.0, conn_scale = 0.0;
  double curv_dev = 0.0, curv_scale = 0.0;
  double dens_dev = 0.0, dens_scale = 0.0;

  for (double theta : thetas) {
    const Vec3 x{theta, 1.0, 0.7};
    const Diag g0 = metric(f, 0.0, x);
    const Gamma c0 = christoffel(f, 0.0, x);
    const Vec3 df{f.dtheta(theta), 0.0, 0.0};

    // connection: lowered dGamma/dt against (1/2)(df g + df g - df g)
    {
      const auto dt_of = [&](double h) {
        const Gamma cp = christoffel(f, h, x);
        const Gamma cm = christoffel(f, -h, x);
        Gamma d{};
        for (int l = 0; l < 3; ++l)
          for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) d[l][j][k] = (cp[l][j][k] - cm[l][j][k]) / (2.0 * h);
        return d;
      };
      const Gamma da = dt_of(ht), db = dt_of(0.5 * ht);
      for (int m = 0; m < 3; ++m)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k) {
            const double fd = g0[m] * (4.0 * db[m][j][k] - da[m][j][k]) / 3.0;
            const double closed = 0.5 * (df[j] * (k == m ? g0[k] : 0.0) +
                                         df[k] * (j == m ? g0[j] : 0.0) -
                                         df[m] * (j == k ? g0[j] : 0.0));
            conn_dev = std::max(conn_dev, std::abs(fd - closed));
            conn_scale = std::max({conn_scale, std::abs(closed), 0.5 * std::abs(df[0]) * g0[m]});
          }
    }

    // curvature: dR/dt against f R0 - (1/2) Ddf (x) g0
    {
      Four ddf_kn{};
      Diag ddf{};  // coordinate Hessian of the radial f
      for (int j = 0; j < 3; ++j) {
        double v = (j == 0) ? f.d2theta(theta) : 0.0;
        for (int m = 0; m < 3; ++m) v -= c0[m][j][j] * df[m];
        ddf[j] = v;
      }
      const Four r0 = curvature(f, 0.0, x);
      Four closed{};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l) {
              const double kn = (i == l && j == k ? ddf[i] * g0[j] + ddf[j] * g0[i] : 0.0) -
                                (i == k && j == l ? ddf[i] * g0[j] + ddf[j] * g0[i] : 0.0);
              closed[fidx(i, j, k, l)] =
                  f.value(theta) * r0[fidx(i, j, k, l)] - 0.5 * kn;
            }
      const auto dr_of = [&](double h) {
        const Four rp = curvature(f, h, x);
        const Four rm = curvature(f, -h, x);
        Four d{};
        for (int a = 0; a < 81; ++a) d[a] = (rp[a] - rm[a]) / (2.0 * h);
        return d;
      };
      const Four da = dr_of(ht), db = dr_of(0.5 * ht);
      for (int a = 0; a < 81; ++a) {
        const double fd = (4.0 * db[a] - da[a]) / 3.0;
        curv_dev = std::max(curv_dev, std::abs(fd - closed[a]));
        curv_scale = std::max({curv_scale, std::abs(closed[a]),
                               std::abs(f.value(theta) * r0[a])});
      }
      curv_scale = std::max(curv_scale, std::abs(ddf[0]) * g0[1]);
    }

    // density: d|R(g_t)|^p/dt against 2(s/n) p |R|^{p-2} Delta f - p f |R|^p
    {
      const auto dens_of = [&](double t) {
        const Four r = curvature(f, t, x);
        const Diag g = metric(f, t, x);
        return std::pow(norm_sq(r, g), 0.5 * p);
      };
      const auto dd_of = [&](double h) { return (dens_of(h) - dens_of(-h)) / (2.0 * h); };
      const double fd = (4.0 * dd_of(0.5 * ht) - dd_of(ht)) / 3.0;
      const double nsq0 = 12.0;  // |R|^2 of the round 3-sphere
      const double s_over_n = 2.0;
      const double term_a =
          2.0 * s_over_n * p * std::pow(nsq0, 0.5 * (p - 2.0)) * f.lambda * f.value(theta);
      const double term_b = p * f.value(theta) * std::pow(nsq0, 0.5 * p);
      const double closed = term_a - term_b;
      dens_dev = std::max(dens_dev, std::abs(fd - closed));
      dens_scale = std::max({dens_scale, std::abs(closed), std::abs(term_a), std::abs(term_b),
                             p * std::pow(nsq0, 0.5 * p) * f.amplitude});
    }
  }

  rep.connection_rel_dev = conn_dev / conn_scale;
  rep.curvature_rel_dev = curv_dev / curv_scale;
  rep.density_rel_dev = dens_dev / dens_scale;
  return rep;
}

}  // namespace confstab
