#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "confstab/curvature_tensor.hpp"

namespace confstab {

using Cmat = Eigen::MatrixXcd;

enum class AlgebraFamily { su, sp, so };

inline std::string family_name(AlgebraFamily f) {
  switch (f) {
    case AlgebraFamily::su: return "su";
    case AlgebraFamily::sp: return "sp";
    case AlgebraFamily::so: return "so";
  }
  return "?";
}

// Orthonormal basis of a compact matrix Lie algebra under <X,Y> = -B(X,Y),
// where the Killing form is B(X,Y) = killing_coeff * Re tr(XY) for the
// defining matrix realization.
struct LieAlgebraBasis {
  AlgebraFamily family;
  int q = 0;
  int dim = 0;
  double killing_coeff = 0.0;
  std::vector<Cmat> basis;                          // orthonormal under -B
  std::vector<std::vector<std::vector<double>>> c;  // [e_i,e_j] = sum_k c[i][j][k] e_k

  double inner(const Cmat& x, const Cmat& y) const {
    return -killing_coeff * (x * y).trace().real();
  }
};

namespace detail {

inline Cmat unit(int n, int r, int cidx, std::complex<double> v) {
  Cmat m = Cmat::Zero(n, n);
  m(r, cidx) = v;
  return m;
}

inline std::vector<Cmat> su_raw(int q) {
  const std::complex<double> i1(0.0, 1.0);
  std::vector<Cmat> out;
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) {
      out.push_back(unit(q, i, j, 1.0) - unit(q, j, i, 1.0));
      out.push_back(unit(q, i, j, i1) + unit(q, j, i, i1));
    }
  for (int k = 0; k + 1 < q; ++k)
    out.push_back(unit(q, k, k, i1) - unit(q, k + 1, k + 1, i1));
  return out;
}

inline std::vector<Cmat> so_raw(int q) {
  std::vector<Cmat> out;
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) out.push_back(unit(q, i, j, 1.0) - unit(q, j, i, 1.0));
  return out;
}

// Compact sp(q) inside su(2q): X = [[A, B], [-conj(B), conj(A)]] with
// A anti-hermitian and B complex symmetric.
inline std::vector<Cmat> sp_raw(int q) {
  const std::complex<double> i1(0.0, 1.0);
  const int n = 2 * q;
  std::vector<Cmat> out;
  auto embed_a = [&](const Cmat& a) {
    Cmat m = Cmat::Zero(n, n);
    m.topLeftCorner(q, q) = a;
    m.bottomRightCorner(q, q) = a.conjugate();
    return m;
  };
  auto embed_b = [&](const Cmat& b) {
    Cmat m = Cmat::Zero(n, n);
    m.topRightCorner(q, q) = b;
    m.bottomLeftCorner(q, q) = -b.conjugate();
    return m;
  };
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) {
      out.push_back(embed_a(unit(q, i, j, 1.0) - unit(q, j, i, 1.0)));
      out.push_back(embed_a(unit(q, i, j, i1) + unit(q, j, i, i1)));
    }
  for (int k = 0; k < q; ++k) out.push_back(embed_a(unit(q, k, k, i1)));
  for (int i = 0; i < q; ++i)
    for (int j = i; j < q; ++j) {
      Cmat s = unit(q, i, j, 1.0);
      if (i != j) s += unit(q, j, i, 1.0);
      out.push_back(embed_b(s));
      out.push_back(embed_b(i1 * s));
    }
  return out;
}

inline std::vector<Cmat> gram_schmidt(const std::vector<Cmat>& raw, double coeff) {
  auto ip = [&](const Cmat& x, const Cmat& y) { return -coeff * (x * y).trace().real(); };
  std::vector<Cmat> out;
  for (const Cmat& x : raw) {
    Cmat y = x;
    for (const Cmat& e : out) y -= ip(e, y) * e;
    const double nm = std::sqrt(std::max(ip(y, y), 0.0));
    if (nm > 1e-8) out.push_back(y / nm);
  }
  return out;
}

inline std::vector<std::vector<std::vector<double>>> structure_constants(
    const std::vector<Cmat>& e, double coeff) {
  auto ip = [&](const Cmat& x, const Cmat& y) { return -coeff * (x * y).trace().real(); };
  const int d = static_cast<int>(e.size());
  std::vector c(d, std::vector(d, std::vector<double>(d, 0.0)));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const Cmat br = e[i] * e[j] - e[j] * e[i];
      for (int k = 0; k < d; ++k) {
        const double v = ip(br, e[k]);
        c[i][j][k] = v;
        c[j][i][k] = -v;
      }
    }
  return c;
}

}  // namespace detail

inline LieAlgebraBasis build_lie_algebra(AlgebraFamily family, int q) {
  LieAlgebraBasis a;
  a.family = family;
  a.q = q;
  std::vector<Cmat> raw;
  switch (family) {
    case AlgebraFamily::su:
      if (q < 2) throw std::invalid_argument("su(q) needs q >= 2");
      raw = detail::su_raw(q);
      a.killing_coeff = 2.0 * q;
      break;
    case AlgebraFamily::sp:
      if (q < 1) throw std::invalid_argument("sp(q) needs q >= 1");
      raw = detail::sp_raw(q);
      a.killing_coeff = 2.0 * q + 2.0;
      break;
    case AlgebraFamily::so:
      if (q < 3) throw std::invalid_argument("so(q) needs q >= 3");
      if (q == 4) throw std::invalid_argument("so(4) is not simple");
      raw = detail::so_raw(q);
      a.killing_coeff = q - 2.0;
      break;
  }
  a.basis = detail::gram_schmidt(raw, a.killing_coeff);
  a.dim = static_cast<int>(a.basis.size());
  const int expected = family == AlgebraFamily::su   ? q * q - 1
                       : family == AlgebraFamily::sp ? q * (2 * q + 1)
                                                     : q * (q - 1) / 2;
  if (a.dim != expected) throw std::runtime_error("basis construction lost rank");
  a.c = detail::structure_constants(a.basis, a.killing_coeff);
  return a;
}

// Largest residual of [e_i,e_j] against its expansion in the basis;
// nonzero residual means the basis does not span the algebra.
inline double bracket_closure_residual(const LieAlgebraBasis& a) {
  double worst = 0.0;
  for (int i = 0; i < a.dim; ++i)
    for (int j = i + 1; j < a.dim; ++j) {
      Cmat r = a.basis[i] * a.basis[j] - a.basis[j] * a.basis[i];
      for (int k = 0; k < a.dim; ++k) r -= a.c[i][j][k] * a.basis[k];
      worst = std::max(worst, std::sqrt(std::max(a.inner(r, r), 0.0)));
    }
  return worst;
}

inline double jacobi_residual(const LieAlgebraBasis& a) {
  double worst = 0.0;
  const auto& c = a.c;
  for (int i = 0; i < a.dim; ++i)
    for (int j = i + 1; j < a.dim; ++j)
      for (int k = j + 1; k < a.dim; ++k)
        for (int l = 0; l < a.dim; ++l) {
          double s = 0.0;
          for (int m = 0; m < a.dim; ++m)
            s += c[i][j][m] * c[m][k][l] + c[j][k][m] * c[m][i][l] + c[k][i][m] * c[m][j][l];
          worst = std::max(worst, std::abs(s));
        }
  return worst;
}

// <[X,Y],Z> + <Y,[X,Z]> = 0; with an orthonormal basis this is total
// antisymmetry of the structure constants in the last two slots.
inline double ad_invariance_residual(const LieAlgebraBasis& a) {
  double worst = 0.0;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      for (int k = 0; k < a.dim; ++k)
        worst = std::max(worst, std::abs(a.c[i][j][k] + a.c[i][k][j]));
  return worst;
}

// Killing form recomputed from the bracket table, B(e_i,e_j) = tr(ad e_i ad e_j);
// must equal -delta_ij for a -B orthonormal basis.
inline Eigen::MatrixXd killing_from_ad(const LieAlgebraBasis& a) {
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(a.dim, a.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      double s = 0.0;
      for (int l = 0; l < a.dim; ++l)
        for (int m = 0; m < a.dim; ++m) s += a.c[i][l][m] * a.c[j][m][l];
      b(i, j) = s;
    }
  return b;
}

// Bi-invariant curvature of the group with metric -B. The plane-curvature
// sign is fixed so that span{X,Y} has curvature +|[X,Y]|^2/4.
inline CurvatureTensor group_curvature(const LieAlgebraBasis& a) {
  const int n = a.dim;
  std::vector<Cmat> br(static_cast<size_t>(n) * n, Cmat::Zero(a.basis[0].rows(), a.basis[0].cols()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      br[static_cast<size_t>(i) * n + j] = a.basis[i] * a.basis[j] - a.basis[j] * a.basis[i];
  CurvatureTensor r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          if (k == l) continue;
          r.at(i, j, k, l) =
              0.25 * a.inner(br[static_cast<size_t>(i) * n + j], br[static_cast<size_t>(l) * n + k]);
        }
    }
  return r;
}

}  // namespace confstab
