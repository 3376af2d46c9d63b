#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "confstab/curvature_tensor.hpp"
#include "confstab/lie_algebra.hpp"

namespace confstab {

// Cartan decomposition g = k + m carried by an adapted orthonormal basis of
// the ambient algebra: first the k vectors, then the m vectors.
struct SymmetricPair {
  LieAlgebraBasis ambient;   // basis replaced by the adapted one
  std::vector<int> k_indices;
  std::vector<int> m_indices;
};

namespace detail {

inline std::vector<Cmat> gram_schmidt_list(const std::vector<Cmat>& raw, double coeff) {
  return gram_schmidt(raw, coeff);
}

}  // namespace detail

// Split by an involutive automorphism theta: k is the +1 eigenspace, m the -1
// eigenspace. The adapted basis is re-orthonormalized within each part.
inline SymmetricPair split_by_involution(const LieAlgebraBasis& g,
                                         const std::function<Cmat(const Cmat&)>& theta) {
  std::vector<Cmat> k_raw, m_raw;
  for (const Cmat& x : g.basis) {
    k_raw.push_back(0.5 * (x + theta(x)));
    m_raw.push_back(0.5 * (x - theta(x)));
  }
  const std::vector<Cmat> kb = detail::gram_schmidt_list(k_raw, g.killing_coeff);
  const std::vector<Cmat> mb = detail::gram_schmidt_list(m_raw, g.killing_coeff);
  if (static_cast<int>(kb.size() + mb.size()) != g.dim)
    throw std::runtime_error("involution split lost rank");

  SymmetricPair p;
  p.ambient = g;
  p.ambient.basis.clear();
  for (const Cmat& x : kb) p.ambient.basis.push_back(x);
  for (const Cmat& x : mb) p.ambient.basis.push_back(x);
  p.ambient.c = detail::structure_constants(p.ambient.basis, g.killing_coeff);
  for (int i = 0; i < static_cast<int>(kb.size()); ++i) p.k_indices.push_back(i);
  for (int i = 0; i < static_cast<int>(mb.size()); ++i)
    p.m_indices.push_back(static_cast<int>(kb.size()) + i);
  return p;
}

// Largest bracket component violating [k,k] in k, [k,m] in m, [m,m] in k.
inline double cartan_relations_residual(const SymmetricPair& p) {
  const int dk = static_cast<int>(p.k_indices.size());
  const int d = p.ambient.dim;
  auto in_k = [&](int idx) { return idx < dk; };
  double worst = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int l = 0; l < d; ++l) {
        const bool target_in_k = (in_k(i) == in_k(j));
        if (in_k(l) != target_in_k) worst = std::max(worst, std::abs(p.ambient.c[i][j][l]));
      }
  return worst;
}

// Curvature of G/K with the -B|_m metric; sign fixed so that the plane
// span{X,Y} in m has curvature +|[X,Y]|^2.
inline CurvatureTensor quotient_curvature(const SymmetricPair& p) {
  const int n = static_cast<int>(p.m_indices.size());
  const auto& e = p.ambient.basis;
  std::vector<Cmat> br(static_cast<size_t>(n) * n, Cmat::Zero(e[0].rows(), e[0].cols()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Cmat& x = e[p.m_indices[i]];
      const Cmat& y = e[p.m_indices[j]];
      br[static_cast<size_t>(i) * n + j] = x * y - y * x;
    }
  CurvatureTensor r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          if (k == l) continue;
          r.at(i, j, k, l) = p.ambient.inner(br[static_cast<size_t>(i) * n + j],
                                             br[static_cast<size_t>(l) * n + k]);
        }
    }
  return r;
}

// SU(2m)/Sp(m): theta(X) = J conj(X) J^{-1} with J the standard symplectic form.
inline SymmetricPair su_over_sp_pair(int m) {
  if (m < 2) throw std::invalid_argument("SU(2m)/Sp(m) needs m >= 2");
  const LieAlgebraBasis g = build_lie_algebra(AlgebraFamily::su, 2 * m);
  Cmat j = Cmat::Zero(2 * m, 2 * m);
  j.topRightCorner(m, m) = Cmat::Identity(m, m);
  j.bottomLeftCorner(m, m) = -Cmat::Identity(m, m);
  const Cmat jinv = j.inverse();
  return split_by_involution(g, [j, jinv](const Cmat& x) { return j * x.conjugate() * jinv; });
}

// Sp(q+l)/(Sp(q) x Sp(l)): theta(X) = K X K with K = diag(I_q, -I_l, I_q, -I_l).
inline SymmetricPair sp_over_sp_sp_pair(int q, int l) {
  if (q < 1 || l < 1) throw std::invalid_argument("Sp(q+l)/Sp(q)xSp(l) needs q,l >= 1");
  const int m = q + l;
  const LieAlgebraBasis g = build_lie_algebra(AlgebraFamily::sp, m);
  Eigen::VectorXcd diag(2 * m);
  for (int i = 0; i < m; ++i) diag(i) = (i < q) ? 1.0 : -1.0;
  for (int i = 0; i < m; ++i) diag(m + i) = (i < q) ? 1.0 : -1.0;
  const Cmat k = diag.asDiagonal();
  return split_by_involution(g, [k](const Cmat& x) { return k * x * k; });
}

}  // namespace confstab
