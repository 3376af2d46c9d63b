#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace confstab {

// Root data with the inner product left in the ambient Euclidean coordinates;
// Casimir values are normalized by the adjoint representation, which makes
// them Laplace eigenvalues for the -Killing metric.
struct RootSystem {
  std::string label;
  int rank = 0;
  std::vector<Eigen::VectorXd> simple;
  std::vector<Eigen::VectorXd> positive;
  Eigen::VectorXd rho;
  std::vector<Eigen::VectorXd> fundamental;
  Eigen::VectorXd highest_root;
  double adjoint_norm = 0.0;  // <theta, theta + 2 rho>
};

namespace detail {

inline std::vector<Eigen::VectorXd> simple_roots_for(const std::string& label, int& rank_out) {
  if (label.size() < 2) throw std::invalid_argument("bad root system label: " + label);
  const char type = label[0];
  std::vector<Eigen::VectorXd> simple;
  auto e = [](int dim, int i) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
    v(i) = 1.0;
    return v;
  };
  if (type == 'A' || type == 'B' || type == 'C' || type == 'D') {
    const int r = std::stoi(label.substr(1));
    rank_out = r;
    if (type == 'A') {
      if (r < 1) throw std::invalid_argument("A_r needs r >= 1");
      for (int i = 0; i < r; ++i) simple.push_back(e(r + 1, i) - e(r + 1, i + 1));
    } else if (type == 'B') {
      if (r < 2) throw std::invalid_argument("B_r needs r >= 2");
      for (int i = 0; i + 1 < r; ++i) simple.push_back(e(r, i) - e(r, i + 1));
      simple.push_back(e(r, r - 1));
    } else if (type == 'C') {
      if (r < 1) throw std::invalid_argument("C_r needs r >= 1");
      for (int i = 0; i + 1 < r; ++i) simple.push_back(e(r, i) - e(r, i + 1));
      simple.push_back(2.0 * e(r, r - 1));
    } else {
      if (r < 3) throw std::invalid_argument("D_r needs r >= 3");
      for (int i = 0; i + 1 < r; ++i) simple.push_back(e(r, i) - e(r, i + 1));
      simple.push_back(e(r, r - 2) + e(r, r - 1));
    }
    return simple;
  }
  if (label == "E6") {
    rank_out = 6;
    Eigen::VectorXd a1(8);
    a1 << 0.5, -0.5, -0.5, -0.5, -0.5, -0.5, -0.5, 0.5;
    simple.push_back(a1);
    simple.push_back(e(8, 0) + e(8, 1));
    simple.push_back(e(8, 1) - e(8, 0));
    simple.push_back(e(8, 2) - e(8, 1));
    simple.push_back(e(8, 3) - e(8, 2));
    simple.push_back(e(8, 4) - e(8, 3));
    return simple;
  }
  if (label == "F4") {
    rank_out = 4;
    simple.push_back(e(4, 1) - e(4, 2));
    simple.push_back(e(4, 2) - e(4, 3));
    simple.push_back(e(4, 3));
    Eigen::VectorXd a4(4);
    a4 << 0.5, -0.5, -0.5, -0.5;
    simple.push_back(a4);
    return simple;
  }
  throw std::invalid_argument("unsupported root system label: " + label);
}

inline bool contains_vec(const std::vector<Eigen::VectorXd>& set, const Eigen::VectorXd& v) {
  for (const auto& w : set)
    if ((w - v).lpNorm<Eigen::Infinity>() < 1e-9) return true;
  return false;
}

}  // namespace detail

inline RootSystem build_root_system(const std::string& label) {
  RootSystem rs;
  rs.label = label;
  rs.simple = detail::simple_roots_for(label, rs.rank);
  const int dim = static_cast<int>(rs.simple[0].size());

  // Weyl orbit of the simple roots under simple reflections = all roots.
  std::vector<Eigen::VectorXd> roots = rs.simple;
  for (size_t head = 0; head < roots.size(); ++head) {
    const Eigen::VectorXd v = roots[head];
    for (const auto& a : rs.simple) {
      const Eigen::VectorXd refl = v - (2.0 * v.dot(a) / a.dot(a)) * a;
      if (!detail::contains_vec(roots, refl)) roots.push_back(refl);
    }
  }

  // Positivity read off from simple-root coordinates.
  Eigen::MatrixXd smat(dim, rs.rank);
  for (int j = 0; j < rs.rank; ++j) smat.col(j) = rs.simple[j];
  const auto qr = smat.colPivHouseholderQr();
  rs.rho = Eigen::VectorXd::Zero(dim);
  double max_height = -1.0;
  for (const auto& r : roots) {
    const Eigen::VectorXd coeff = qr.solve(r);
    if ((smat * coeff - r).lpNorm<Eigen::Infinity>() > 1e-8)
      throw std::runtime_error("root outside simple-root span");
    const double height = coeff.sum();
    if (height > 1e-9) {
      rs.positive.push_back(r);
      rs.rho += 0.5 * r;
      if (height > max_height) {
        max_height = height;
        rs.highest_root = r;
      }
    }
  }

  // Fundamental weights from the simple-root Gram matrix.
  Eigen::MatrixXd gram(rs.rank, rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) gram(i, j) = rs.simple[i].dot(rs.simple[j]);
  for (int i = 0; i < rs.rank; ++i) {
    Eigen::VectorXd d = Eigen::VectorXd::Zero(rs.rank);
    d(i) = 0.5 * rs.simple[i].dot(rs.simple[i]);
    const Eigen::VectorXd x = gram.ldlt().solve(d);
    rs.fundamental.push_back(smat * x);
  }

  rs.adjoint_norm = rs.highest_root.dot(rs.highest_root) + 2.0 * rs.highest_root.dot(rs.rho);
  return rs;
}

// Largest deviation of 2<a_i,a_j>/<a_j,a_j> from the nearest integer; a sane
// build reproduces the Cartan matrix exactly up to round-off.
inline double cartan_matrix_residual(const RootSystem& rs) {
  double worst = 0.0;
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) {
      const double v = 2.0 * rs.simple[i].dot(rs.simple[j]) / rs.simple[j].dot(rs.simple[j]);
      worst = std::max(worst, std::abs(v - std::round(v)));
    }
  return worst;
}

inline Eigen::VectorXd weight_from_coords(const RootSystem& rs, const std::vector<int>& coords) {
  if (static_cast<int>(coords.size()) != rs.rank)
    throw std::invalid_argument("weight coordinate count does not match rank");
  Eigen::VectorXd w = Eigen::VectorXd::Zero(rs.fundamental[0].size());
  for (int i = 0; i < rs.rank; ++i) w += static_cast<double>(coords[i]) * rs.fundamental[i];
  return w;
}

// Casimir eigenvalue <w, w+2rho> normalized so the adjoint representation
// gets exactly 1.
inline double casimir(const RootSystem& rs, const std::vector<int>& weight_coords) {
  for (int k : weight_coords)
    if (k < 0) throw std::invalid_argument("casimir requires a dominant weight");
  const Eigen::VectorXd w = weight_from_coords(rs, weight_coords);
  return (w.dot(w) + 2.0 * w.dot(rs.rho)) / rs.adjoint_norm;
}

}  // namespace confstab
