#pragma once

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace confstab {

// Dense (0,4) curvature tensor in an orthonormal frame.
// Sign convention: R(e1,e2,e2,e1) is the sectional curvature of span{e1,e2},
// so constant curvature kappa means R_ijkl = kappa*(d_il d_jk - d_ik d_jl).
class CurvatureTensor {
 public:
  explicit CurvatureTensor(int n) : n_(n), r_(static_cast<size_t>(n) * n * n * n, 0.0) {
    assert(n >= 2);
  }

  int dim() const { return n_; }

  double operator()(int i, int j, int k, int l) const { return r_[idx(i, j, k, l)]; }
  double& at(int i, int j, int k, int l) { return r_[idx(i, j, k, l)]; }

  static CurvatureTensor constant_curvature(int n, double kappa) {
    CurvatureTensor r(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        r.at(i, j, j, i) += kappa;
        r.at(i, j, i, j) -= kappa;
      }
    return r;
  }

  // Largest violation among: antisymmetry in (i,j) and (k,l), pair symmetry,
  // and the first Bianchi identity.
  double max_symmetry_violation() const {
    double worst = 0.0;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k)
          for (int l = 0; l < n_; ++l) {
            const double v = (*this)(i, j, k, l);
            worst = std::max(worst, std::abs(v + (*this)(j, i, k, l)));
            worst = std::max(worst, std::abs(v + (*this)(i, j, l, k)));
            worst = std::max(worst, std::abs(v - (*this)(k, l, i, j)));
            worst = std::max(worst,
                             std::abs(v + (*this)(j, k, i, l) + (*this)(k, i, j, l)));
          }
    return worst;
  }

  bool is_algebraic(double tol = 1e-9) const { return max_symmetry_violation() <= tol; }

  // ric(x,y) = sum_i R(x, e_i, e_i, y)
  Eigen::MatrixXd ricci() const {
    Eigen::MatrixXd ric = Eigen::MatrixXd::Zero(n_, n_);
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        double s = 0.0;
        for (int i = 0; i < n_; ++i) s += (*this)(x, i, i, y);
        ric(x, y) = s;
      }
    return ric;
  }

  double scalar() const {
    double s = 0.0;
    for (int x = 0; x < n_; ++x)
      for (int i = 0; i < n_; ++i) s += (*this)(x, i, i, x);
    return s;
  }

  // Full four-index sum of squares.
  double norm_sq() const {
    double s = 0.0;
    for (double v : r_) s += v * v;
    return s;
  }

  // ring(x,y) = sum_{i,j,k} R(x,i,j,k) R(y,i,j,k); trace equals norm_sq().
  Eigen::MatrixXd ring() const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n_, n_);
    for (int x = 0; x < n_; ++x)
      for (int y = x; y < n_; ++y) {
        double s = 0.0;
        for (int i = 0; i < n_; ++i)
          for (int j = 0; j < n_; ++j)
            for (int k = 0; k < n_; ++k) s += (*this)(x, i, j, k) * (*this)(y, i, j, k);
        m(x, y) = s;
        m(y, x) = s;
      }
    return m;
  }

  double sectional(int i, int j) const {
    assert(i != j);
    return (*this)(i, j, j, i);
  }

  double einstein_deviation() const {
    Eigen::MatrixXd ric = ricci();
    const double mu = scalar() / n_;
    return (ric - mu * Eigen::MatrixXd::Identity(n_, n_)).cwiseAbs().maxCoeff();
  }

  CurvatureTensor& operator+=(const CurvatureTensor& o) {
    check_same_dim(o);
    for (size_t q = 0; q < r_.size(); ++q) r_[q] += o.r_[q];
    return *this;
  }
  CurvatureTensor& operator-=(const CurvatureTensor& o) {
    check_same_dim(o);
    for (size_t q = 0; q < r_.size(); ++q) r_[q] -= o.r_[q];
    return *this;
  }
  CurvatureTensor& operator*=(double c) {
    for (double& v : r_) v *= c;
    return *this;
  }

  friend CurvatureTensor operator+(CurvatureTensor a, const CurvatureTensor& b) { return a += b; }
  friend CurvatureTensor operator-(CurvatureTensor a, const CurvatureTensor& b) { return a -= b; }
  friend CurvatureTensor operator*(double c, CurvatureTensor a) { return a *= c; }

  double max_abs_diff(const CurvatureTensor& o) const {
    check_same_dim(o);
    double worst = 0.0;
    for (size_t q = 0; q < r_.size(); ++q) worst = std::max(worst, std::abs(r_[q] - o.r_[q]));
    return worst;
  }

 private:
  size_t idx(int i, int j, int k, int l) const {
    assert(i >= 0 && i < n_ && j >= 0 && j < n_ && k >= 0 && k < n_ && l >= 0 && l < n_);
    return ((static_cast<size_t>(i) * n_ + j) * n_ + k) * n_ + l;
  }
  void check_same_dim(const CurvatureTensor& o) const {
    if (o.n_ != n_) throw std::invalid_argument("curvature tensor dimension mismatch");
  }

  int n_;
  std::vector<double> r_;
};

inline CurvatureTensor constant_curvature_tensor(int n, double kappa) {
  if (n < 3) throw std::invalid_argument("constant_curvature_tensor needs n >= 3");
  return CurvatureTensor::constant_curvature(n, kappa);
}

// Report-only symmetry validation: names of violated invariants, empty when
// the tensor is algebraic within tol.
inline std::vector<std::string> validate_symmetries(const CurvatureTensor& r, double tol) {
  if (tol < 0) throw std::invalid_argument("tol must be nonnegative");
  const int n = r.dim();
  double anti12 = 0.0, anti34 = 0.0, pair = 0.0, bianchi = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double v = r(i, j, k, l);
          anti12 = std::max(anti12, std::abs(v + r(j, i, k, l)));
          anti34 = std::max(anti34, std::abs(v + r(i, j, l, k)));
          pair = std::max(pair, std::abs(v - r(k, l, i, j)));
          bianchi = std::max(bianchi, std::abs(v + r(i, k, l, j) + r(i, l, j, k)));
        }
  std::vector<std::string> bad;
  if (anti12 > tol) bad.push_back("antisymmetry_first_pair");
  if (anti34 > tol) bad.push_back("antisymmetry_second_pair");
  if (pair > tol) bad.push_back("pair_symmetry");
  if (bianchi > tol) bad.push_back("first_bianchi");
  return bad;
}

struct RicciScalar {
  Eigen::MatrixXd ricci;
  double s;
};

inline RicciScalar ricci_scalar(const CurvatureTensor& r) { return {r.ricci(), r.scalar()}; }

inline double frame_inner(const CurvatureTensor& a, const CurvatureTensor& b) {
  const int n = a.dim();
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) s += a(i, j, k, l) * b(i, j, k, l);
  return s;
}

struct WeylSplit {
  CurvatureTensor sphere_part;
  CurvatureTensor weyl;
  double ratio;  // s^2 / |R|^2
};

// R = (s/(n(n-1))) I + W for Einstein input; rejects non-Einstein tensors.
inline WeylSplit weyl_split(const CurvatureTensor& r) {
  const int n = r.dim();
  const double s = r.scalar();
  const double mu = s / n;
  const double dev = r.einstein_deviation();
  if (dev > 1e-8 * std::abs(mu))
    throw std::invalid_argument("weyl_split requires an Einstein tensor");
  const double nsq = r.norm_sq();
  if (nsq <= 0.0) throw std::invalid_argument("weyl_split requires a nonzero tensor");
  CurvatureTensor sphere = CurvatureTensor::constant_curvature(n, s / (n * (n - 1.0)));
  CurvatureTensor w = r - sphere;
  return {std::move(sphere), std::move(w), s * s / nsq};
}

// Kulkarni-Nomizu product of symmetric bilinear forms:
// (A ^ B)(x,y,z,w) = A(x,w)B(y,z) + A(y,z)B(x,w) - A(x,z)B(y,w) - A(y,w)B(x,z).
// With this sign, (1/2)(g ^ g) is the constant-curvature tensor with kappa = 1.
inline CurvatureTensor kulkarni_nomizu(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  const int n = static_cast<int>(a.rows());
  CurvatureTensor r(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w)
          r.at(x, y, z, w) =
              a(x, w) * b(y, z) + a(y, z) * b(x, w) - a(x, z) * b(y, w) - a(y, w) * b(x, z);
  return r;
}

}  // namespace confstab
