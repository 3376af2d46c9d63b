#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "confstab/curvature_tensor.hpp"

namespace confstab {

enum class ModelSource { group_manifold, quotient, constant_curvature, cataloged };

inline std::string source_name(ModelSource s) {
  switch (s) {
    case ModelSource::group_manifold: return "group_manifold";
    case ModelSource::quotient: return "quotient";
    case ModelSource::constant_curvature: return "constant_curvature";
    case ModelSource::cataloged: return "cataloged";
  }
  return "?";
}

// Pointwise invariants of one homogeneous space in a fixed metric
// normalization. The curvature tensor is absent for cataloged entries.
struct SymmetricSpaceModel {
  std::string id;
  int n = 0;
  ModelSource source = ModelSource::cataloged;
  double s = 0.0;
  double norm_sq_r = 0.0;
  double mu = 0.0;
  std::optional<CurvatureTensor> curvature;
  std::optional<double> lambda1;
  std::vector<double> spectrum;  // ascending distinct eigenvalues, may be empty
  std::string provenance;
};

// Metric rescaling g -> c g: eigenvalues and s scale by 1/c, |R|^2 by 1/c^2,
// orthonormal-frame curvature components by 1/c.
inline SymmetricSpaceModel rescale(const SymmetricSpaceModel& m, double c) {
  if (c <= 0.0) throw std::invalid_argument("rescale needs c > 0");
  SymmetricSpaceModel out = m;
  out.s = m.s / c;
  out.mu = m.mu / c;
  out.norm_sq_r = m.norm_sq_r / (c * c);
  if (m.curvature) {
    CurvatureTensor r = *m.curvature;
    r *= 1.0 / c;
    out.curvature = std::move(r);
  }
  if (m.lambda1) out.lambda1 = *m.lambda1 / c;
  for (double& v : out.spectrum) v /= c;
  return out;
}

}  // namespace confstab
