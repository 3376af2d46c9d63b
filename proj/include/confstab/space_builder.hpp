#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "confstab/catalog.hpp"
#include "confstab/lie_algebra.hpp"
#include "confstab/model.hpp"
#include "confstab/spectrum.hpp"
#include "confstab/symmetric_space.hpp"

namespace confstab {

namespace detail {

inline void adopt_curvature(SymmetricSpaceModel& m, CurvatureTensor r) {
  const auto [ric, s] = ricci_scalar(r);
  m.n = r.dim();
  m.s = s;
  m.mu = s / m.n;
  m.norm_sq_r = r.norm_sq();
  // an Einstein failure here signals a construction bug, not bad input
  if (r.einstein_deviation() > 1e-10 * std::abs(m.mu))
    throw std::runtime_error("construction produced a non-Einstein metric for " + m.id);
  m.curvature = std::move(r);
}

inline void adopt_spectrum(SymmetricSpaceModel& m, const SpectrumSpec& spec, int count) {
  const WeightLattice wl{build_root_system(spec.root_system), spec.generators};
  m.spectrum = spectrum_sample(wl, count);
  m.lambda1 = m.spectrum.front();
}

}  // namespace detail

// Realizes a catalog entry as invariants in the -B normalization (Lie-theoretic
// families), unit curvature (spheres), curvature -1 (hyperbolic), or the
// cataloged scale-invariant ratios (exceptional).
inline SymmetricSpaceModel build_model(const CatalogEntry& e, int spectrum_count = 10) {
  SymmetricSpaceModel m;
  m.id = e.id;

  if (e.family == "su_group" || e.family == "sp_group" || e.family == "so_group") {
    const AlgebraFamily fam = e.family == "su_group"  ? AlgebraFamily::su
                              : e.family == "sp_group" ? AlgebraFamily::sp
                                                       : AlgebraFamily::so;
    m.source = ModelSource::group_manifold;
    detail::adopt_curvature(m, group_curvature(build_lie_algebra(fam, e.params[0])));
    detail::adopt_spectrum(m, *e.spectrum, spectrum_count);
    m.provenance = "matrix realization of " + family_name(fam) + "(" +
                   std::to_string(e.params[0]) +
                   ") with the -B metric; spectrum via Casimir arithmetic on " +
                   e.spectrum->root_system;
  } else if (e.family == "su_over_sp") {
    m.source = ModelSource::quotient;
    detail::adopt_curvature(m, quotient_curvature(su_over_sp_pair(e.params[0])));
    detail::adopt_spectrum(m, *e.spectrum, spectrum_count);
    m.provenance = "involution split of su(" + std::to_string(2 * e.params[0]) +
                   ") over sp(" + std::to_string(e.params[0]) +
                   "); spectrum via Casimir arithmetic on " + e.spectrum->root_system;
  } else if (e.family == "sp_over_sp_sp") {
    m.source = ModelSource::quotient;
    detail::adopt_curvature(
        m, quotient_curvature(sp_over_sp_sp_pair(e.params[0], e.params[1])));
    detail::adopt_spectrum(m, *e.spectrum, spectrum_count);
    m.provenance = "involution split of sp(" + std::to_string(e.params[0] + e.params[1]) +
                   ") over sp(" + std::to_string(e.params[0]) + ")+sp(" +
                   std::to_string(e.params[1]) + "); spectrum via Casimir arithmetic on " +
                   e.spectrum->root_system;
  } else if (e.family == "sphere") {
    const int n = e.params[0];
    m.source = ModelSource::constant_curvature;
    m.n = n;
    m.s = static_cast<double>(n) * (n - 1);
    m.mu = n - 1.0;
    m.norm_sq_r = 2.0 * n * (n - 1);
    m.curvature = constant_curvature_tensor(n, 1.0);
    m.spectrum = sphere_spectrum(n, 1.0, spectrum_count);
    m.lambda1 = m.spectrum.front();
    m.provenance = "round sphere of curvature 1; closed-form invariants and spectrum k(k+n-1)";
  } else if (e.family == "hyperbolic") {
    const int n = e.params[0];
    m.source = ModelSource::cataloged;
    m.n = n;
    m.s = -static_cast<double>(n) * (n - 1);
    m.mu = -(n - 1.0);
    m.norm_sq_r = 2.0 * n * (n - 1);
    const double ratio = m.s * m.s / m.norm_sq_r;
    if (std::abs(ratio - *e.s_sq_over_norm_sq_r) > 1e-12 * ratio)
      throw std::runtime_error("cataloged s^2/|R|^2 for " + e.id +
                               " does not match the constant-curvature closed form");
    m.provenance = e.provenance;
  } else {  // exceptional
    m.source = ModelSource::cataloged;
    m.n = e.dim;
    m.s = 0.5 * e.dim;  // -B quotient normalization
    m.mu = m.s / m.n;
    m.norm_sq_r = m.s * m.s / *e.s_sq_over_norm_sq_r;
    const double cataloged_lambda1 = *e.lambda1_over_s * m.s;
    detail::adopt_spectrum(m, *e.spectrum, spectrum_count);
    if (std::abs(m.spectrum.front() - cataloged_lambda1) >
        1e-10 * std::max(1.0, cataloged_lambda1))
      throw std::runtime_error("cataloged lambda_1 for " + e.id +
                               " does not match the weight-lattice minimum");
    m.provenance = e.provenance;
  }
  if (m.n != e.dim)
    throw std::runtime_error("built dimension disagrees with the catalog for " + e.id);
  return m;
}

}  // namespace confstab
