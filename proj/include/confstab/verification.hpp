#pragma once

#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "confstab/catalog.hpp"
#include "confstab/conformal.hpp"
#include "confstab/curvature_tensor.hpp"
#include "confstab/space_builder.hpp"
#include "confstab/symmetric_space.hpp"
#include "confstab/variation.hpp"
#include "confstab/zonal.hpp"

namespace confstab {

struct VerificationCheck {
  std::string name;
  double expected = 0.0;
  double observed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::vector<VerificationCheck> checks;
  bool all_pass = true;
};

namespace detail {

inline void add_check(VerificationReport& rep, const std::string& name, double expected,
                      double observed, double tolerance) {
  VerificationCheck c{name, expected, observed, tolerance,
                      std::abs(observed - expected) <= tolerance};
  rep.all_pass = rep.all_pass && c.pass;
  rep.checks.push_back(std::move(c));
}

inline void add_strict_upper(VerificationReport& rep, const std::string& name,
                             double observed, double bound) {
  VerificationCheck c{name, bound, observed, 0.0, observed < bound};
  rep.all_pass = rep.all_pass && c.pass;
  rep.checks.push_back(std::move(c));
}

}  // namespace detail

// Structural checks across every buildable catalog entry: tensor symmetries
// with the first Bianchi sum, the Einstein property, trace of the curvature
// square, Cartan relations for the quotient constructions, the double
// realizations, and the strict Weyl ratio bound.
inline VerificationReport run_invariant_suite(const std::vector<CatalogEntry>& entries,
                                              int spectrum_count = 10) {
  VerificationReport rep;
  rep.suite = "invariants";

  for (const CatalogEntry& e : entries) {
    const SymmetricSpaceModel m = build_model(e, spectrum_count);
    if (m.curvature) {
      const CurvatureTensor& r = *m.curvature;
      detail::add_check(rep, e.id + ": symmetry+Bianchi residual", 0.0,
                        r.max_symmetry_violation(), 1e-12);
      detail::add_check(rep, e.id + ": Einstein deviation", 0.0, r.einstein_deviation(),
                        1e-10 * std::abs(m.mu));
      const double nsq = r.norm_sq();
      detail::add_check(rep, e.id + ": trace of curvature square", nsq, r.ring().trace(),
                        1e-12 * nsq);
    }
    if (m.s > 0) {
      const double ratio = m.s * m.s / m.norm_sq_r;
      const double bound = 0.5 * m.n * (m.n - 1);
      bool constant_curvature;
      if (m.curvature)
        constant_curvature = weyl_split(*m.curvature).weyl.norm_sq() <= 1e-10 * m.norm_sq_r;
      else
        constant_curvature = std::abs(ratio - bound) <= 1e-10 * bound;
      if (constant_curvature)
        detail::add_check(rep, e.id + ": Weyl ratio saturates n(n-1)/2", bound, ratio,
                          1e-10 * bound);
      else
        detail::add_strict_upper(rep, e.id + ": Weyl ratio below n(n-1)/2", ratio, bound);
    }
    if (e.family == "su_over_sp") {
      const SymmetricPair pair = su_over_sp_pair(e.params[0]);
      detail::add_check(rep, e.id + ": Cartan relations residual", 0.0,
                        cartan_relations_residual(pair), 1e-12);
    }
    if (e.family == "sp_over_sp_sp") {
      const SymmetricPair pair = sp_over_sp_sp_pair(e.params[0], e.params[1]);
      detail::add_check(rep, e.id + ": Cartan relations residual", 0.0,
                        cartan_relations_residual(pair), 1e-12);
    }
  }

  const CatalogEntry* spin6 = find_entry(entries, "Spin(6)");
  const CatalogEntry* su4 = find_entry(entries, "SU(4)");
  if (spin6 && su4) {
    const SymmetricSpaceModel a = build_model(*spin6, spectrum_count);
    const SymmetricSpaceModel b = build_model(*su4, spectrum_count);
    double dev = std::abs(a.s - b.s);
    dev = std::max(dev, std::abs(a.norm_sq_r - b.norm_sq_r));
    if (a.lambda1 && b.lambda1) dev = std::max(dev, std::abs(*a.lambda1 - *b.lambda1));
    for (std::size_t i = 0; i < std::min(a.spectrum.size(), b.spectrum.size()); ++i)
      dev = std::max(dev, std::abs(a.spectrum[i] - b.spectrum[i]));
    detail::add_check(rep, "Spin(6) vs SU(4): invariant agreement", 0.0, dev, 1e-10);
  }

  if (const CatalogEntry* s5 = find_entry(entries, "SU(4)/Sp(2)")) {
    const SymmetricSpaceModel m = build_model(*s5, spectrum_count);
    const WeylSplit split = weyl_split(*m.curvature);
    detail::add_check(rep, "SU(4)/Sp(2): Weyl part vanishes", 0.0, split.weyl.norm_sq(),
                      1e-10 * m.norm_sq_r);
  }

  return rep;
}

// Finite-difference oracle on the 3-sphere at the critical exponent, plus the
// pointwise first-variation identity checks in the hyperspherical chart.
inline VerificationReport run_sphere_oracle_suite() {
  VerificationReport rep;
  rep.suite = "sphere-oracle";
  const double p = 1.5;

  detail::add_check(rep, "chart curvature self-check", 0.0,
                    chart_curvature_self_check(1.2), 1e-10);

  const ConformalPath base{zonal_eigenfunction(3, 1)};
  const double f0 = functional_value(base, 0.0, p);
  const double f0_closed = 2.0 * M_PI * M_PI * std::pow(12.0, 0.75);
  detail::add_check(rep, "functional value at the round metric", f0_closed, f0,
                    1e-8 * f0_closed);

  detail::add_check(rep, "first difference at the critical exponent", 0.0,
                    std::abs(fd_first_derivative(base, p)), 1e-6 * f0);

  for (int k : {1, 2, 3}) {
    const ZonalFunction f = zonal_eigenfunction(3, k);
    const ConformalPath path{f};
    const double nf = zonal_norm_sq(f);
    const double predicted = predicted_second_derivative(3, p, f.lambda, nf);
    const FdResult fd = fd_second_derivative(path, p);
    const double scale =
        p * std::pow(12.0, 0.5 * (p - 2.0)) * (4.0 / 3.0) * f.lambda * f.lambda * nf;
    detail::add_check(rep, "second difference, mode k=" + std::to_string(k), predicted,
                      fd.estimate, std::max(1e-3 * scale, fd.error_bar));
  }

  const ZonalFunction f1 = zonal_eigenfunction(3, 1).scaled(0.5);
  const VariationCheckReport idrep =
      first_variation_identity_checks(f1, p, equatorial_band(8));
  detail::add_check(rep, "connection variation identity", 0.0, idrep.connection_rel_dev,
                    1e-5);
  detail::add_check(rep, "curvature variation identity", 0.0, idrep.curvature_rel_dev,
                    1e-5);
  detail::add_check(rep, "density variation identity", 0.0, idrep.density_rel_dev, 1e-5);

  return rep;
}

inline std::vector<VerificationReport> run_verification(
    const std::vector<CatalogEntry>& entries, const std::string& suite) {
  std::vector<VerificationReport> out;
  if (suite == "invariants" || suite == "all") out.push_back(run_invariant_suite(entries));
  if (suite == "sphere-oracle" || suite == "all") out.push_back(run_sphere_oracle_suite());
  if (out.empty())
    throw CatalogError("unknown verification suite: " + suite +
                       " (expected invariants, sphere-oracle, or all)");
  return out;
}

inline nlohmann::ordered_json verification_to_json(
    const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const VerificationReport& rep : reports) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const VerificationCheck& c : rep.checks)
      checks.push_back({{"name", c.name},
                        {"expected", c.expected},
                        {"observed", c.observed},
                        {"tolerance", c.tolerance},
                        {"pass", c.pass}});
    out.push_back(
        {{"suite", rep.suite}, {"all_pass", rep.all_pass}, {"checks", std::move(checks)}});
  }
  return out;
}

}  // namespace confstab
