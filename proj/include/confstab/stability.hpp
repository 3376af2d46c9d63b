#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "confstab/model.hpp"

namespace confstab {

// Conformal-Hessian coefficients: for a variation h = f g of an Einstein
// symmetric metric, H(fg,fg) = p |R|^{p-2} [ a ||Df||^2 - b ||df||^2 + c ||f||^2 ]
// with ||Df||^2 the Laplacian norm, so a unit-norm lambda-eigenfunction gives
// p * normSqR^{(p-2)/2} * Q(lambda), Q(lambda) = a lambda^2 - b lambda + c.
struct HessianCoefficients {
  int n = 0;
  double p = 0.0;
  double s = 0.0;
  double norm_sq_r = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

inline HessianCoefficients coefficients(int n, double p, double s, double norm_sq_r) {
  if (n < 3) throw std::invalid_argument("coefficients need n >= 3");
  if (!(norm_sq_r > 0.0)) throw std::invalid_argument("coefficients need |R|^2 > 0");
  HessianCoefficients h;
  h.n = n;
  h.p = p;
  h.s = s;
  h.norm_sq_r = norm_sq_r;
  h.a = (n - 1.0) + (p - 2.0) * 4.0 * s * s / (n * n * norm_sq_r);
  h.b = 4.0 * (p - 1.0) * s / n;
  h.c = (p - 0.5 * n) * norm_sq_r;
  return h;
}

inline double q_form(const HessianCoefficients& h, double lambda) {
  if (lambda < 0.0) throw std::invalid_argument("q_form needs lambda >= 0");
  return h.a * lambda * lambda - h.b * lambda + h.c;
}

// Sign tolerance proportional to the evaluated terms; never an absolute epsilon.
inline double q_tolerance(const HessianCoefficients& h, double lambda) {
  return 1e-10 * (std::abs(h.a) * lambda * lambda + std::abs(h.b) * lambda + std::abs(h.c));
}

enum class Verdict { UnstableConformal, StableConformal, StableConformalDegenerate, Inconclusive };

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::UnstableConformal: return "UnstableConformal";
    case Verdict::StableConformal: return "StableConformal";
    case Verdict::StableConformalDegenerate: return "StableConformalDegenerate";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

inline std::optional<Verdict> verdict_from_name(const std::string& s) {
  if (s == "UnstableConformal") return Verdict::UnstableConformal;
  if (s == "StableConformal") return Verdict::StableConformal;
  if (s == "StableConformalDegenerate") return Verdict::StableConformalDegenerate;
  if (s == "Inconclusive") return Verdict::Inconclusive;
  return std::nullopt;
}

struct SaddleWitness {
  std::optional<double> lambda_minus;  // sampled eigenvalue with Q < 0
  std::optional<double> lambda_plus;   // smallest sampled eigenvalue with Q > 0
};

inline SaddleWitness saddle_witness(const HessianCoefficients& h,
                                    const std::vector<double>& spectrum) {
  SaddleWitness w;
  for (double lam : spectrum) {
    const double q = q_form(h, lam);
    const double tol = q_tolerance(h, lam);
    if (!w.lambda_minus && q < -tol) w.lambda_minus = lam;
    if (!w.lambda_plus && q > tol) w.lambda_plus = lam;
  }
  return w;
}

struct StabilityReport {
  std::string id;
  int n = 0;
  double p = 0.0;
  HessianCoefficients coeffs;
  std::optional<double> lambda1;
  std::optional<double> q_lambda1;
  std::optional<double> min_q_sampled;
  Verdict verdict = Verdict::Inconclusive;
  // lambda1/s >= 2/n, the first-eigenvalue threshold meaningful for s > 0
  std::optional<bool> lambda1_threshold_met;
  SaddleWitness saddle;
  bool p_below_two_flag = false;  // p < 2 away from n/2: outside the formula's range
  std::string provenance;
};

// Eigenvalue grid used for the s < 0 case, where no discrete spectrum is
// carried by the model: sign data for Q on (0, inf) is sampled instead.
inline std::vector<double> synthetic_lambda_grid() {
  return {0.01, 0.1, 0.25, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0, 10000.0};
}

inline StabilityReport classify(const SymmetricSpaceModel& m, double p) {
  StabilityReport r;
  r.id = m.id;
  r.n = m.n;
  r.p = p;
  r.coeffs = coefficients(m.n, p, m.s, m.norm_sq_r);
  r.provenance = m.provenance;

  const double half_n = 0.5 * m.n;
  const bool p_is_half_dim = std::abs(p - half_n) <= 1e-12 * std::max(1.0, std::abs(p));

  if (p < 2.0 && !p_is_half_dim) {
    r.p_below_two_flag = true;
    r.verdict = Verdict::Inconclusive;
    if (m.lambda1) {
      r.lambda1 = m.lambda1;
      r.q_lambda1 = q_form(r.coeffs, *m.lambda1);
    }
    return r;
  }

  if (m.s < 0.0) {
    // a > 0, b < 0, c >= 0 for p >= n/2: Q(lambda) > 0 on all of (0, inf).
    const std::vector<double> grid = synthetic_lambda_grid();
    double min_q = q_form(r.coeffs, grid[0]);
    for (double lam : grid) min_q = std::min(min_q, q_form(r.coeffs, lam));
    r.min_q_sampled = min_q;
    if (p >= half_n - 1e-12) {
      r.verdict = Verdict::StableConformal;
    } else {
      r.verdict = Verdict::Inconclusive;
    }
    return r;
  }

  if (!m.lambda1) throw std::invalid_argument("classify: model with s >= 0 is missing lambda1");
  const double lam1 = *m.lambda1;
  r.lambda1 = lam1;
  const double q1 = q_form(r.coeffs, lam1);
  r.q_lambda1 = q1;
  const double tol1 = q_tolerance(r.coeffs, lam1);
  if (m.s > 0.0) r.lambda1_threshold_met = (lam1 / m.s >= 2.0 / m.n - 1e-14);

  const std::vector<double>& sample = m.spectrum;
  double min_q = q1;
  bool sampled_negative = false;
  for (double lam : sample) {
    const double q = q_form(r.coeffs, lam);
    min_q = std::min(min_q, q);
    if (q < -q_tolerance(r.coeffs, lam)) sampled_negative = true;
  }
  r.min_q_sampled = min_q;
  r.saddle = saddle_witness(r.coeffs, sample);

  if (q1 < -tol1) {
    r.verdict = Verdict::UnstableConformal;
  } else if (std::abs(q1) <= tol1) {
    r.verdict = sampled_negative ? Verdict::Inconclusive : Verdict::StableConformalDegenerate;
  } else {
    r.verdict = sampled_negative ? Verdict::Inconclusive : Verdict::StableConformal;
  }
  return r;
}

}  // namespace confstab
