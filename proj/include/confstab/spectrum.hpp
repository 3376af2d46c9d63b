#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "confstab/root_system.hpp"

namespace confstab {

// Generating highest weights (fundamental-weight coordinates) of the
// representations whose matrix coefficients live on the space; the Laplace
// spectrum is the set of Casimir values over the monoid they generate.
struct WeightLattice {
  RootSystem roots;
  std::vector<std::vector<int>> generators;
};

namespace detail {

inline void enumerate_compositions(int total, int parts, std::vector<int>& cur,
                                   const std::function<void(const std::vector<int>&)>& emit) {
  if (parts == 1) {
    cur.push_back(total);
    emit(cur);
    cur.pop_back();
    return;
  }
  for (int k = 0; k <= total; ++k) {
    cur.push_back(k);
    enumerate_compositions(total - k, parts - 1, cur, emit);
    cur.pop_back();
  }
}

}  // namespace detail

// Distinct Laplace eigenvalues in ascending order, first entry = lambda_1.
// Combinations are enumerated by total generator coefficient; enumeration
// stops once the Casimir lower bound for the next shell clears the current
// count-th value.
inline std::vector<double> spectrum_sample(const WeightLattice& wl, int count) {
  if (count < 1) throw std::invalid_argument("spectrum_sample needs count >= 1");
  if (wl.generators.empty()) throw std::invalid_argument("no generating weights");
  const int g = static_cast<int>(wl.generators.size());

  double min_gen_norm_sq = -1.0;
  for (const auto& coords : wl.generators) {
    bool nonzero = false;
    for (int k : coords) {
      if (k < 0) throw std::invalid_argument("generator weights must be dominant");
      nonzero = nonzero || k > 0;
    }
    if (!nonzero) throw std::invalid_argument("zero generator weight");
    const Eigen::VectorXd w = weight_from_coords(wl.roots, coords);
    const double nsq = w.dot(w);
    if (min_gen_norm_sq < 0 || nsq < min_gen_norm_sq) min_gen_norm_sq = nsq;
  }

  std::vector<double> values;
  auto push_unique = [&](double v) {
    for (double u : values)
      if (std::abs(u - v) <= 1e-12 * std::max(1.0, std::abs(v))) return;
    values.push_back(v);
  };

  for (int total = 1; total < 10000; ++total) {
    std::vector<int> cur;
    detail::enumerate_compositions(total, g, cur, [&](const std::vector<int>& ks) {
      std::vector<int> coords(wl.roots.rank, 0);
      for (int i = 0; i < g; ++i)
        for (int r = 0; r < wl.roots.rank; ++r) coords[r] += ks[i] * wl.generators[i][r];
      push_unique(casimir(wl.roots, coords));
    });
    std::sort(values.begin(), values.end());
    if (static_cast<int>(values.size()) >= count) {
      // Dominant weights have pairwise nonnegative inner products, so a shell
      // at total coefficient T has Casimir >= min|gen|^2 T^2 / (g * adjnorm).
      const double next_total = total + 1.0;
      const double lower_bound =
          min_gen_norm_sq * next_total * next_total / (g * wl.roots.adjoint_norm);
      if (lower_bound > values[count - 1]) break;
    }
  }
  if (static_cast<int>(values.size()) < count)
    throw std::runtime_error("spectrum enumeration did not converge");
  values.resize(count);
  return values;
}

inline double lattice_lambda1(const WeightLattice& wl) { return spectrum_sample(wl, 1)[0]; }

// Round-sphere spectrum kappa * k (k + n - 1), k = 1..count.
inline std::vector<double> sphere_spectrum(int n, double kappa, int count) {
  if (count < 1) throw std::invalid_argument("sphere_spectrum needs count >= 1");
  std::vector<double> out;
  for (int k = 1; k <= count; ++k) out.push_back(kappa * k * (k + n - 1.0));
  return out;
}

}  // namespace confstab
