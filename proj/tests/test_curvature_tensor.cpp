#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "confstab/curvature_tensor.hpp"

using namespace confstab;

namespace {

Eigen::MatrixXd random_symmetric(int n, std::mt19937& rng) {
  std::normal_distribution<double> dist;
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m(i, j) = m(j, i) = dist(rng);
  return m;
}

// Sums of Kulkarni-Nomizu products of symmetric forms satisfy every algebraic
// curvature identity, which makes them good generic test tensors.
CurvatureTensor random_algebraic(int n, unsigned seed) {
  std::mt19937 rng(seed);
  CurvatureTensor r(n);
  for (int t = 0; t < 3; ++t)
    r += kulkarni_nomizu(random_symmetric(n, rng), random_symmetric(n, rng));
  return r;
}

}  // namespace

TEST_CASE("constant curvature components and norm", "[tensor]") {
  const CurvatureTensor i3 = constant_curvature_tensor(3, 1.0);
  CHECK(i3(0, 1, 1, 0) == 1.0);
  CHECK(i3(0, 1, 0, 1) == -1.0);
  CHECK(i3.sectional(1, 2) == 1.0);
  CHECK(i3.norm_sq() == 12.0);
  CHECK(constant_curvature_tensor(5, 1.0).norm_sq() == 40.0);

  const CurvatureTensor flat = constant_curvature_tensor(4, 0.0);
  CHECK(flat.norm_sq() == 0.0);

  CHECK_THROWS_AS(constant_curvature_tensor(2, 1.0), std::invalid_argument);
}

TEST_CASE("symmetry validation reports violated invariants", "[tensor]") {
  CHECK(validate_symmetries(constant_curvature_tensor(3, 1.0), 1e-12).empty());
  CHECK(validate_symmetries(random_algebraic(4, 7), 1e-9).empty());

  CurvatureTensor r = constant_curvature_tensor(3, 1.0);
  r.at(0, 1, 0, 1) += 2e-6;
  auto bad = r.dim() >= 0 ? validate_symmetries(r, 1e-6) : std::vector<std::string>{};
  CHECK_FALSE(bad.empty());
  CHECK(std::find(bad.begin(), bad.end(), "antisymmetry_first_pair") != bad.end());

  CurvatureTensor r2 = constant_curvature_tensor(3, 1.0);
  r2.at(0, 1, 1, 2) += 2e-6;
  auto bad2 = validate_symmetries(r2, 1e-6);
  CHECK(std::find(bad2.begin(), bad2.end(), "pair_symmetry") != bad2.end());
}

TEST_CASE("ricci and scalar", "[tensor]") {
  const auto [ric, s] = ricci_scalar(constant_curvature_tensor(3, 1.0));
  CHECK(s == 6.0);
  CHECK((ric - 2.0 * Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);

  const auto [zric, zs] = ricci_scalar(CurvatureTensor(4));
  CHECK(zs == 0.0);
  CHECK(zric.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("ring tensor and trace identity", "[tensor]") {
  const Eigen::MatrixXd ring3 = constant_curvature_tensor(3, 1.0).ring();
  CHECK((ring3 - 4.0 * Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(ring3.trace() == 12.0);

  CHECK(CurvatureTensor(3).ring().cwiseAbs().maxCoeff() == 0.0);

  for (unsigned seed : {1u, 2u, 3u}) {
    const CurvatureTensor r = random_algebraic(5, seed);
    const double nsq = r.norm_sq();
    CHECK(std::abs(r.ring().trace() - nsq) <= 1e-12 * nsq);
  }
}

TEST_CASE("homogeneity under scaling", "[tensor]") {
  const CurvatureTensor r = random_algebraic(4, 11);
  const CurvatureTensor r4 = 4.0 * r;
  CHECK(r4.norm_sq() == 16.0 * r.norm_sq());
  CHECK((r4.ricci() - 4.0 * r.ricci()).cwiseAbs().maxCoeff() == 0.0);

  const CurvatureTensor rc = 1.7 * r;
  CHECK(rc.norm_sq() == Catch::Approx(1.7 * 1.7 * r.norm_sq()).epsilon(1e-14));
}

TEST_CASE("weyl split", "[tensor]") {
  const CurvatureTensor i4 = constant_curvature_tensor(4, 1.0);
  const WeylSplit ws = weyl_split(i4);
  CHECK(ws.weyl.norm_sq() <= 1e-15);
  CHECK(ws.ratio == Catch::Approx(6.0).epsilon(1e-14));  // n(n-1)/2

  // scale invariance of the ratio
  const WeylSplit ws2 = weyl_split(0.25 * i4);
  CHECK(ws2.ratio == Catch::Approx(ws.ratio).epsilon(1e-14));

  // generic algebraic tensors are not Einstein
  CHECK_THROWS_AS(weyl_split(random_algebraic(4, 5)), std::invalid_argument);
}

TEST_CASE("kulkarni-nomizu of the metric gives constant curvature", "[tensor]") {
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(4, 4);
  const CurvatureTensor half_gg = 0.5 * kulkarni_nomizu(id, id);
  CHECK(half_gg.max_abs_diff(constant_curvature_tensor(4, 1.0)) == 0.0);
}
