#include <catch2/catch_amalgamated.hpp>

#include "confstab/curvature_tensor.hpp"
#include "confstab/lie_algebra.hpp"

using namespace confstab;

namespace {

void check_basis(const LieAlgebraBasis& g, int expected_dim, bool heavy) {
  CHECK(g.dim == expected_dim);

  // orthonormality under -B
  double gram_dev = 0.0;
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j) {
      const double target = (i == j) ? 1.0 : 0.0;
      gram_dev = std::max(gram_dev, std::abs(g.inner(g.basis[i], g.basis[j]) - target));
    }
  CHECK(gram_dev <= 1e-12);

  CHECK(bracket_closure_residual(g) <= 1e-12);
  CHECK(ad_invariance_residual(g) <= 1e-12);
  if (heavy) {
    CHECK(jacobi_residual(g) <= 1e-12);
    const Eigen::MatrixXd b = killing_from_ad(g);
    CHECK((b + Eigen::MatrixXd::Identity(g.dim, g.dim)).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

}  // namespace

TEST_CASE("basis dimensions and invariants", "[lie]") {
  check_basis(build_lie_algebra(AlgebraFamily::su, 2), 3, true);
  check_basis(build_lie_algebra(AlgebraFamily::su, 3), 8, true);
  check_basis(build_lie_algebra(AlgebraFamily::su, 4), 15, false);
  check_basis(build_lie_algebra(AlgebraFamily::sp, 2), 10, true);
  check_basis(build_lie_algebra(AlgebraFamily::sp, 3), 21, false);
  check_basis(build_lie_algebra(AlgebraFamily::so, 5), 10, true);
  check_basis(build_lie_algebra(AlgebraFamily::so, 6), 15, false);
}

TEST_CASE("rejected parameters", "[lie]") {
  CHECK_THROWS_AS(build_lie_algebra(AlgebraFamily::su, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_lie_algebra(AlgebraFamily::sp, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_lie_algebra(AlgebraFamily::so, 4), std::invalid_argument);
  CHECK_THROWS_AS(build_lie_algebra(AlgebraFamily::so, 2), std::invalid_argument);
}

TEST_CASE("su(2) bi-invariant metric has constant curvature 1/8", "[lie]") {
  const LieAlgebraBasis g = build_lie_algebra(AlgebraFamily::su, 2);
  const CurvatureTensor r = group_curvature(g);
  CHECK(r.max_abs_diff(constant_curvature_tensor(3, 0.125)) <= 1e-12);

  const auto [ric, s] = ricci_scalar(r);
  CHECK(s == Catch::Approx(0.75).epsilon(1e-13));
  CHECK((ric - 0.25 * Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-13);
}

TEST_CASE("su(3) curvature invariants", "[lie]") {
  const CurvatureTensor r = group_curvature(build_lie_algebra(AlgebraFamily::su, 3));
  CHECK(r.max_symmetry_violation() <= 1e-12);
  CHECK(r.einstein_deviation() <= 1e-12);

  const auto [ric, s] = ricci_scalar(r);
  CHECK(s == Catch::Approx(2.0).epsilon(1e-12));
  CHECK(r.norm_sq() == Catch::Approx(0.5).epsilon(1e-12));
  CHECK((ric - 0.25 * Eigen::MatrixXd::Identity(8, 8)).cwiseAbs().maxCoeff() <= 1e-12);

  const WeylSplit ws = weyl_split(r);
  CHECK(ws.ratio == Catch::Approx(8.0).epsilon(1e-12));  // s^2/|R|^2 = n for these metrics
  // the two parts are orthogonal and recover the full norm
  double cross = 0.0;
  const int n = r.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) cross += ws.sphere_part(i, j, k, l) * ws.weyl(i, j, k, l);
  CHECK(std::abs(cross) <= 1e-10 * r.norm_sq());
  CHECK(ws.sphere_part.norm_sq() + ws.weyl.norm_sq() ==
        Catch::Approx(r.norm_sq()).epsilon(1e-12));
}

TEST_CASE("curvature invariants across families", "[lie]") {
  struct Row {
    AlgebraFamily fam;
    int q, n;
    double s, norm_sq;
  };
  const Row rows[] = {
      {AlgebraFamily::sp, 2, 10, 2.5, 0.625},
      {AlgebraFamily::su, 4, 15, 3.75, 0.9375},
      {AlgebraFamily::sp, 3, 21, 5.25, 1.3125},
  };
  for (const Row& row : rows) {
    const CurvatureTensor r = group_curvature(build_lie_algebra(row.fam, row.q));
    REQUIRE(r.dim() == row.n);
    CHECK(r.einstein_deviation() <= 1e-12);
    const auto [ric, s] = ricci_scalar(r);
    CHECK(s == Catch::Approx(row.s).epsilon(1e-10));
    CHECK(r.norm_sq() == Catch::Approx(row.norm_sq).epsilon(1e-10));
    // closed forms: s = n/4 and |R|^2 = n/16 for every -B metric
    CHECK(s == Catch::Approx(row.n / 4.0).epsilon(1e-10));
    CHECK(r.norm_sq() == Catch::Approx(row.n / 16.0).epsilon(1e-10));
  }
}

TEST_CASE("so(5) and sp(2) give isometric metrics", "[lie]") {
  const CurvatureTensor a = group_curvature(build_lie_algebra(AlgebraFamily::so, 5));
  const CurvatureTensor b = group_curvature(build_lie_algebra(AlgebraFamily::sp, 2));
  CHECK(a.dim() == b.dim());
  CHECK(ricci_scalar(a).s == Catch::Approx(ricci_scalar(b).s).epsilon(1e-10));
  CHECK(a.norm_sq() == Catch::Approx(b.norm_sq()).epsilon(1e-10));
  CHECK(weyl_split(a).ratio == Catch::Approx(weyl_split(b).ratio).epsilon(1e-10));
}

TEST_CASE("so(6) and su(4) give isometric metrics", "[lie]") {
  const CurvatureTensor a = group_curvature(build_lie_algebra(AlgebraFamily::so, 6));
  const CurvatureTensor b = group_curvature(build_lie_algebra(AlgebraFamily::su, 4));
  CHECK(a.dim() == b.dim());
  CHECK(ricci_scalar(a).s == Catch::Approx(ricci_scalar(b).s).epsilon(1e-10));
  CHECK(a.norm_sq() == Catch::Approx(b.norm_sq()).epsilon(1e-10));
  CHECK(weyl_split(a).ratio == Catch::Approx(weyl_split(b).ratio).epsilon(1e-10));
}
