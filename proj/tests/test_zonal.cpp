#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "confstab/zonal.hpp"

using namespace confstab;

TEST_CASE("zonal functions solve the radial eigenvalue equation", "[zonal]") {
  for (int n : {3, 4, 5}) {
    for (int k : {1, 2, 3}) {
      const ZonalFunction f = zonal_eigenfunction(n, k);
      CHECK(f.lambda == static_cast<double>(k) * (k + n - 1));
      for (double theta : {0.2, 0.9, 1.5707963267948966, 2.4, 2.9}) {
        CAPTURE(n, k, theta);
        CHECK(std::abs(radial_laplacian_residual(f, theta)) < 1e-10);
      }
    }
  }
}

TEST_CASE("first zonal mode on the 3-sphere is 2 cos(theta)", "[zonal]") {
  const ZonalFunction f = zonal_eigenfunction(3, 1);
  CHECK(f.lambda == 3.0);
  for (double theta : {0.0, 0.3, 1.1, 2.0, M_PI}) {
    CHECK(f.value(theta) == Catch::Approx(2.0 * std::cos(theta)).margin(1e-15));
    CHECK(f.dtheta(theta) == Catch::Approx(-2.0 * std::sin(theta)).margin(1e-15));
    CHECK(f.d2theta(theta) == Catch::Approx(-2.0 * std::cos(theta)).margin(1e-15));
  }
}

TEST_CASE("cotangent-weighted derivative matches away from the poles", "[zonal]") {
  for (int k : {1, 2, 3}) {
    const ZonalFunction f = zonal_eigenfunction(4, k);
    for (double theta : {0.4, 1.2, 2.3}) {
      const double direct = f.dtheta(theta) * std::cos(theta) / std::sin(theta);
      CHECK(f.dtheta_cot(theta) == Catch::Approx(direct).margin(1e-12));
    }
  }
}

TEST_CASE("amplitude scaling is linear", "[zonal]") {
  const ZonalFunction f = zonal_eigenfunction(3, 2);
  const ZonalFunction g = f.scaled(-0.5);
  CHECK(g.lambda == f.lambda);
  for (double theta : {0.7, 1.9}) {
    CHECK(g.value(theta) == Catch::Approx(-0.5 * f.value(theta)));
    CHECK(g.dtheta(theta) == Catch::Approx(-0.5 * f.dtheta(theta)));
    CHECK(g.d2theta(theta) == Catch::Approx(-0.5 * f.d2theta(theta)));
    CHECK(g.dtheta_cot(theta) == Catch::Approx(-0.5 * f.dtheta_cot(theta)));
  }
}

TEST_CASE("zonal construction rejects bad orders", "[zonal]") {
  CHECK_THROWS_AS(zonal_eigenfunction(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(zonal_eigenfunction(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(zonal_eigenfunction(3, -2), std::invalid_argument);
}
