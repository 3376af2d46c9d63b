#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "confstab/variation.hpp"
#include "confstab/zonal.hpp"

using namespace confstab;

TEST_CASE("chart curvature reproduces the round 3-sphere", "[variation]") {
  for (double theta : {0.9, 1.4, 2.0}) {
    CAPTURE(theta);
    CHECK(chart_curvature_self_check(theta) < 1e-10);
  }
}

TEST_CASE("equatorial band samples straddle the equator", "[variation]") {
  const std::vector<double> band = equatorial_band(8);
  REQUIRE(band.size() == 8);
  CHECK(band.front() == Catch::Approx(M_PI / 2 - 0.3));
  CHECK(band.back() == Catch::Approx(M_PI / 2 + 0.3));
  for (std::size_t i = 1; i < band.size(); ++i) CHECK(band[i] > band[i - 1]);
}

TEST_CASE("first-variation closed forms hold along the lowest mode", "[variation]") {
  // f = cos(theta): the k = 1 zonal mode at half amplitude
  const ZonalFunction f = zonal_eigenfunction(3, 1).scaled(0.5);
  const VariationCheckReport rep =
      first_variation_identity_checks(f, 1.5, equatorial_band(8));
  CHECK(rep.samples == 8);
  CAPTURE(rep.connection_rel_dev, rep.curvature_rel_dev, rep.density_rel_dev);
  CHECK(rep.connection_rel_dev < 1e-8);
  CHECK(rep.curvature_rel_dev < 1e-5);
  CHECK(rep.density_rel_dev < 1e-5);
}

TEST_CASE("first-variation closed forms hold for a higher mode", "[variation]") {
  const ZonalFunction f = zonal_eigenfunction(3, 2).scaled(0.25);
  for (double p : {1.5, 2.0}) {
    const VariationCheckReport rep =
        first_variation_identity_checks(f, p, equatorial_band(8));
    CAPTURE(p, rep.connection_rel_dev, rep.curvature_rel_dev, rep.density_rel_dev);
    CHECK(rep.connection_rel_dev < 1e-5);
    CHECK(rep.curvature_rel_dev < 1e-5);
    CHECK(rep.density_rel_dev < 1e-5);
  }
}

TEST_CASE("identity checks are restricted to the 3-sphere chart", "[variation]") {
  const ZonalFunction f = zonal_eigenfunction(4, 1);
  CHECK_THROWS_AS(first_variation_identity_checks(f, 2.0, equatorial_band(4)),
                  std::invalid_argument);
}
