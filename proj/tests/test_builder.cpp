#include <catch2/catch_amalgamated.hpp>

#include "confstab/space_builder.hpp"

using namespace confstab;

namespace {

SymmetricSpaceModel build_by_id(const std::string& id) {
  const auto entries = default_catalog();
  const CatalogEntry* e = find_entry(entries, id);
  REQUIRE(e != nullptr);
  return build_model(*e);
}

}  // namespace

TEST_CASE("every shipped entry builds", "[builder]") {
  for (const CatalogEntry& e : default_catalog()) {
    INFO(e.id);
    const SymmetricSpaceModel m = build_model(e);
    CHECK(m.n == e.dim);
    CHECK(m.norm_sq_r > 0.0);
    if (e.family == "hyperbolic") {
      CHECK(m.s < 0.0);
      CHECK_FALSE(m.lambda1.has_value());
      CHECK_FALSE(m.curvature.has_value());
      CHECK(m.spectrum.empty());
    } else {
      CHECK(m.s > 0.0);
      REQUIRE(m.lambda1.has_value());
      REQUIRE(m.spectrum.size() == 10);
      CHECK(*m.lambda1 == m.spectrum.front());
      for (std::size_t i = 1; i < m.spectrum.size(); ++i)
        CHECK(m.spectrum[i] > m.spectrum[i - 1]);
    }
    if (e.family == "exceptional" || e.family == "hyperbolic")
      CHECK(m.source == ModelSource::cataloged);
    else
      CHECK(m.curvature.has_value());
    CHECK_FALSE(m.provenance.empty());
  }
}

TEST_CASE("frozen invariants of built models", "[builder]") {
  const SymmetricSpaceModel su3 = build_by_id("SU(3)");
  CHECK(su3.source == ModelSource::group_manifold);
  CHECK(su3.s == Catch::Approx(2.0).epsilon(1e-12));
  CHECK(su3.norm_sq_r == Catch::Approx(0.5).epsilon(1e-12));
  CHECK(*su3.lambda1 == Catch::Approx(4.0 / 9.0).epsilon(1e-13));

  const SymmetricSpaceModel s5 = build_by_id("SU(4)/Sp(2)");
  CHECK(s5.source == ModelSource::quotient);
  REQUIRE(s5.curvature.has_value());
  CHECK(s5.curvature->max_abs_diff(constant_curvature_tensor(5, 0.125)) <= 1e-10);
  const auto round5 = sphere_spectrum(5, 0.125, 10);
  for (int i = 0; i < 10; ++i)
    CHECK(s5.spectrum[i] == Catch::Approx(round5[i]).epsilon(1e-12));

  const SymmetricSpaceModel s6 = build_by_id("S6");
  CHECK(s6.source == ModelSource::constant_curvature);
  CHECK(s6.s == 30.0);
  CHECK(s6.norm_sq_r == 60.0);
  CHECK(*s6.lambda1 == 6.0);

  const SymmetricSpaceModel h4 = build_by_id("H4");
  CHECK(h4.s == -12.0);
  CHECK(h4.norm_sq_r == 24.0);

  const SymmetricSpaceModel e6 = build_by_id("E6/F4");
  CHECK(e6.n == 26);
  CHECK(e6.s == 13.0);
  CHECK(e6.norm_sq_r == Catch::Approx(13.0 / 4.0).epsilon(1e-12));
  CHECK(*e6.lambda1 == Catch::Approx(13.0 / 18.0).epsilon(1e-12));
  CHECK(e6.spectrum[1] == Catch::Approx(1.5).epsilon(1e-12));

  const SymmetricSpaceModel f4 = build_by_id("F4/Spin(9)");
  CHECK(f4.n == 16);
  CHECK(f4.s == 8.0);
  CHECK(f4.norm_sq_r == Catch::Approx(16.0 / 9.0).epsilon(1e-12));
  CHECK(*f4.lambda1 == Catch::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("double realizations agree", "[builder]") {
  const SymmetricSpaceModel spin5 = build_by_id("Spin(5)");
  const SymmetricSpaceModel sp2 = build_by_id("Sp(2)");
  CHECK(spin5.n == sp2.n);
  CHECK(spin5.s == Catch::Approx(sp2.s).epsilon(1e-10));
  CHECK(spin5.norm_sq_r == Catch::Approx(sp2.norm_sq_r).epsilon(1e-10));
  for (int i = 0; i < 10; ++i)
    CHECK(spin5.spectrum[i] == Catch::Approx(sp2.spectrum[i]).epsilon(1e-12));

  const SymmetricSpaceModel spin6 = build_by_id("Spin(6)");
  const SymmetricSpaceModel su4 = build_by_id("SU(4)");
  CHECK(spin6.n == su4.n);
  CHECK(spin6.s == Catch::Approx(su4.s).epsilon(1e-10));
  CHECK(spin6.norm_sq_r == Catch::Approx(su4.norm_sq_r).epsilon(1e-10));
  for (int i = 0; i < 10; ++i)
    CHECK(spin6.spectrum[i] == Catch::Approx(su4.spectrum[i]).epsilon(1e-12));
}

TEST_CASE("inconsistent cataloged data is rejected at build time", "[builder]") {
  const auto entries = default_catalog();

  CatalogEntry bad_e6 = *find_entry(entries, "E6/F4");
  bad_e6.lambda1_over_s = 0.06;  // weight lattice says 1/18
  CHECK_THROWS_AS(build_model(bad_e6), std::runtime_error);

  CatalogEntry bad_h3 = *find_entry(entries, "H3");
  bad_h3.s_sq_over_norm_sq_r = 4.0;  // closed form says 3
  CHECK_THROWS_AS(build_model(bad_h3), std::runtime_error);
}
