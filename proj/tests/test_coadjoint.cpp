#include "doctest.h"
#include "su21/algebra.hpp"
#include "su21/orbits.hpp"

using namespace su21;

TEST_CASE("is_borel accepts the parameterized family and rejects rotations") {
  CHECK(is_borel(borel_matrix(0.4, 0.3, 0.1, -0.2, 0.5), 1e-9));
  CHECK(is_borel(CMat::identity(), 1e-9));
  // a regular diagonal torus element mixes the light-cone basis vectors
  std::complex<double> i(0, 1);
  CMat k = {std::exp(i * 1.0), 0, 0, 0, std::exp(i * 1.0), 0, 0, 0, std::exp(-2.0 * i)};
  CHECK(in_group(k, 1e-9));
  CHECK_FALSE(is_borel(k, 1e-9));
}

TEST_CASE("identity acts trivially") {
  BFunctional f{0.3, -1.0, 2.0, 0.7};
  BFunctional g = coadjoint_act(certify(CMat::identity(), 1e-9), f);
  CHECK(g.t == doctest::Approx(f.t).epsilon(1e-12));
  CHECK(g.x == doctest::Approx(f.x).epsilon(1e-12));
  CHECK(g.y == doctest::Approx(f.y).epsilon(1e-12));
  CHECK(g.z == doctest::Approx(f.z).epsilon(1e-12));
}

TEST_CASE("non-borel input is rejected") {
  std::complex<double> i(0, 1);
  CMat k = {std::exp(i * 1.0), 0, 0, 0, std::exp(i * 1.0), 0, 0, 0, std::exp(-2.0 * i)};
  CHECK_THROWS_AS(coadjoint_act(certify(k, 1e-9), BFunctional{1, 0, 0, 0}),
                  NonBorelError);
}

TEST_CASE("central z coefficient only rescales, never changes sign") {
  BFunctional f{0.0, 0.4, -0.8, 1.5};
  for (double t : {-0.7, 0.0, 0.6}) {
    GroupElement b = certify(borel_matrix(0.9, t, 0.2, -0.3, 0.4), 1e-8);
    BFunctional g = coadjoint_act(b, f);
    CHECK(g.z > 0);
    if (t == 0.0) CHECK(g.z == doctest::Approx(f.z).epsilon(1e-9));
  }
}

TEST_CASE("exact unipotent action against the hand-derived oracle") {
  // For F = Z*: Ad_{u^-1}X = X + uy Z', Ad_{u^-1}Y' = Y' - ux Z',
  // Ad_{u^-1}T' = T' + ux Y' - uy X - ((ux^2+uy^2)/2) Z'
  Rat ux(3, 4), uy(-2, 5), uz(7, 3);
  auto g = coadjoint_act_unipotent_exact(ux, uy, uz, {Rat(0), Rat(0), Rat(0), Rat(1)});
  CHECK(g[0] == -(ux * ux + uy * uy) / 2);
  CHECK(g[1] == uy);
  CHECK(g[2] == -ux);
  CHECK(g[3] == Rat(1));
}

TEST_CASE("exact cylinder invariants on the z = 0 stratum") {
  Rat ux(1, 2), uy(5, 3), uz(-4, 7);
  std::array<Rat, 4> f = {Rat(9, 2), Rat(3, 5), Rat(-7, 2), Rat(0)};
  auto g = coadjoint_act_unipotent_exact(ux, uy, uz, f);
  CHECK(g[3] == Rat(0));
  CHECK(g[1] == f[1]);
  CHECK(g[2] == f[2]);
  CHECK(g[1] * g[2] == f[1] * f[2]);
}

TEST_CASE("classifier matches the stated strata") {
  CHECK(classify_orbit({1.0, 2.0, 3.0, 0.5}).kind == OrbitKind::OmegaPlus);
  CHECK(classify_orbit({1.0, 2.0, 3.0, -0.5}).kind == OrbitKind::OmegaMinus);
  auto cyl = classify_orbit({0.0, 1.0, 1.0, 0.0});
  CHECK(cyl.kind == OrbitKind::Cylinder);
  CHECK(cyl.alpha == doctest::Approx(1.0));
  auto neg = classify_orbit({0.0, 2.0, -1.0, 0.0});
  CHECK(neg.kind == OrbitKind::Cylinder);
  CHECK(neg.alpha == doctest::Approx(-2.0));
  CHECK(classify_orbit({5.0, -2.0, 0.0, 0.0}).kind == OrbitKind::HalfPlaneXNeg);
  CHECK(classify_orbit({5.0, 2.0, 0.0, 0.0}).kind == OrbitKind::HalfPlaneXPos);
  CHECK(classify_orbit({0.0, 0.0, -3.0, 0.0}).kind == OrbitKind::HalfPlaneYNeg);
  CHECK(classify_orbit({4.0, 0.0, 0.0, 0.0}).kind == OrbitKind::Origin);
}

TEST_CASE("classification is invariant under random borel actions") {
  std::uint64_t s = 99;
  auto rnd = [&](double lo, double hi) {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + (hi - lo) * (static_cast<double>(s >> 11) * 0x1.0p-53);
  };
  for (int i = 0; i < 200; ++i) {
    BFunctional f{rnd(-2, 2), rnd(-2, 2), rnd(-2, 2), rnd(-2, 2)};
    while (std::abs(f.z) < 1e-3) f.z = rnd(-2, 2);
    GroupElement b = certify(
        borel_matrix(rnd(-3, 3), rnd(-0.8, 0.8), rnd(-1, 1), rnd(-1, 1), rnd(-1, 1)), 1e-8);
    CHECK(classify_orbit(coadjoint_act(b, f)) == classify_orbit(f));
  }
}

TEST_CASE("polarization checks at the proposition base points") {
  CHECK(is_polarization(PolarizationSign::Plus, {0, 0, 0, 1}));
  CHECK(is_polarization(PolarizationSign::Minus, {0, 0, 0, -1}));
  CHECK(is_polarization(PolarizationSign::Plus, {0, 0, 0, 0}));
  // X*: the form B_F vanishes identically on u, isotropy is trivial
  CHECK(is_polarization(PolarizationSign::Plus, {0, 1, 0, 0}));
}

TEST_CASE("one-line json record") {
  BFunctional f{0.0, 1.0, 1.0, 0.0};
  std::string j = orbit_json(f, classify_orbit(f));
  CHECK(j.find("\"class\":\"cylinder\"") != std::string::npos);
  CHECK(j.find('\n') == std::string::npos);
}
