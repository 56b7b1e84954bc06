#include "doctest.h"
#include "su21/algebra.hpp"

using namespace su21;

TEST_CASE("printed generator entries") {
  ExactMat X = gen_X();
  CHECK(X(0, 1) == GaussRat(Rat(-1)));
  CHECK(X(1, 0) == GaussRat(Rat(1)));
  CHECK(X(1, 2) == GaussRat(Rat(-1)));
  ExactMat T = gen_T();
  CHECK(T(0, 0) == GaussRat(Rat(1, 3)));
  CHECK(T(1, 1) == GaussRat(Rat(-2, 3)));
  ExactMat Z = gen_Z();
  CHECK(Z(0, 0) == GaussRat(Rat(2)));
  CHECK(Z(0, 2) == GaussRat(Rat(-2)));
  CHECK(gen_H()(0, 2) == GaussRat(Rat(1)));
  CHECK(gen_H()(2, 0) == GaussRat(Rat(1)));
}

TEST_CASE("heisenberg relations hold exactly on the printed matrices") {
  CHECK((bracket(gen_X(), gen_Y()) - gen_Z()).is_zero());
  CHECK(bracket(gen_X(), gen_Z()).is_zero());
  CHECK(bracket(gen_Y(), gen_Z()).is_zero());
  CHECK((bracket(gen_T(), gen_X()) - gen_Y()).is_zero());
  CHECK(bracket(gen_T(), gen_Z()).is_zero());
}

TEST_CASE("oscillator sign on the printed matrices comes out positive") {
  // direct exact computation: [T, Y] equals +X, not -X, on the matrices as
  // printed; the i-twisted basis restores the stated sign
  CHECK((bracket(gen_T(), gen_Y()) - gen_X()).is_zero());
  CHECK((bracket(corr_T(), corr_Y()) + gen_X()).is_zero());
}

TEST_CASE("corrected basis satisfies the full stated table") {
  CHECK((bracket(corr_X(), corr_Y()) - corr_Z()).is_zero());
  CHECK(bracket(corr_X(), corr_Z()).is_zero());
  CHECK(bracket(corr_Y(), corr_Z()).is_zero());
  CHECK((bracket(corr_T(), corr_X()) - corr_Y()).is_zero());
  CHECK(bracket(corr_T(), corr_Z()).is_zero());
}

TEST_CASE("cartan involution is an exact involution") {
  for (const auto& g : {gen_X(), gen_Y(), gen_Z(), gen_T(), gen_H(), gen_I21()}) {
    CHECK((cartan_involution_algebra(cartan_involution_algebra(g)) - g).is_zero());
  }
}

TEST_CASE("membership verdicts") {
  CHECK(in_algebra(gen_X()));
  CHECK(in_algebra(gen_H()));
  CHECK_FALSE(in_algebra(gen_Y()));
  CHECK_FALSE(in_algebra(gen_Z()));
  CHECK_FALSE(in_algebra(gen_T()));
  CHECK(in_algebra(corr_Y()));
  CHECK(in_algebra(corr_Z()));
  CHECK(in_algebra(corr_T()));
}

TEST_CASE("audit report matches the direct checks") {
  AuditReport rep = audit_basis();
  CHECK(rep.generators.size() == 5);
  for (const auto& g : rep.generators) {
    bool expect = g.name == "X" || g.name == "H";
    CHECK(g.member == expect);
    CHECK(g.i_twist_member == !expect);
  }
  int printed_failures = 0;
  for (const auto& b : rep.brackets) {
    CHECK((b.holds_printed || b.holds_corrected));
    if (!b.holds_printed) {
      ++printed_failures;
      CHECK(b.relation == "[T,Y]=-X");
    }
  }
  CHECK(printed_failures == 1);
  CHECK(rep.all_identities_verified);
}

TEST_CASE("group membership and inverse") {
  GroupElement g = mat_exp(0.3 * to_float(corr_X()) + 0.2 * to_float(corr_Y()));
  CHECK(g.certified);
  CMat gi = group_inverse(g.m);
  CHECK(max_abs_diff(g.m * gi, CMat::identity()) < 1e-12);
}

TEST_CASE("matrix exponential agrees with the truncated series for nilpotents") {
  CMat n = std::complex<double>(0.7) * to_float(corr_X());
  CMat n2 = n * n;
  // X is conjugate to a strictly triangular matrix: cube vanishes
  CHECK(max_abs(n2 * n) < 1e-14);
  CMat series = CMat::identity() + n + 0.5 * n2;
  CHECK(max_abs_diff(mat_exp_raw(n), series) < 1e-13);
}

TEST_CASE("iwasawa reconstruction on random group elements") {
  std::array<CMat, 8> basis = {
      to_float(corr_X()), to_float(corr_Y()), to_float(corr_Z()), to_float(corr_T()),
      to_float(gen_H()),
      to_float(bracket(gen_H(), corr_T())),  // extra directions outside b
      cartan_involution_algebra(to_float(corr_X())),
      cartan_involution_algebra(to_float(corr_Y()))};
  std::uint64_t s = 12345;
  auto rnd = [&]() {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>(s >> 11) * 0x1.0p-53 - 0.5;
  };
  for (int trial = 0; trial < 50; ++trial) {
    CMat x;
    for (const auto& b : basis) x = x + std::complex<double>(rnd()) * b;
    GroupElement g = mat_exp(x);
    REQUIRE(g.certified);
    IwasawaFactors f = iwasawa_decompose(g);
    CMat rec = f.m.m * f.a.m * f.u.m * f.k.m;
    CHECK(max_abs_diff(rec, g.m) < 1e-9);
    // k stays in the maximal compact: fixed by the involution
    CHECK(max_abs_diff(cartan_involution_group(f.k.m), f.k.m) < 1e-9);
    // a = exp(t H) has positive diagonal in the Cayley model
    CHECK(f.a.m(1, 1).real() == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("dimension bookkeeping") {
  CHECK(dim_g() == 8);
  CHECK(dim_k() == 4);
  CHECK(q_G() == 2);
  CHECK(q_H() == 1);
}
