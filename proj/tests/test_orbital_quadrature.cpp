#include <cmath>

#include "doctest.h"
#include "su21/orbital.hpp"

using namespace su21;

namespace {
BumpFunction upper_bump(double amp = 1.0) {
  BumpFunction f;
  f.amplitude = amp;
  f.factors.push_back({Coordinate::parse("re12"), 0.1, 0.4});
  f.factors.push_back({Coordinate::parse("re23"), -0.1, 0.4});
  f.factors.push_back({Coordinate::parse("re13"), 0.0, 0.5});
  return f;
}
}  // namespace

TEST_CASE("gauss-kronrod basics") {
  auto sq = [](double x) { return x * x; };
  CHECK(integrate_1d(sq, 0.0, 1.0, 1e-12).value == doctest::Approx(1.0 / 3).epsilon(1e-12));
  auto kinked = [](double x) { return std::abs(x - 0.3); };
  QuadResult r = integrate_1d(kinked, 0.0, 1.0, 1e-12, {0.3});
  CHECK(r.value == doctest::Approx(0.3 * 0.3 / 2 + 0.7 * 0.7 / 2).epsilon(1e-12));
  CHECK(integrate_1d(sq, 1.0, 1.0, 1e-12).value == 0.0);
}

TEST_CASE("3d product integrand matches the product of 1d integrals") {
  auto f3 = [](double x, double y, double z) {
    return bump_kernel(x) * bump_kernel(2 * y) * bump_kernel(z - 0.5);
  };
  QuadResult r = integrate_3d(f3, {{{-1, 1}, {-0.5, 0.5}, {-0.5, 1.5}}}, 1e-10);
  double one = integrate_1d([](double x) { return bump_kernel(x); }, -1, 1, 1e-12).value;
  CHECK(r.value == doctest::Approx(one * (one / 2) * one).epsilon(1e-8));
}

TEST_CASE("conjugated matrix agrees with the multiplication oracle entrywise") {
  DiagonalGamma g(2.0, 1.0, 0.5);
  double x = 0.7, y = -0.4, z = 0.3;
  CMat m = conjugated_matrix(g, x, y, z);
  CHECK(m(0, 0).real() == doctest::Approx(2.0));
  CHECK(m(0, 1).real() == doctest::Approx((g.a1 - g.a2) * x));
  CHECK(m(1, 2).real() == doctest::Approx((g.a2 - g.a3) * y));
  // the corner entry carries (a3 - a2) xy, not the printed a3 xy
  CHECK(m(0, 2).real() == doctest::Approx((g.a1 - g.a3) * z + (g.a3 - g.a2) * x * y));
  CHECK(std::abs(m(0, 2).real() - ((g.a1 - g.a3) * z + g.a3 * x * y)) > 0.1);
}

TEST_CASE("central gamma is fixed by conjugation") {
  DiagonalGamma g(1.0, 1.0, 1.0);
  CMat m = conjugated_matrix(g, 3.0, -2.0, 5.0);
  CHECK(max_abs_diff(m, CMat::identity()) < 1e-14);
}

TEST_CASE("gamma validation") {
  CHECK_THROWS_AS(DiagonalGamma(2.0, 1.0, 1.0), ConstraintViolation);
  DiagonalGamma degenerate(1.0, 1.0, 1.0);
  CHECK_THROWS_AS(elliptic_orbital_quadrature(degenerate, upper_bump(), 1e-8),
                  DegenerateGamma);
}

TEST_CASE("unbounded support is detected") {
  BumpFunction f;
  f.factors.push_back({Coordinate::parse("re12"), 0.0, 1.0});
  CHECK_THROWS_AS(elliptic_orbital_quadrature(DiagonalGamma(2, 1, 0.5), f, 1e-8),
                  SupportUnbounded);
}

TEST_CASE("jacobian readings") {
  DiagonalGamma g(2.0, 1.0, 0.5);
  CHECK(elliptic_jacobian(g, JacobianReading::ProductAllPairs) ==
        doctest::Approx(1.0 / 0.75));
  CHECK(elliptic_jacobian(g, JacobianReading::PrintedDuplicate) ==
        doctest::Approx(1.0 / (1.0 * 0.5 * 0.5)));
}

TEST_CASE("change of variables: quadrature equals the closed form") {
  DiagonalGamma g(2.0, 1.0, 0.5);
  BumpFunction f = upper_bump(1.7);
  QuadResult q = elliptic_orbital_quadrature(g, f, 1e-9);
  QuadResult c = elliptic_orbital_closed_form(g, f, 1e-9);
  CHECK(std::abs(q.value - c.value) / std::abs(c.value) < 1e-6);
  CHECK(q.value > 0);

  // linearity in the amplitude
  QuadResult c2 = elliptic_orbital_closed_form(g, upper_bump(3.4), 1e-9);
  CHECK(c2.value == doctest::Approx(2.0 * c.value).epsilon(1e-9));

  // zero amplitude integrates to zero
  QuadResult z = elliptic_orbital_quadrature(g, upper_bump(0.0), 1e-9);
  CHECK(z.value == 0.0);
}

TEST_CASE("smooth transfer values on a symmetric grid") {
  BumpFunction f = upper_bump();
  std::vector<DiagonalGamma> grid;
  for (double s : {-0.02, -0.01, 0.0, 0.01, 0.02})
    grid.push_back(DiagonalGamma(2.0 + s, 1.0, 1.0 / (2.0 + s)));
  auto vals = smooth_transfer_fH(grid, f, 1e-8);
  REQUIRE(vals.size() == 5);
  // second differences stay bounded on the geodesic grid
  for (size_t i = 1; i + 1 < vals.size(); ++i) {
    double d2 = vals[i + 1] - 2 * vals[i] + vals[i - 1];
    CHECK(std::abs(d2) < 1.0);
  }
}

TEST_CASE("theta matrix and F") {
  CMat m = theta_matrix(0.6, 2.0);
  CHECK(m(0, 0).real() == doctest::Approx(0.8));
  CHECK(m(0, 1).real() == doctest::Approx(1.2));
  CHECK(m(1, 0).real() == doctest::Approx(-0.3));
  CHECK(m(2, 2).real() == doctest::Approx(1.0));

  BumpFunction below;  // t-support entirely below the sign switch
  below.factors.push_back({Coordinate::parse("t"), 0.5, 0.3});
  CHECK(theta_orbital_F(below, 0.5, 1e-10).value < 0);
  BumpFunction above;
  above.factors.push_back({Coordinate::parse("t"), 2.0, 0.5});
  CHECK(theta_orbital_F(above, 0.5, 1e-10).value > 0);

  CHECK_THROWS_AS(theta_orbital_F(below, 0.0, 1e-10), LambdaOutOfRange);
  CHECK_THROWS_AS(theta_orbital_F(below, 1.5, 1e-10), LambdaOutOfRange);
  BumpFunction unbounded;
  unbounded.factors.push_back({Coordinate::parse("re11"), 0.5, 0.5});
  CHECK_THROWS_AS(theta_orbital_F(unbounded, 0.5, 1e-10), SupportUnbounded);
}

TEST_CASE("singular fit sanity") {
  BumpFunction zero;
  zero.amplitude = 0.0;
  zero.factors.push_back({Coordinate::parse("re12"), 0.2, 0.35});
  std::vector<double> lambdas;
  for (int k = 3; k <= 10; ++k) lambdas.push_back(std::ldexp(1.0, -k));
  SingularFit fit = singular_fit(zero, lambdas);
  CHECK(fit.c_inv == doctest::Approx(0.0));
  CHECK(fit.c_log == doctest::Approx(0.0));
  CHECK(fit.c_0 == doctest::Approx(0.0));

  CHECK_THROWS_AS(singular_fit(zero, {0.5, 0.25}), std::invalid_argument);
  std::vector<double> increasing = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
  CHECK_THROWS_AS(singular_fit(zero, increasing), std::invalid_argument);
}

TEST_CASE("a-term anchors the inverse-lambda coefficient") {
  BumpFunction f;
  f.amplitude = 1.3;
  f.factors.push_back({Coordinate::parse("re12"), 0.2, 0.35});
  std::vector<double> lambdas;
  for (int k = 3; k <= 10; ++k) lambdas.push_back(std::ldexp(1.0, -k));
  SingularFit fit = singular_fit(f, lambdas);
  QuadResult a = a_term_integral(f, 1.0);
  CHECK(std::abs(fit.c_inv - a.value) / a.value < 0.05);
  CHECK(residual_trend(f, fit, lambdas).no_growth);
}

TEST_CASE("parity identities hold as constructed") {
  BumpFunction f;
  f.factors.push_back({Coordinate::parse("re12"), 0.2, 0.35});
  auto p = parity_functions(f, 0.25);
  auto m = parity_functions(f, -0.25);
  CHECK(p.G == doctest::Approx(m.G).epsilon(1e-14));
  CHECK(p.H == doctest::Approx(m.H).epsilon(1e-14));
}
