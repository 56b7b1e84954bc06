#include <cmath>

#include "doctest.h"
#include "su21/bump.hpp"

using namespace su21;

namespace {
BumpFunction single(const char* coord, double center, double radius, double amp = 1.0) {
  BumpFunction f;
  f.amplitude = amp;
  f.factors.push_back({Coordinate::parse(coord), center, radius});
  return f;
}
}  // namespace

TEST_CASE("kernel shape") {
  CHECK(bump_kernel(0.0) == doctest::Approx(std::exp(-1.0)));
  CHECK(bump_kernel(1.0) == 0.0);
  CHECK(bump_kernel(-1.0) == 0.0);
  CHECK(bump_kernel(2.5) == 0.0);
  CHECK(bump_kernel(0.3) == bump_kernel(-0.3));
}

TEST_CASE("eval at the center and outside the support") {
  BumpFunction f = single("re12", 0.25, 0.5, 2.0);
  CMat g = CMat::identity();
  g(0, 1) = 0.25;
  CHECK(eval(f, g) == doctest::Approx(2.0 * std::exp(-1.0)));
  g(0, 1) = 0.25 + 0.5;  // closed-support edge
  CHECK(eval(f, g) == 0.0);
  g(0, 1) = 3.0;
  CHECK(eval(f, g) == 0.0);
  g(0, 1) = 0.25 + 0.1;
  double right = eval(f, g);
  g(0, 1) = 0.25 - 0.1;
  CHECK(eval(f, g) == doctest::Approx(right));
}

TEST_CASE("imaginary-part and scalar coordinates") {
  BumpFunction f = single("im21", 0.0, 1.0);
  CMat g = CMat::identity();
  g(1, 0) = std::complex<double>(5.0, 0.2);  // real part ignored
  CHECK(eval(f, g) == doctest::Approx(bump_kernel(0.2)));

  BumpFunction ft = single("t", 1.0, 0.5);
  EvalContext ctx;
  ctx.t = 1.2;
  CHECK(eval(ft, ctx) == doctest::Approx(bump_kernel(0.4)));
  EvalContext missing;
  missing.g = &g;
  CHECK_THROWS_AS(eval(ft, missing), std::invalid_argument);
}

TEST_CASE("support box in declaration order") {
  BumpFunction f;
  f.factors.push_back({Coordinate::parse("re12"), 0.0, 1.0});
  f.factors.push_back({Coordinate::parse("t"), 2.0, 0.25});
  auto box = support_box(f);
  REQUIRE(box.size() == 2);
  CHECK(box[0].first == -1.0);
  CHECK(box[0].second == 1.0);
  CHECK(box[1].first == 1.75);
  CHECK(box[1].second == 2.25);
}

TEST_CASE("json round trip") {
  BumpFunction f;
  f.amplitude = 1.5;
  f.factors.push_back({Coordinate::parse("re13"), -0.25, 0.75});
  f.factors.push_back({Coordinate::parse("lambda"), 0.0, 1.0});
  BumpFunction g = bump_from_json(bump_to_json(f));
  CHECK(g.amplitude == f.amplitude);
  REQUIRE(g.factors.size() == 2);
  CHECK(g.factors[0].coord.name() == "re13");
  CHECK(g.factors[1].coord.name() == "lambda");
  CHECK(g.factors[0].center == -0.25);
  CHECK(g.factors[0].radius == 0.75);
}

TEST_CASE("malformed inputs are rejected") {
  CHECK_THROWS_AS(Coordinate::parse("re14"), std::invalid_argument);
  CHECK_THROWS_AS(Coordinate::parse("q"), std::invalid_argument);
  CHECK_THROWS_AS(
      bump_from_json(R"({"amplitude":1,"factors":[{"coord":"re11","center":0,"radius":0}]})"),
      std::invalid_argument);
}

TEST_CASE("finite differences behave like a smooth function at the support edge") {
  // central second differences of the kernel stay bounded as h shrinks, even
  // straddling the support boundary where all derivatives vanish
  auto f = [](double x) { return bump_kernel(x); };
  for (double h : {1e-2, 1e-3}) {
    double d2_edge = (f(1.0 + h) - 2 * f(1.0) + f(1.0 - h)) / (h * h);
    CHECK(std::abs(d2_edge) < 1.0);
  }
  // interior: the estimate converges to a finite limit at first order in h^2
  auto d2 = [&](double h) { return (f(0.2 + h) - 2 * f(0.2) + f(0.2 - h)) / (h * h); };
  double coarse = d2(1e-3), fine = d2(1e-4);
  CHECK(std::abs(coarse - fine) < 1e-3);
}
