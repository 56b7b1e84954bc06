#include <benchmark/benchmark.h>

#include "su21/algebra.hpp"
#include "su21/characters.hpp"
#include "su21/orbital.hpp"
#include "su21/quadrature.hpp"

namespace {

su21::BumpFunction upper_bump() {
  su21::BumpFunction f;
  f.amplitude = 1.0;
  f.factors.push_back({su21::Coordinate::parse("re12"), 0.1, 0.4});
  f.factors.push_back({su21::Coordinate::parse("re23"), -0.1, 0.4});
  f.factors.push_back({su21::Coordinate::parse("re13"), 0.0, 0.5});
  return f;
}

void BM_Quadrature1D(benchmark::State& state) {
  auto f = [](double x) { return su21::bump_kernel(x); };
  for (auto _ : state)
    benchmark::DoNotOptimize(su21::integrate_1d(f, -1.0, 1.0, 1e-10));
}
BENCHMARK(BM_Quadrature1D);

void BM_EllipticOrbital(benchmark::State& state) {
  su21::DiagonalGamma g(2.0, 1.0, 0.5);
  su21::BumpFunction f = upper_bump();
  double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(su21::elliptic_orbital_quadrature(g, f, tol));
}
BENCHMARK(BM_EllipticOrbital)->Arg(6)->Arg(8);

void BM_ThetaOrbital(benchmark::State& state) {
  su21::BumpFunction f;
  f.amplitude = 1.3;
  f.factors.push_back({su21::Coordinate::parse("re12"), 0.2, 0.35});
  for (auto _ : state)
    benchmark::DoNotOptimize(su21::theta_orbital_F(f, 1.0 / 1024.0, 1e-9));
}
BENCHMARK(BM_ThetaOrbital);

void BM_CharacterG(benchmark::State& state) {
  su21::Weight mu(2, -3, 1);
  su21::EllipticElement g({1.1, -0.4, -0.7});
  auto w = su21::WeylElement::identity();
  for (auto _ : state) benchmark::DoNotOptimize(su21::ds_character_G(mu, w, g));
}
BENCHMARK(BM_CharacterG);

void BM_TransferCheck(benchmark::State& state) {
  su21::Weight mu(2, -3, 1), xi(1, 1, -2);
  auto grid = su21::elliptic_grid(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(su21::transfer_identity_check(mu, xi, grid));
}
BENCHMARK(BM_TransferCheck)->Arg(8)->Arg(32);

void BM_Iwasawa(benchmark::State& state) {
  su21::GroupElement g = su21::certify(su21::borel_matrix(0.3, 0.2, 0.1, -0.4, 0.25), 1e-8);
  for (auto _ : state) benchmark::DoNotOptimize(su21::iwasawa_decompose(g));
}
BENCHMARK(BM_Iwasawa);

}  // namespace

BENCHMARK_MAIN();
