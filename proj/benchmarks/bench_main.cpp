#include "orbitstar/bgs.hpp"
#include "orbitstar/exceptional.hpp"
#include "orbitstar/joseph.hpp"
#include "orbitstar/orbit.hpp"
#include "orbitstar/special.hpp"
#include "orbitstar/star.hpp"
#include "orbitstar/weights.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace orbitstar;

static void BM_SolveSl(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(solve_family("sl", static_cast<int>(st.range(0))));
}
BENCHMARK(BM_SolveSl)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_SolveSo(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(solve_family("so", static_cast<int>(st.range(0))));
}
BENCHMARK(BM_SolveSo)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

static void BM_Exceptional(benchmark::State& st) {
  ExceptionalSpec e8 = exceptional_spec("E8");
  for (auto _ : st) benchmark::DoNotOptimize(solve_exceptional(e8));
}
BENCHMARK(BM_Exceptional);

static void BM_StarTriple(benchmark::State& st) {
  StarProduct P(solve_family("sl", static_cast<int>(st.range(0))));
  int N = P.spec().algebra->dim();
  int i = 0;
  for (auto _ : st) {
    Poly a = P.gen(i % N), b = P.gen((i * 7 + 1) % N), c = P.gen((i * 13 + 2) % N);
    benchmark::DoNotOptimize(P.star(P.star(a, b), c));
    ++i;
  }
}
BENCHMARK(BM_StarTriple)->Arg(3)->Arg(4);

static void BM_HighestWeights(benchmark::State& st) {
  StarProduct P(solve_family("so", static_cast<int>(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(highest_weights(P));
}
BENCHMARK(BM_HighestWeights)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_RepCheck(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(rep_check_sl(3, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_RepCheck)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_ChainMap(benchmark::State& st) {
  unsigned n = static_cast<unsigned>(st.range(0));
  OrbitSpec cone = simple_cone(4);
  auto nf = [&](const Poly& f) { return cone_normal_form(cone, f); };
  std::vector<Poly> f;
  for (unsigned s = 0; s < n; ++s) f.push_back(Poly(Variable::x(1 + s % 4)) * Poly(Variable::x(1 + (s + 1) % 4)));
  Chain c = Chain::tensor(f);
  for (auto _ : st) benchmark::DoNotOptimize(chain_diff(perm_act(garsia(n, 1), c), nf));
}
BENCHMARK(BM_ChainMap)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_Moyal(benchmark::State& st) {
  LieSpec sp = make_algebra("sp", 4);
  Poly f, g;
  for (int a = 1; a <= 4; ++a) {
    f += Poly(Variable::xi(a)).pow(3);
    g += Poly(Variable::xi(a)) * Poly(Variable::xi(5 - a)).pow(2);
  }
  for (auto _ : st) benchmark::DoNotOptimize(moyal_star(f, g, *sp.eta));
}
BENCHMARK(BM_Moyal);

static void BM_Legendre(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(finite_quotient_check(Rational(static_cast<long>(st.range(0)), 2)));
}
BENCHMARK(BM_Legendre)->DenseRange(1, 6);

BENCHMARK_MAIN();
