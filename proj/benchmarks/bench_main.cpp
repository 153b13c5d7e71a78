#include <benchmark/benchmark.h>

#include "qkgr/groebner.hpp"
#include "qkgr/presentations.hpp"
#include "qkgr/specialize.hpp"
#include "qkgr/symfunc.hpp"

using namespace qkgr;

namespace {

PresentationSpec spec(int k, int n, Kind kind, QMode mode, std::vector<Rational> zeta = {}) {
  PresentationSpec s;
  s.k = k;
  s.n = n;
  s.kind = kind;
  s.q_mode = mode;
  s.zeta_values = std::move(zeta);
  return s;
}

void BM_PolyMultiply(benchmark::State& state) {
  auto sp = standard_space(3, 6, {}, true, true, false);
  SymRing R = standard_ring(sp, 3, 6, true);
  Poly a = R.Gp(static_cast<int>(state.range(0)));
  Poly b = R.hp(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.counters["terms"] = static_cast<double>((a * b).num_terms());
}
BENCHMARK(BM_PolyMultiply)->Arg(3)->Arg(5)->Arg(7);

void BM_SymmetricFamilies(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto sp = standard_space(k, k + 3, {}, true, true, false);
    SymRing R = standard_ring(sp, k, k + 3, true);
    benchmark::DoNotOptimize(R.Gp(k + 3));
  }
}
BENCHMARK(BM_SymmetricFamilies)->DenseRange(2, 4);

void BM_GroebnerNumeric(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  auto pt = draw_point(n, 1);
  auto g = build_presentation(spec(k, n, Kind::kEliminatedHat, QMode::numeric(pt.q), pt.zeta));
  auto gens = g.ideal_generators();
  auto order = TermOrder::block(*g.space);
  for (auto _ : state) benchmark::DoNotOptimize(groebner(gens, order).quotient_dimension());
}
BENCHMARK(BM_GroebnerNumeric)->Args({2, 5})->Args({3, 6})->Unit(benchmark::kMillisecond);

void BM_GroebnerSymbolic(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  auto g = build_presentation(spec(k, n, Kind::kEliminatedTilde, QMode::aux()));
  auto gens = g.ideal_generators();
  auto order = TermOrder::block(*g.space);
  for (auto _ : state) benchmark::DoNotOptimize(groebner(gens, order).generators().size());
}
BENCHMARK(BM_GroebnerSymbolic)->Args({2, 4})->Args({2, 5})->Unit(benchmark::kMillisecond);

void BM_Limit2d(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto sp = standard_space(2, n, {}, true, true, false);
  SymRing R = standard_ring(sp, 2, n, true);
  Poly g = g_hat_closed(R, n, Poly::variable(sp, names::q));
  for (auto _ : state) benchmark::DoNotOptimize(limit_2d(g, 2, n).power);
}
BENCHMARK(BM_Limit2d)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
