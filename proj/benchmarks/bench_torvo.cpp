#include <torvo/representation.hpp>
#include <torvo/verifier.hpp>

#include <benchmark/benchmark.h>

using namespace torvo;

namespace {

CheckConfig sampler(int degree) {
  CheckConfig c;
  c.M = 3;
  c.N = 2;
  c.q = 2;
  c.max_degree = degree;
  c.box = 2;
  return c;
}

void BM_VertexMode(benchmark::State& state) {
  const LatticeConfig cfg{3, 2};
  const auto a = LatticeVector::unit_e(cfg, 1) - LatticeVector::unit_e(cfg, 2) + LatticeVector::unit_delta(cfg, 1);
  const LatticeKey key{LatticeVector::unit_e(cfg, 3),
                       CreationMonomial({{0, 1, 2}, {1, static_cast<int>(state.range(0)), 1}})};
  for (auto _ : state) benchmark::DoNotOptimize(vertex_mode_image(a, -2 * state.range(0), key));
}
BENCHMARK(BM_VertexMode)->Arg(1)->Arg(3)->Arg(5);

void BM_ExpCoefficient(benchmark::State& state) {
  const LatticeConfig cfg{3, 2};
  const auto a = LatticeVector::unit_e(cfg, 1) - LatticeVector::unit_e(cfg, 2);
  for (auto _ : state) benchmark::DoNotOptimize(exp_minus_coefficient(a, state.range(0)).size());
}
BENCHMARK(BM_ExpCoefficient)->Arg(4)->Arg(8);

void BM_SuperCommutator(benchmark::State& state) {
  const RepConfig rc{3, 2, 2};
  const Representation rep(rc);
  const auto s = gen_state(sampler(static_cast<int>(state.range(0))), 3);
  const auto x = rep.rho(ToroidalElement::generator({1, 4}, {1, -1}));
  const auto y = rep.rho(ToroidalElement::generator({5, 2}, {-1, 2}));
  for (auto _ : state) benchmark::DoNotOptimize(rep.super_commutator(x, y, s));
}
BENCHMARK(BM_SuperCommutator)->Arg(2)->Arg(6);

void BM_ToroidalBracket(benchmark::State& state) {
  const ToroidalConfig cfg{{3, 2}, 2};
  ToroidalElement x, y;
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) {
      x += ToroidalElement::generator({i, j}, {i, -j});
      y += ToroidalElement::generator({j, i}, {1 - i, j});
    }
  for (auto _ : state) benchmark::DoNotOptimize(bracket_toroidal(cfg, x, y));
}
BENCHMARK(BM_ToroidalBracket);

}  // namespace

BENCHMARK_MAIN();
