#include <benchmark/benchmark.h>

#include "thoma/cocycle.hpp"
#include "thoma/fock.hpp"
#include "thoma/olshanski.hpp"
#include "thoma/random.hpp"
#include "thoma/thoma.hpp"
#include "thoma/verify.hpp"

using namespace thoma;

namespace {

ThomaParams mixed_params() { return ThomaParams::make({Rational(1, 2), Rational(1, 4)}, {Rational(1, 4)}); }

void BM_Phi(benchmark::State& state) {
  const auto params = mixed_params();
  Rng rng(1);
  const auto window = static_cast<std::uint32_t>(state.range(0));
  std::vector<std::pair<Permutation, Permutation>> inputs;
  for (int i = 0; i < 64; ++i) inputs.emplace_back(random_permutation(rng, window), random_permutation(rng, window));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [sigma, tau] = inputs[i++ % inputs.size()];
    benchmark::DoNotOptimize(phi(params, sigma, tau));
  }
}
BENCHMARK(BM_Phi)->Arg(6)->Arg(12)->Arg(24);

void BM_Xi(benchmark::State& state) {
  const auto kind = static_cast<PairKind>(state.range(0));
  const auto pair = kind == PairKind::C ? PairSpec::make(kind, 0.7, 0.4) : PairSpec::make(kind, 0.7);
  Rng rng(2);
  std::vector<GroupElement> inputs;
  for (int i = 0; i < 64; ++i) inputs.push_back(random_element(rng, pair, 6));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(xi(pair, inputs[i++ % inputs.size()]));
  state.SetLabel(to_string(kind));
}
BENCHMARK(BM_Xi)->DenseRange(0, 3);

void BM_CheckCocycle(benchmark::State& state) {
  const auto pair = PairSpec::make(PairKind::B, 0.7);
  Rng rng(3);
  const auto g1 = random_element(rng, pair, 6);
  const auto g2 = random_element(rng, pair, 6);
  for (auto _ : state) benchmark::DoNotOptimize(check_cocycle(pair, g1, g2));
}
BENCHMARK(BM_CheckCocycle);

void BM_OracleSweep(benchmark::State& state) {
  const auto cfg = OracleConfig::make(mixed_params(), static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compare_with_phi(cfg));
}
BENCHMARK(BM_OracleSweep)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_VacuumCoefficient(benchmark::State& state) {
  const auto dim = static_cast<Eigen::Index>(state.range(0));
  const auto d = static_cast<unsigned>(state.range(1));
  const Eigen::VectorXd v = Eigen::VectorXd::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
  const auto p = AffinePoint::translation(v);
  for (auto _ : state) benchmark::DoNotOptimize(vacuum_coefficient(p, d));
}
BENCHMARK(BM_VacuumCoefficient)->Args({1, 12})->Args({4, 8})->Args({4, 12})->Args({9, 12})->Unit(benchmark::kMicrosecond);

void BM_GramPsd(benchmark::State& state) {
  const auto pair = PairSpec::make(PairKind::A, 0.7);
  Rng rng(4);
  std::vector<GroupElement> elems;
  for (int i = 0; i < state.range(0); ++i) elems.push_back(random_element(rng, pair, 6));
  const ValueSource source = mixed_params();
  for (auto _ : state) benchmark::DoNotOptimize(gram_psd(source, elems));
}
BENCHMARK(BM_GramPsd)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
