#include <benchmark/benchmark.h>

#include "polarmm/dynamics.hpp"
#include "polarmm/endomorphism.hpp"
#include "polarmm/finite_reduction.hpp"
#include "polarmm/lattes.hpp"
#include "polarmm/sampling.hpp"

using namespace polarmm;
using NFE = NumberFieldElement;

static void BM_Zeta5Multiply(benchmark::State& state) {
  Rng rng;
  const NFE a = random_element(cyclotomic5_field(), rng), b = random_element(cyclotomic5_field(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Zeta5Multiply);

static void BM_Zeta5Inverse(benchmark::State& state) {
  Rng rng;
  const NFE a = random_element(cyclotomic5_field(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(a.one_like() / a);
}
BENCHMARK(BM_Zeta5Inverse);

static void BM_BuildLattes(benchmark::State& state) {
  const GaussianInteger m(static_cast<long>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(build_lattes(Endomorphism<NFE>(gaussian_cm_curve(), m)));
  state.SetLabel("norm " + m.norm().get_str());
}
BENCHMARK(BM_BuildLattes)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_ComposePhiPsi(benchmark::State& state) {
  const auto phi = reference_phi(), psi = reference_psi();
  for (auto _ : state) benchmark::DoNotOptimize(phi.compose(psi));
}
BENCHMARK(BM_ComposePhiPsi)->Unit(benchmark::kMillisecond);

static void BM_TwoTorsionCriterion(benchmark::State& state) {
  const Endomorphism<NFE> f(gaussian_cm_curve(), GaussianInteger(2, 1));
  for (auto _ : state) benchmark::DoNotOptimize(two_torsion_criterion(f));
}
BENCHMARK(BM_TwoTorsionCriterion)->Unit(benchmark::kMillisecond);

static void BM_PointCount(benchmark::State& state) {
  const ReducedCurve red = reduce_curve(gaussian_cm_curve(), static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_points(red.curve).size());
}
BENCHMARK(BM_PointCount)->Arg(101)->Arg(1009)->Arg(9973)->Unit(benchmark::kMicrosecond);

static void BM_IdentifyFrobenius(benchmark::State& state) {
  const ReducedCurve red = reduce_curve(gaussian_cm_curve(), static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(identify_frobenius(red));
}
BENCHMARK(BM_IdentifyFrobenius)->Arg(13)->Arg(1009)->Unit(benchmark::kMillisecond);

static void BM_VerifyCounterexample(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_counterexample().verified());
}
BENCHMARK(BM_VerifyCounterexample)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
