#include <benchmark/benchmark.h>

#include "einstein_cyl/classify.hpp"
#include "einstein_cyl/curvature.hpp"
#include "einstein_cyl/reparam.hpp"

using namespace ecyl;

namespace {

ModelParams P(int a, double C, double lambda) { return {branch_from_int(a), C, lambda}; }

void BM_PositiveRoots(benchmark::State& state) {
  const GPoly g = g_poly(P(-1, 11, 1));
  for (auto _ : state) benchmark::DoNotOptimize(positive_roots(g));
}
BENCHMARK(BM_PositiveRoots);

void BM_PositivityIntervals(benchmark::State& state) {
  const ModelParams p = P(-1, 8, -6);
  for (auto _ : state) benchmark::DoNotOptimize(positivity_intervals(p));
}
BENCHMARK(BM_PositivityIntervals);

void BM_ArcLengthPage(benchmark::State& state) {
  const auto pr = page_roots();
  const ModelParams p = P(1, 0, pr.lambda);
  const auto iv = positivity_intervals(p).at(0);
  for (auto _ : state) {
    const ArcLength arc(p, iv);
    benchmark::DoNotOptimize(arc.t_hi());
  }
}
BENCHMARK(BM_ArcLengthPage);

void BM_SampleProfilePage(benchmark::State& state) {
  const auto pr = page_roots();
  const ModelParams p = P(1, 0, pr.lambda);
  const SInterval s{pr.z1, pr.z2};
  for (auto _ : state) benchmark::DoNotOptimize(sample_profile(p, s, static_cast<int>(state.range(0))));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleProfilePage)->Arg(50)->Arg(200)->Arg(1000);

void BM_ClassifyCase(benchmark::State& state) {
  const ModelParams ps[] = {P(1, 0, 3), P(-1, 8, -6), P(0, -1, 0), P(-1, 11, 1)};
  for (auto _ : state)
    for (const auto& p : ps) benchmark::DoNotOptimize(classify_case(p));
  state.SetItemsProcessed(state.iterations() * 4);
}
BENCHMARK(BM_ClassifyCase);

void BM_RicciDiag(benchmark::State& state) {
  const auto x = closed_form_sample(ClosedForm::FubiniStudy, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(ricci_diag(x));
}
BENCHMARK(BM_RicciDiag);

void BM_KoszulClosedForm(benchmark::State& state) {
  const FrameAlgebra alg;
  const auto profile = closed_form_profile(ClosedForm::Sphere4);
  for (auto _ : state) benchmark::DoNotOptimize(koszul_ricci_oracle(alg, profile, 1.1));
}
BENCHMARK(BM_KoszulClosedForm);

void BM_KoszulLocalChart(benchmark::State& state) {
  const FrameAlgebra alg;
  const auto profile = local_chart(P(0, -1, 0), 1.5);
  for (auto _ : state) benchmark::DoNotOptimize(koszul_ricci_oracle(alg, profile, 0.0));
}
BENCHMARK(BM_KoszulLocalChart);

void BM_Sweep(benchmark::State& state) {
  GridSpec grid;
  grid.a = {-1, 0, 1};
  for (int i = 0; i < 8; ++i) grid.C.push_back(-8.0 + 2.0 * i);
  for (int i = 0; i < 8; ++i) grid.lambda.push_back(-6.0 + 1.5 * i);
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(grid, threads));
  state.SetItemsProcessed(state.iterations() * 192);
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->UseRealTime();

}  // namespace
BENCHMARK_MAIN();
