#include <benchmark/benchmark.h>

#include <string>

#include "suslink/suslink.hpp"

namespace {

suslink::ResolutionGraph load(int k) {
  return suslink::read_resolution_file(std::string(SUSLINK_DATA_DIR) + "/ex" + std::to_string(k) + ".txt");
}

void BM_Pipeline(benchmark::State& state) {
  auto g = load(static_cast<int>(state.range(0)));
  suslink::PipelineOptions o;
  o.r = state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(suslink::run_pipeline(g, o));
}
BENCHMARK(BM_Pipeline)->Args({1, 3})->Args({2, 2})->Args({3, 5})->Args({3, 97})->Unit(benchmark::kMicrosecond);

void BM_Power(benchmark::State& state) {
  auto n = suslink::build_nielsen(suslink::subtract_and_normalize(load(3)));
  for (auto _ : state) benchmark::DoNotOptimize(suslink::power_nielsen(n, state.range(0)));
}
BENCHMARK(BM_Power)->Arg(5)->Arg(360)->Arg(1 << 20);

void BM_CanonicalClass(benchmark::State& state) {
  suslink::PipelineOptions o;
  o.r = state.range(0);
  o.compare_holomorphic = false;
  auto tree = *suslink::run_pipeline(load(3), o).tree;
  state.counters["vertices"] = static_cast<double>(tree.vertices.size());
  for (auto _ : state) benchmark::DoNotOptimize(suslink::canonical_class(tree));
}
BENCHMARK(BM_CanonicalClass)->Arg(5)->Arg(97)->Unit(benchmark::kMicrosecond);

void BM_ContinuedFraction(benchmark::State& state) {
  suslink::Integer a = state.range(0);
  for (auto _ : state)
    for (suslink::Integer b = 1; b < 50; ++b)
      if (suslink::gcd(a, b) == 1) benchmark::DoNotOptimize(suslink::neg_cf_eval(suslink::neg_cf_expand(a, b)));
}
BENCHMARK(BM_ContinuedFraction)->Arg(145)->Arg(1000003);

}  // namespace

BENCHMARK_MAIN();
