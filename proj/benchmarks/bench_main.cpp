#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "merger_er/kulpa.hpp"
#include "merger_er/model.hpp"
#include "merger_er/sweep.hpp"

namespace {

using namespace merger_er;

const MergerPair kPair = derive_pair({4, 20, 4}, {2, 10, 3});

void BM_Classify(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> mu(100.0, 250.0);
    std::uniform_real_distribution<double> rho(80.001, 110.0);
    std::vector<std::pair<double, double>> inputs(1024);
    for (auto& in : inputs) {
        in = {mu(rng), rho(rng)};
    }
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& [m, r] = inputs[i++ & 1023];
        benchmark::DoNotOptimize(classify(kPair, m, r));
    }
}
BENCHMARK(BM_Classify);

void BM_Accepts(benchmark::State& state) {
    double r = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(accepts(kPair, 120.0, 94.0, r));
        r = r > 2.0 ? 0.0 : r + 1e-3;
    }
}
BENCHMARK(BM_Accepts);

void BM_CaseMuRange(benchmark::State& state) {
    for (auto _ : state) {
        for (CaseLabel label : {CaseLabel::Case1CrB, CaseLabel::Case2BrMu, CaseLabel::Case3BrRho,
                                CaseLabel::Case4CrA}) {
            benchmark::DoNotOptimize(case_mu_range(kPair, 94.0, label));
        }
    }
}
BENCHMARK(BM_CaseMuRange);

void BM_SweepMu(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep_br_mu(kPair, {100.0, 200.0}, n));
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_SweepMu)->Arg(512)->Arg(16384);

void BM_BuildScene(benchmark::State& state) {
    SceneOptions options;
    options.samples = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_scene(kPair, 120.0, 94.0, options));
    }
}
BENCHMARK(BM_BuildScene)->Arg(128)->Arg(512);

void BM_EmitSceneSvg(benchmark::State& state) {
    const Scene scene = build_scene(kPair, 120.0, 94.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(emit_svg(scene));
    }
}
BENCHMARK(BM_EmitSceneSvg);

void BM_EmitCsv(benchmark::State& state) {
    const Series series = sweep_br_mu(kPair, {100.0, 200.0}, 512);
    for (auto _ : state) {
        benchmark::DoNotOptimize(emit_csv(series));
    }
}
BENCHMARK(BM_EmitCsv);

}  // namespace

BENCHMARK_MAIN();
