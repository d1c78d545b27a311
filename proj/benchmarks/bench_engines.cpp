#include "swarmbench/aco.hpp"
#include "swarmbench/boids.hpp"
#include "swarmbench/llm_rules.hpp"
#include "swarmbench/mock_model.hpp"
#include "swarmbench/parsers.hpp"
#include "swarmbench/prompts.hpp"

#include <benchmark/benchmark.h>

namespace sb = swarmbench;

static void BM_ClassicBoidsTrial(benchmark::State& state) {
    sb::WorldConfig cfg;
    cfg.boid_count = static_cast<int>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        sb::SplitMix64 rng(seed++);
        sb::ClassicBoidRules rules;
        benchmark::DoNotOptimize(sb::run_boids(cfg, rng, rules));
    }
}
BENCHMARK(BM_ClassicBoidsTrial)->Arg(3)->Arg(30);

static void BM_MockBoidsTrial(benchmark::State& state) {
    const sb::WorldConfig cfg;
    std::uint64_t seed = 1;
    for (auto _ : state) {
        sb::SplitMix64 rng(seed++);
        sb::MockChatModel model(cfg, sb::AcoConfig{}, rng);
        sb::LlmBoidRules rules(model, 3);
        benchmark::DoNotOptimize(sb::run_boids(cfg, rng, rules));
    }
}
BENCHMARK(BM_MockBoidsTrial);

static void BM_ClassicAcoTrial(benchmark::State& state) {
    sb::AcoConfig cfg;
    cfg.iterations = static_cast<int>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        sb::SplitMix64 rng(seed++);
        sb::ClassicAcoRules rules(rng);
        benchmark::DoNotOptimize(sb::run_aco(cfg, rng, rules));
    }
}
BENCHMARK(BM_ClassicAcoTrial)->Arg(18)->Arg(200)->Arg(500);

static void BM_MockAcoTrial(benchmark::State& state) {
    const sb::AcoConfig cfg;
    std::uint64_t seed = 1;
    for (auto _ : state) {
        sb::SplitMix64 rng(seed++);
        sb::MockChatModel model(sb::WorldConfig{}, cfg, rng);
        sb::LlmAcoRules rules(model, 3);
        benchmark::DoNotOptimize(sb::run_aco(cfg, rng, rules));
    }
}
BENCHMARK(BM_MockAcoTrial);

static void BM_ParseVec2(benchmark::State& state) {
    const std::string text = "( -0.123456789, 1.5e-3 )";
    for (auto _ : state) benchmark::DoNotOptimize(sb::parse_vec2(text));
}
BENCHMARK(BM_ParseVec2);

static void BM_RenderSelectPrompt(benchmark::State& state) {
    const sb::AcoConfig cfg;
    const auto bindings = sb::aco_select_bindings(sb::initial_aco_state(cfg), cfg);
    const auto& tmpl = sb::prompt_template(sb::TemplateId::kAcoSelect);
    for (auto _ : state) benchmark::DoNotOptimize(sb::render(tmpl, bindings));
}
BENCHMARK(BM_RenderSelectPrompt);
BENCHMARK_MAIN();
