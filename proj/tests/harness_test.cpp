#include "swarmbench/errors.hpp"
#include "swarmbench/harness.hpp"
#include "swarmbench/mock_model.hpp"

#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <numeric>

using namespace swarmbench;

namespace {

// Counts calls; replies "short" to everything.
class CountingModel final : public ChatModel {
public:
    Completion complete(const CompletionRequest&) override {
        ++calls;
        return {"short", 0.0};
    }
    std::atomic<int> calls{0};
};

class DownModel final : public ChatModel {
public:
    Completion complete(const CompletionRequest&) override { throw TransportError("endpoint down"); }
};

ExperimentPlan plan_for(Scenario scenario, std::vector<Backend> backends, int trials = 30) {
    Config cfg;
    cfg.harness.trials = trials;
    return ExperimentPlan::from_config(scenario, std::move(backends), cfg);
}

long long prompts_of(const ExperimentResult& r, Backend b) {
    long long n = 0;
    for (const auto& rec : r.records)
        if (rec.backend == b) n += rec.prompt_count;
    return n;
}

} // namespace

TEST(DeriveSeeds, BasePlusIndex) {
    EXPECT_EQ(derive_seeds(100, 3), (std::vector<std::uint64_t>{100, 101, 102}));
    EXPECT_TRUE(derive_seeds(1, 0).empty());
}

TEST(Plan, ExplicitSeedsOverrideBase) {
    Config cfg;
    cfg.harness.seeds = {5, 9};
    const auto plan = ExperimentPlan::from_config(Scenario::kAco, {Backend::kClassic}, cfg);
    EXPECT_EQ(plan.trials(), 2);
    EXPECT_EQ(plan.seeds, cfg.harness.seeds);
}

TEST(RunExperiment, BoidsMockPromptTotal) {
    const auto r = run_experiment(plan_for(Scenario::kBoids, {Backend::kClassic, Backend::kMockLlm}));
    EXPECT_TRUE(r.all_ok());
    EXPECT_EQ(r.records.size(), 60u);
    EXPECT_EQ(prompts_of(r, Backend::kMockLlm), 1350);
    EXPECT_EQ(prompts_of(r, Backend::kClassic), 0);
}

TEST(RunExperiment, AcoMockPromptTotal) {
    const auto r = run_experiment(plan_for(Scenario::kAco, {Backend::kMockLlm}));
    EXPECT_TRUE(r.all_ok());
    EXPECT_EQ(prompts_of(r, Backend::kMockLlm), 1620);
    for (const auto& rec : r.records) EXPECT_EQ(rec.prompt_count, 54);
}

TEST(RunExperiment, RecordsSortedByBackendThenTrial) {
    const auto r = run_experiment(plan_for(Scenario::kAco, {Backend::kMockLlm, Backend::kClassic}, 5));
    ASSERT_EQ(r.records.size(), 10u);
    for (std::size_t i = 0; i < 5; ++i) {
        EXPECT_EQ(r.records[i].backend, Backend::kClassic);
        EXPECT_EQ(r.records[i].trial_id, static_cast<int>(i));
        EXPECT_EQ(r.records[i + 5].backend, Backend::kMockLlm);
        EXPECT_EQ(r.records[i].seed, r.records[i + 5].seed);
    }
}

TEST(RunExperiment, PairedTrialsShareInitialConditions) {
    auto model = std::make_shared<CountingModel>();
    RunOptions opts;
    opts.llm_model = model;
    const auto r = run_experiment(plan_for(Scenario::kBoids, {Backend::kClassic, Backend::kLlm, Backend::kMockLlm}, 6),
                                  opts);
    ASSERT_EQ(r.records.size(), 18u);
    for (std::size_t i = 0; i < 6; ++i) {
        EXPECT_EQ(r.records[i].boid_snapshots.front(), r.records[i + 6].boid_snapshots.front());
        EXPECT_EQ(r.records[i].boid_snapshots.front(), r.records[i + 12].boid_snapshots.front());
    }
    EXPECT_EQ(model->calls.load(), 6 * 45 * 1 + 6 * 45 * 2);
}

TEST(RunExperiment, SummaryTotalsEqualRecordSums) {
    const auto r = run_experiment(plan_for(Scenario::kAco, {Backend::kClassic, Backend::kMockLlm}, 12));
    for (const auto& s : r.summary.backends) {
        long long prompts = 0, anomalies = 0;
        double wall = 0;
        std::vector<double> quality;
        for (const auto& rec : r.records) {
            if (rec.backend != s.backend) continue;
            prompts += rec.prompt_count;
            anomalies += rec.anomaly_count;
            wall += rec.wall_clock_seconds;
            quality.push_back(*rec.metric(metric_names::kSolutionQuality));
        }
        EXPECT_EQ(s.total_prompts, prompts);
        EXPECT_EQ(s.total_anomalies, anomalies);
        EXPECT_NEAR(s.total_wall_clock_seconds, wall, 1e-12);
        EXPECT_NEAR(s.metrics.at(std::string(metric_names::kSolutionQuality)).mean,
                    std::accumulate(quality.begin(), quality.end(), 0.0) / quality.size(), 1e-12);
    }
}

TEST(RunExperiment, TransportFailureRecordedAndPlanContinues) {
    RunOptions opts;
    opts.llm_model = std::make_shared<DownModel>();
    const auto r = run_experiment(plan_for(Scenario::kAco, {Backend::kClassic, Backend::kLlm}, 3), opts);
    EXPECT_FALSE(r.all_ok());
    ASSERT_EQ(r.records.size(), 6u);
    for (const auto& rec : r.records) {
        if (rec.backend == Backend::kClassic) {
            EXPECT_TRUE(rec.ok());
        } else {
            ASSERT_FALSE(rec.ok());
            EXPECT_NE(rec.error->find("endpoint down"), std::string::npos);
        }
    }
    const BackendSummary* llm = r.summary.find(Backend::kLlm);
    ASSERT_NE(llm, nullptr);
    EXPECT_EQ(llm->failed_trials, 3);
    EXPECT_FALSE(r.summary.slowdown_vs_classic.contains(Backend::kLlm));
}

TEST(RunExperiment, InvalidPlanRejectedBeforeAnyTrial) {
    auto model = std::make_shared<CountingModel>();
    RunOptions opts;
    opts.llm_model = model;
    ExperimentPlan plan = plan_for(Scenario::kAco, {Backend::kLlm}, 3);
    plan.config.aco.evaporation_rate = 2.0;
    EXPECT_THROW(run_experiment(plan, opts), ConfigError);
    EXPECT_EQ(model->calls.load(), 0);

    EXPECT_THROW(run_experiment(plan_for(Scenario::kAco, {})), ConfigError);
    EXPECT_THROW(run_experiment(plan_for(Scenario::kAco, {Backend::kClassic, Backend::kClassic})), ConfigError);
}

TEST(RunExperiment, ClassicDeterministicAcrossRuns) {
    const auto a = run_experiment(plan_for(Scenario::kBoids, {Backend::kClassic}, 8));
    const auto b = run_experiment(plan_for(Scenario::kBoids, {Backend::kClassic}, 8));
    for (std::size_t i = 0; i < a.records.size(); ++i) EXPECT_EQ(a.records[i].boid_snapshots, b.records[i].boid_snapshots);
}

TEST(RunExperiment, LongClassicAcoStaysCheap) {
    ExperimentPlan plan = plan_for(Scenario::kAco, {Backend::kClassic});
    plan.config.aco.iterations = 500;
    const auto r = run_experiment(plan);
    EXPECT_TRUE(r.all_ok());
    EXPECT_LT(r.plan_wall_clock_seconds, 5.0);
}

TEST(Describe, SampleStatistics) {
    const std::vector<double> v{1, 2, 3, 4};
    const MetricStats s = describe(v);
    EXPECT_DOUBLE_EQ(s.mean, 2.5);
    EXPECT_NEAR(s.stddev, std::sqrt(5.0 / 3.0), 1e-15);
    EXPECT_EQ(s.count, 4);
    EXPECT_DOUBLE_EQ(describe(std::vector<double>{7}).stddev, 0.0);
}

TEST(LatencyProbe, FixedDelayDominates) {
    SplitMix64 rng(1);
    MockChatModel model(WorldConfig{}, AcoConfig{}, rng, MockOptions{0.05});
    const auto prompts = default_probe_prompts(AcoConfig{});
    ASSERT_EQ(prompts.size(), 3u);
    EXPECT_LT(estimate_tokens(prompts[0].text), estimate_tokens(prompts[1].text));
    EXPECT_LT(estimate_tokens(prompts[1].text), estimate_tokens(prompts[2].text));
    const auto rows = latency_probe(model, prompts, 3);
    ASSERT_EQ(rows.size(), 3u);
    for (const auto& row : rows) {
        EXPECT_EQ(row.successes, 3);
        EXPECT_EQ(row.failures, 0);
        EXPECT_GE(row.mean_latency_seconds, 0.05);
        EXPECT_LE(row.mean_latency_seconds, 0.06);
    }
}

TEST(LatencyProbe, HalfSecondFixture) {
    SplitMix64 rng(1);
    MockChatModel model(WorldConfig{}, AcoConfig{}, rng, MockOptions{0.5});
    const std::vector<ProbePrompt> prompts{{"only", "Pick short or long."}};
    const auto rows = latency_probe(model, prompts, 3);
    EXPECT_GE(rows[0].mean_latency_seconds, 0.5);
    EXPECT_LE(rows[0].mean_latency_seconds, 0.6);
}

TEST(LatencyProbe, RejectsEmptyPromptList) {
    CountingModel model;
    EXPECT_THROW(latency_probe(model, std::vector<ProbePrompt>{}, 3), ConfigError);
    EXPECT_THROW(latency_probe(model, std::vector<ProbePrompt>{{"a", "b"}}, 2), ConfigError);
}

TEST(LatencyProbe, CountsTransportFailures) {
    DownModel model;
    const auto rows = latency_probe(model, std::vector<ProbePrompt>{{"a", "b"}}, 4);
    EXPECT_EQ(rows[0].failures, 4);
    EXPECT_EQ(rows[0].successes, 0);
}

TEST(EstimateTokens, WordsTimesOnePointThree) {
    EXPECT_EQ(estimate_tokens(""), 0);
    EXPECT_EQ(estimate_tokens("one two  three\tfour\nfive"), 7);
    EXPECT_EQ(estimate_tokens("a b c d e f g h i j"), 13);
}

TEST(ModelMemory, FrozenValues) {
    EXPECT_NEAR(estimate_model_memory(1, 32), 3.725290298461914, 1e-12);
    EXPECT_NEAR(estimate_model_memory(1, 4), 0.46566128730773926, 1e-12);
    EXPECT_NEAR(estimate_model_memory(90, 16), 167.63806343078613, 1e-9);
}

TEST(ModelMemory, RejectsNonPositiveInput) {
    EXPECT_THROW(estimate_model_memory(0, 16), ConfigError);
    EXPECT_THROW(estimate_model_memory(1, -4), ConfigError);
    EXPECT_THROW(estimate_model_memory(std::nan(""), 4), ConfigError);
}
