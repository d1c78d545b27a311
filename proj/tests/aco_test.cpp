#include "swarmbench/aco.hpp"
#include "swarmbench/llm_rules.hpp"
#include "swarmbench/mock_model.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace swarmbench;

namespace {

AcoConfig lengths(double s, double l) {
    AcoConfig cfg;
    cfg.short_length = s;
    cfg.long_length = l;
    return cfg;
}

AcoState with(double s, double l) {
    AcoState st;
    st.pheromone_short = s;
    st.pheromone_long = l;
    return st;
}

// Every rule fails.
class FailingAcoRules final : public AcoRules {
public:
    std::optional<PathChoice> select(const AcoState&, const AcoConfig&) override { return std::nullopt; }
    std::optional<PheromonePair> deposit(const AcoState&, PathChoice, const AcoConfig&) override { return std::nullopt; }
    std::optional<PheromonePair> evaporate(const AcoState&, const AcoConfig&) override { return PheromonePair{-1, 2}; }
};

// Replies with pheromones below the floor.
class DrainingAcoRules final : public AcoRules {
public:
    std::optional<PathChoice> select(const AcoState&, const AcoConfig&) override { return PathChoice::kLong; }
    std::optional<PheromonePair> deposit(const AcoState& s, PathChoice, const AcoConfig&) override {
        return s.pheromones();
    }
    std::optional<PheromonePair> evaporate(const AcoState&, const AcoConfig&) override { return PheromonePair{0, 0}; }
};

} // namespace

TEST(SelectPath, SymmetricSetupIsFair) {
    EXPECT_DOUBLE_EQ(short_path_probability({1, 1}, lengths(1, 1)), 0.5);
}

TEST(SelectPath, HandEvaluatedProbability) {
    EXPECT_DOUBLE_EQ(short_path_probability({2, 1}, lengths(1, 2)), 0.8);
}

TEST(SelectPath, ZeroShortPheromoneAlwaysLong) {
    const AcoConfig cfg = lengths(1, 2);
    EXPECT_DOUBLE_EQ(short_path_probability({0, 5}, cfg), 0.0);
    SplitMix64 rng(4);
    for (int i = 0; i < 1000; ++i) ASSERT_EQ(select_path(with(0, 5), cfg, rng), PathChoice::kLong);
}

TEST(SelectPath, BothWeightsZeroFallsBackToHalf) {
    EXPECT_DOUBLE_EQ(short_path_probability({0, 0}, lengths(1, 2)), 0.5);
}

TEST(SelectPath, ConsumesExactlyOneDraw) {
    const AcoConfig cfg;
    SplitMix64 a(10), b(10);
    select_path(with(1, 1), cfg, a);
    b.next();
    EXPECT_EQ(a.state(), b.state());
}

TEST(SelectPath, ProbabilityInvariantUnderWeightScaling) {
    SplitMix64 rng(17);
    for (int i = 0; i < 2000; ++i) {
        AcoConfig cfg = lengths(0.5 + rng.uniform(), 2 + rng.uniform());
        cfg.alpha = rng.uniform() * 3;
        cfg.beta = rng.uniform() * 3;
        const double s = 0.01 + rng.uniform() * 10;
        const double l = 0.01 + rng.uniform() * 10;
        const double k = 0.1 + rng.uniform() * 10;
        // Scaling both pheromones by k scales both weights by k^alpha.
        const double p1 = short_path_probability({s, l}, cfg);
        const double p2 = short_path_probability({s * k, l * k}, cfg);
        ASSERT_NEAR(p1, p2, 1e-12);
    }
}

TEST(Deposit, ShortPathGainsQOverLength) {
    const AcoConfig cfg;
    const AcoState s = deposit(with(1, 1), PathChoice::kShort, cfg);
    EXPECT_DOUBLE_EQ(s.pheromone_short, 2.0);
    EXPECT_DOUBLE_EQ(s.pheromone_long, 1.0);
}

TEST(Deposit, LongPathGainsHalf) {
    const AcoConfig cfg;
    const AcoState s = deposit(with(1, 1), PathChoice::kLong, cfg);
    EXPECT_DOUBLE_EQ(s.pheromone_short, 1.0);
    EXPECT_DOUBLE_EQ(s.pheromone_long, 1.5);
}

TEST(Deposit, ZeroQLeavesStateUnchanged) {
    AcoConfig cfg;
    cfg.deposit_q = 0;
    const AcoState s = deposit(with(1.25, 3.5), PathChoice::kShort, cfg);
    EXPECT_EQ(s.pheromones(), (PheromonePair{1.25, 3.5}));
}

TEST(Evaporate, TenPercent) {
    const AcoState s = evaporate(with(1.0, 2.0), AcoConfig{});
    EXPECT_DOUBLE_EQ(s.pheromone_short, 0.9);
    EXPECT_DOUBLE_EQ(s.pheromone_long, 1.8);
}

TEST(Evaporate, Composes) {
    const AcoConfig cfg;
    const AcoState s = evaporate(evaporate(with(1.0, 1.0), cfg), cfg);
    EXPECT_NEAR(s.pheromone_short, 0.81, 1e-15);
}

TEST(Evaporate, FloorIsFixedPoint) {
    const AcoConfig cfg;
    const AcoState s = evaporate(with(cfg.pheromone_floor, cfg.pheromone_floor), cfg);
    EXPECT_EQ(s.pheromone_short, cfg.pheromone_floor);
    EXPECT_EQ(s.pheromone_long, cfg.pheromone_floor);
}

TEST(RunAco, ZeroIterationsIsVacuous) {
    AcoConfig cfg;
    cfg.iterations = 0;
    SplitMix64 rng(1);
    ClassicAcoRules rules(rng);
    const TrialRecord r = run_aco(cfg, rng, rules);
    EXPECT_TRUE(r.selections.empty());
    EXPECT_TRUE(r.ratio_history.empty());
    EXPECT_TRUE(r.metrics.empty());
    EXPECT_EQ(r.undefined_metrics.size(), 7u);
}

TEST(RunAco, RatioHistoryReflectsDepositThenEvaporate) {
    const AcoConfig cfg;
    SplitMix64 rng(9);
    ClassicAcoRules rules(rng);
    const TrialRecord r = run_aco(cfg, rng, rules);
    AcoState replay = initial_aco_state(cfg);
    ASSERT_EQ(r.selections.size(), 18u);
    for (std::size_t t = 0; t < r.selections.size(); ++t) {
        replay = evaporate(deposit(replay, r.selections[t], cfg), cfg);
        ASSERT_DOUBLE_EQ(r.ratio_history[t],
                         replay.pheromone_short / (replay.pheromone_short + replay.pheromone_long));
        ASSERT_EQ(r.pheromone_trace[t], replay.pheromones());
    }
    EXPECT_EQ(r.final_pheromones, replay.pheromones());
}

TEST(RunAco, PheromonesNeverDropBelowFloor) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        AcoConfig cfg;
        cfg.iterations = 300;
        cfg.evaporation_rate = 0.6;
        SplitMix64 rng(seed);
        ClassicAcoRules rules(rng);
        const TrialRecord r = run_aco(cfg, rng, rules);
        for (const auto& p : r.pheromone_trace) {
            ASSERT_GE(p.short_path, cfg.pheromone_floor);
            ASSERT_GE(p.long_path, cfg.pheromone_floor);
        }
    }
}

TEST(RunAco, FloorAppliesToReplyPheromones) {
    const AcoConfig cfg;
    SplitMix64 rng(1);
    DrainingAcoRules rules;
    const TrialRecord r = run_aco(cfg, rng, rules);
    EXPECT_EQ(r.anomaly_count, 0);
    EXPECT_EQ(r.final_pheromones, (PheromonePair{cfg.pheromone_floor, cfg.pheromone_floor}));
}

TEST(RunAco, FailedRulesFallBackAndCountAnomalies) {
    const AcoConfig cfg;
    SplitMix64 rng(1);
    FailingAcoRules rules;
    const TrialRecord r = run_aco(cfg, rng, rules);
    EXPECT_EQ(r.selections.size(), 18u);
    EXPECT_EQ(r.anomaly_count, 54);
    EXPECT_EQ(r.rule_evaluations, 54);
    for (const auto& p : r.pheromone_trace) {
        EXPECT_GE(p.short_path, cfg.pheromone_floor);
        EXPECT_GE(p.long_path, cfg.pheromone_floor);
    }
}

TEST(RunAco, ClassicPromptCountIsZero) {
    const AcoConfig cfg;
    SplitMix64 rng(1);
    ClassicAcoRules rules(rng);
    EXPECT_EQ(run_aco(cfg, rng, rules).prompt_count, 0);
}

TEST(RunAco, MockMakesThreePromptsPerIteration) {
    const AcoConfig cfg;
    SplitMix64 rng(1);
    MockChatModel model(WorldConfig{}, cfg, rng);
    LlmAcoRules rules(model, 3);
    const TrialRecord r = run_aco(cfg, rng, rules);
    EXPECT_EQ(r.prompt_count, 54);
    EXPECT_EQ(r.attempt_count, 54);
    EXPECT_EQ(r.anomaly_count, 0);
}

TEST(RunAco, MockSelectionHistoryEqualsClassic) {
    AcoConfig cfg;
    cfg.iterations = 60;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        SplitMix64 a(seed), b(seed);
        ClassicAcoRules classic(a);
        MockChatModel model(WorldConfig{}, cfg, b);
        LlmAcoRules llm(model, 3);
        const TrialRecord rc = run_aco(cfg, a, classic);
        const TrialRecord rm = run_aco(cfg, b, llm);
        ASSERT_EQ(rc.selections, rm.selections) << "seed " << seed;
        ASSERT_EQ(rc.ratio_history, rm.ratio_history) << "seed " << seed;
    }
}

TEST(RunAco, ClassicLongRunFavoursShortPath) {
    AcoConfig cfg;
    cfg.iterations = 200;
    double late = 0;
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        SplitMix64 rng(seed);
        ClassicAcoRules rules(rng);
        const TrialRecord r = run_aco(cfg, rng, rules);
        int s = 0;
        for (int t = 150; t < 200; ++t) s += r.selections[static_cast<std::size_t>(t)] == PathChoice::kShort;
        late += s / 50.0;
    }
    EXPECT_GE(late / 30, 0.93);
}
