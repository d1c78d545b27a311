#include "swarmbench/aco.hpp"

#include "swarmbench/metrics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace swarmbench {

namespace {

double path_weight(double pheromone, double length, const AcoConfig& config) noexcept {
    return std::pow(pheromone, config.alpha) * std::pow(1.0 / length, config.beta);
}

bool valid_pheromones(PheromonePair p) noexcept {
    return std::isfinite(p.short_path) && std::isfinite(p.long_path) && p.short_path >= 0.0 &&
           p.long_path >= 0.0;
}

} // namespace

double short_path_probability(PheromonePair pheromones, const AcoConfig& config) noexcept {
    const double ws = path_weight(pheromones.short_path, config.short_length, config);
    const double wl = path_weight(pheromones.long_path, config.long_length, config);
    const double total = ws + wl;
    if (!(total > 0.0)) {
        return 0.5;
    }
    return ws / total;
}

PathChoice select_path(const AcoState& state, const AcoConfig& config, SplitMix64& rng) {
    const double p_short = short_path_probability(state.pheromones(), config);
    return rng.uniform() < p_short ? PathChoice::kShort : PathChoice::kLong;
}

AcoState deposit(AcoState state, PathChoice chosen, const AcoConfig& config) {
    if (chosen == PathChoice::kShort) {
        state.pheromone_short += config.deposit_q / config.short_length;
    } else {
        state.pheromone_long += config.deposit_q / config.long_length;
    }
    return state;
}

AcoState evaporate(AcoState state, const AcoConfig& config) {
    const double keep = 1.0 - config.evaporation_rate;
    state.pheromone_short = std::max(config.pheromone_floor, state.pheromone_short * keep);
    state.pheromone_long = std::max(config.pheromone_floor, state.pheromone_long * keep);
    return state;
}

AcoState initial_aco_state(const AcoConfig& config) noexcept {
    AcoState state;
    state.pheromone_short = config.initial_pheromone;
    state.pheromone_long = config.initial_pheromone;
    return state;
}

TrialRecord run_aco(const AcoConfig& config, SplitMix64& rng, AcoRules& rules) {
    using Clock = std::chrono::steady_clock;
    const auto start = Clock::now();

    TrialRecord record;
    record.scenario = Scenario::kAco;
    AcoState state = initial_aco_state(config);

    for (int t = 0; t < config.iterations; ++t) {
        const auto iter_start = Clock::now();
        state.iteration = t;

        PathChoice chosen;
        if (auto choice = rules.select(state, config)) {
            chosen = *choice;
        } else {
            ++record.anomaly_count;
            chosen = rng.uniform() < 0.5 ? PathChoice::kShort : PathChoice::kLong;
        }
        state.selection_history.push_back(chosen);

        auto deposited = rules.deposit(state, chosen, config);
        if (deposited && valid_pheromones(*deposited)) {
            state.set_pheromones(*deposited);
        } else {
            ++record.anomaly_count;
            state = swarmbench::deposit(std::move(state), chosen, config);
        }

        auto evaporated = rules.evaporate(state, config);
        if (evaporated && valid_pheromones(*evaporated)) {
            state.pheromone_short = std::max(config.pheromone_floor, evaporated->short_path);
            state.pheromone_long = std::max(config.pheromone_floor, evaporated->long_path);
        } else {
            ++record.anomaly_count;
            state = swarmbench::evaporate(std::move(state), config);
        }

        record.rule_evaluations += 3;
        state.ratio_history.push_back(state.pheromone_short / (state.pheromone_short + state.pheromone_long));
        record.pheromone_trace.push_back(state.pheromones());
        record.iteration_seconds.push_back(std::chrono::duration<double>(Clock::now() - iter_start).count());
    }
    state.iteration = config.iterations;

    record.selections = std::move(state.selection_history);
    record.ratio_history = std::move(state.ratio_history);
    record.final_pheromones = state.pheromones();

    const RuleTally tally = rules.tally();
    record.prompt_count = tally.prompts;
    record.attempt_count = tally.attempts;
    record.model_latency_seconds = tally.latency_seconds;
    record.wall_clock_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    fill_aco_metrics(record, config);
    return record;
}

} // namespace swarmbench
