#pragma once

#include "swarmbench/config.hpp"
#include "swarmbench/rng.hpp"
#include "swarmbench/rule_backend.hpp"
#include "swarmbench/types.hpp"

namespace swarmbench {

/// P(short) = w_s / (w_s + w_l), w = tau^alpha * (1/length)^beta.
/// Falls back to 0.5 when both weights are zero.
double short_path_probability(PheromonePair pheromones, const AcoConfig& config) noexcept;

/// Consumes exactly one uniform draw; short iff draw < P(short).
PathChoice select_path(const AcoState& state, const AcoConfig& config, SplitMix64& rng);

/// Adds deposit_q / length(chosen) to the chosen path only.
AcoState deposit(AcoState state, PathChoice chosen, const AcoConfig& config);

/// Multiplies both levels by (1 - evaporation_rate), then floors each at
/// pheromone_floor.
AcoState evaporate(AcoState state, const AcoConfig& config);

AcoState initial_aco_state(const AcoConfig& config) noexcept;

/// Classical rules; selection draws from the trial stream it was given.
class ClassicAcoRules final : public AcoRules {
public:
    explicit ClassicAcoRules(SplitMix64& rng) noexcept : rng_(rng) {}

    std::optional<PathChoice> select(const AcoState& state, const AcoConfig& config) override {
        return select_path(state, config, rng_);
    }
    std::optional<PheromonePair> deposit(const AcoState& state, PathChoice chosen,
                                         const AcoConfig& config) override {
        return swarmbench::deposit(state, chosen, config).pheromones();
    }
    std::optional<PheromonePair> evaporate(const AcoState& state, const AcoConfig& config) override {
        return swarmbench::evaporate(state, config).pheromones();
    }

private:
    SplitMix64& rng_;
};

/// Runs config.iterations iterations of select -> deposit -> evaporate.
/// Failed rules fall back: selection to a uniform coin flip drawn from
/// `rng`, pheromone updates to the classical formula; each fallback is one
/// anomaly. Reply pheromones are floored at pheromone_floor after
/// evaporation whatever the backend. Fills histories, counters, timings and
/// the ACO metrics; backend, seed and trial id are left for the caller.
TrialRecord run_aco(const AcoConfig& config, SplitMix64& rng, AcoRules& rules);

} // namespace swarmbench
