#pragma once

#include "swarmbench/config.hpp"
#include "swarmbench/types.hpp"

#include <optional>
#include <span>

namespace swarmbench {

/// Model traffic accumulated by a rule backend over one trial.
struct RuleTally {
    int prompts = 0;
    int attempts = 0;
    double latency_seconds = 0.0;
};

/// Source of the three Boids steering forces. A rule returning nullopt
/// failed (for example an unparseable model reply); the engine substitutes
/// a zero force and counts an anomaly.
class BoidRules {
public:
    virtual ~BoidRules() = default;

    virtual std::optional<Vec2> separation(const BoidState& self, std::span<const BoidState> others,
                                           const WorldConfig& config) = 0;
    virtual std::optional<Vec2> cohesion(const BoidState& self, std::span<const BoidState> others,
                                         const WorldConfig& config) = 0;
    virtual std::optional<Vec2> alignment(const BoidState& self, std::span<const BoidState> others,
                                          const WorldConfig& config) = 0;

    virtual RuleTally tally() const { return {}; }
};

/// Source of the three ACO rules. nullopt means the rule failed and the
/// engine applies its fallback (uniform random selection, or the classical
/// formula for pheromone updates).
class AcoRules {
public:
    virtual ~AcoRules() = default;

    virtual std::optional<PathChoice> select(const AcoState& state, const AcoConfig& config) = 0;
    virtual std::optional<PheromonePair> deposit(const AcoState& state, PathChoice chosen,
                                                 const AcoConfig& config) = 0;
    virtual std::optional<PheromonePair> evaporate(const AcoState& state, const AcoConfig& config) = 0;

    virtual RuleTally tally() const { return {}; }
};

} // namespace swarmbench
