#pragma once

#include "swarmbench/agent.hpp"
#include "swarmbench/rule_backend.hpp"

namespace swarmbench {

/// Boids rules answered by a chat model, one prompt per rule per boid.
/// Unparseable replies (after retries) return nullopt; TransportError
/// propagates.
class LlmBoidRules final : public BoidRules {
public:
    LlmBoidRules(ChatModel& model, int max_attempts) : model_(model), max_attempts_(max_attempts) {}

    std::optional<Vec2> separation(const BoidState& self, std::span<const BoidState> others,
                                   const WorldConfig& config) override;
    std::optional<Vec2> cohesion(const BoidState& self, std::span<const BoidState> others,
                                 const WorldConfig& config) override;
    std::optional<Vec2> alignment(const BoidState& self, std::span<const BoidState> others,
                                  const WorldConfig& config) override;

    RuleTally tally() const override { return tally_; }

private:
    std::optional<Vec2> ask_force(TemplateId id, const BoidState& self, std::span<const BoidState> others,
                                  const WorldConfig& config);

    ChatModel& model_;
    int max_attempts_;
    RuleTally tally_;
};

/// ACO rules answered by a chat model, three prompts per iteration.
class LlmAcoRules final : public AcoRules {
public:
    LlmAcoRules(ChatModel& model, int max_attempts) : model_(model), max_attempts_(max_attempts) {}

    std::optional<PathChoice> select(const AcoState& state, const AcoConfig& config) override;
    std::optional<PheromonePair> deposit(const AcoState& state, PathChoice chosen,
                                         const AcoConfig& config) override;
    std::optional<PheromonePair> evaporate(const AcoState& state, const AcoConfig& config) override;

    RuleTally tally() const override { return tally_; }

private:
    AgentReply ask_counted(TemplateId id, const Bindings& bindings);

    ChatModel& model_;
    int max_attempts_;
    RuleTally tally_;
};

} // namespace swarmbench
