#include "swarmbench/llm_rules.hpp"

namespace swarmbench {

namespace {

void count(RuleTally& tally, const AgentReply& reply) {
    ++tally.prompts;
    tally.attempts += reply.attempts;
    tally.latency_seconds += reply.latency_seconds;
}

} // namespace

std::optional<Vec2> LlmBoidRules::ask_force(TemplateId id, const BoidState& self,
                                            std::span<const BoidState> others, const WorldConfig& config) {
    const AgentReply reply = ask(id, boid_rule_bindings(id, self, others, config), model_, max_attempts_);
    count(tally_, reply);
    return reply.value<Vec2>();
}

std::optional<Vec2> LlmBoidRules::separation(const BoidState& self, std::span<const BoidState> others,
                                             const WorldConfig& config) {
    return ask_force(TemplateId::kBoidSeparation, self, others, config);
}

std::optional<Vec2> LlmBoidRules::cohesion(const BoidState& self, std::span<const BoidState> others,
                                           const WorldConfig& config) {
    return ask_force(TemplateId::kBoidCohesion, self, others, config);
}

std::optional<Vec2> LlmBoidRules::alignment(const BoidState& self, std::span<const BoidState> others,
                                            const WorldConfig& config) {
    return ask_force(TemplateId::kBoidAlignment, self, others, config);
}

AgentReply LlmAcoRules::ask_counted(TemplateId id, const Bindings& bindings) {
    AgentReply reply = ask(id, bindings, model_, max_attempts_);
    count(tally_, reply);
    return reply;
}

std::optional<PathChoice> LlmAcoRules::select(const AcoState& state, const AcoConfig& config) {
    return ask_counted(TemplateId::kAcoSelect, aco_select_bindings(state, config)).value<PathChoice>();
}

std::optional<PheromonePair> LlmAcoRules::deposit(const AcoState& state, PathChoice chosen,
                                                  const AcoConfig& config) {
    return ask_counted(TemplateId::kAcoDeposit, aco_deposit_bindings(state, chosen, config))
        .value<PheromonePair>();
}

std::optional<PheromonePair> LlmAcoRules::evaporate(const AcoState& state, const AcoConfig& config) {
    return ask_counted(TemplateId::kAcoEvaporate, aco_evaporate_bindings(state, config)).value<PheromonePair>();
}

} // namespace swarmbench
