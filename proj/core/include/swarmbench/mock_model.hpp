#pragma once

#include "swarmbench/chat_client.hpp"
#include "swarmbench/config.hpp"
#include "swarmbench/prompts.hpp"
#include "swarmbench/rng.hpp"

#include <string>

namespace swarmbench {

enum class MockSelectPolicy : std::uint8_t {
    /// Same probabilistic rule and draw as the classic engine.
    kClassical,
    /// Follows the phase instruction in the prompt: coin flip early;
    /// mid: with probability mid_greedy_weight take the better
    /// pheromone-to-distance path, otherwise a coin flip; late: always the
    /// better path.
    kPhaseScripted,
};

struct MockOptions {
    /// Sleep injected into every completion.
    double latency_seconds = 0.0;
    MockSelectPolicy select_policy = MockSelectPolicy::kClassical;
    double mid_greedy_weight = 0.75;
};

/// Offline stand-in for a language model: evaluates the classical rule
/// named by `id` on the typed bindings and answers in the template's reply
/// format. Selection draws from `rng` exactly as select_path does.
/// The asking boid's id is not part of the boid prompts; it is taken as the
/// smallest non-negative id missing from other_boids, which is exact for
/// swarms numbered 0..n-1.
std::string mock_reply(TemplateId id, const Bindings& bindings, const WorldConfig& world, const AcoConfig& aco,
                       SplitMix64& rng, const MockOptions& options = {});

/// ChatModel wrapper around mock_reply. Free-form requests (no template)
/// are answered with "short". Not thread-safe: one instance per trial.
class MockChatModel final : public ChatModel {
public:
    MockChatModel(WorldConfig world, AcoConfig aco, SplitMix64& rng, MockOptions options = {})
        : world_(world), aco_(std::move(aco)), rng_(rng), options_(options) {}

    Completion complete(const CompletionRequest& request) override;

private:
    WorldConfig world_;
    AcoConfig aco_;
    SplitMix64& rng_;
    MockOptions options_;
};

} // namespace swarmbench
