#include "swarmbench/mock_model.hpp"

#include "swarmbench/aco.hpp"
#include "swarmbench/boids.hpp"
#include "swarmbench/errors.hpp"
#include "swarmbench/parsers.hpp"

#include <chrono>
#include <set>
#include <thread>

namespace swarmbench {

namespace {

template <typename T>
const T& binding(const Bindings& bindings, std::string_view name) {
    auto it = bindings.find(name);
    if (it == bindings.end()) {
        throw TemplateError("mock model: missing binding '" + std::string(name) + "'", std::string(name));
    }
    const T* value = std::get_if<T>(&it->second);
    if (value == nullptr) {
        throw TemplateError("mock model: binding '" + std::string(name) + "' has the wrong type",
                            std::string(name));
    }
    return *value;
}

BoidState asking_boid(const Bindings& bindings, const std::vector<BoidState>& others) {
    std::set<int> taken;
    for (const BoidState& b : others) {
        taken.insert(b.id);
    }
    int id = 0;
    while (taken.contains(id)) {
        ++id;
    }
    return BoidState{id, binding<Vec2>(bindings, "position"), binding<Vec2>(bindings, "velocity")};
}

AcoConfig with_paths(AcoConfig aco, const PathTable& paths) {
    aco.short_length = paths.short_length;
    aco.long_length = paths.long_length;
    return aco;
}

AcoState state_from(const PathTable& paths) {
    AcoState state;
    state.set_pheromones(paths.pheromones);
    return state;
}

PathChoice better_ratio_path(const PathTable& paths) {
    const double short_ratio = paths.pheromones.short_path / paths.short_length;
    const double long_ratio = paths.pheromones.long_path / paths.long_length;
    return short_ratio >= long_ratio ? PathChoice::kShort : PathChoice::kLong;
}

PathChoice coin_flip(SplitMix64& rng) { return rng.uniform() < 0.5 ? PathChoice::kShort : PathChoice::kLong; }

PathChoice scripted_select(const Bindings& bindings, const PathTable& paths, SplitMix64& rng,
                           const MockOptions& options) {
    const std::string& phase = binding<std::string>(bindings, "current_phase");
    if (phase == to_string(Phase::kEarly)) {
        return coin_flip(rng);
    }
    if (phase == to_string(Phase::kMid)) {
        if (rng.uniform() < options.mid_greedy_weight) {
            return better_ratio_path(paths);
        }
        return coin_flip(rng);
    }
    return better_ratio_path(paths);
}

} // namespace

std::string mock_reply(TemplateId id, const Bindings& bindings, const WorldConfig& world, const AcoConfig& aco,
                       SplitMix64& rng, const MockOptions& options) {
    switch (id) {
    case TemplateId::kBoidSeparation:
    case TemplateId::kBoidCohesion:
    case TemplateId::kBoidAlignment: {
        const auto& others = binding<std::vector<BoidState>>(bindings, "other_boids");
        const BoidState self = asking_boid(bindings, others);
        Vec2 force;
        if (id == TemplateId::kBoidSeparation) {
            force = separation_force(self, others, binding<double>(bindings, "radius"), world);
        } else if (id == TemplateId::kBoidCohesion) {
            force = cohesion_force(self, others, binding<double>(bindings, "perception_radius"), world);
        } else {
            force = alignment_force(self, others, binding<double>(bindings, "perception_radius"), world);
        }
        return format_vec2_reply(force);
    }
    case TemplateId::kAcoSelect: {
        const auto& paths = binding<PathTable>(bindings, "paths");
        if (options.select_policy == MockSelectPolicy::kPhaseScripted) {
            return format_path_reply(scripted_select(bindings, paths, rng, options));
        }
        return format_path_reply(select_path(state_from(paths), with_paths(aco, paths), rng));
    }
    case TemplateId::kAcoDeposit: {
        const auto& paths = binding<PathTable>(bindings, "paths");
        const PathChoice chosen = parse_path(binding<std::string>(bindings, "chosen_path"));
        return format_pheromone_reply(deposit(state_from(paths), chosen, with_paths(aco, paths)).pheromones());
    }
    case TemplateId::kAcoEvaporate: {
        const auto& paths = binding<PathTable>(bindings, "paths");
        AcoConfig cfg = with_paths(aco, paths);
        cfg.evaporation_rate = binding<double>(bindings, "evaporation_rate");
        return format_pheromone_reply(evaporate(state_from(paths), cfg).pheromones());
    }
    }
    throw TemplateError("mock model: unknown template", "");
}

Completion MockChatModel::complete(const CompletionRequest& request) {
    const auto start = std::chrono::steady_clock::now();
    std::string text = "short";
    if (request.template_id && request.bindings != nullptr) {
        text = mock_reply(*request.template_id, *request.bindings, world_, aco_, rng_, options_);
    }
    if (options_.latency_seconds > 0.0) {
        std::this_thread::sleep_for(std::chrono::duration<double>(options_.latency_seconds));
    }
    const double latency = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return Completion{std::move(text), latency};
}

} // namespace swarmbench
