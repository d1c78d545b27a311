#include "swarmbench/prompts.hpp"

#include "swarmbench/errors.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

namespace swarmbench {

namespace {

// Agent prompt texts, one paragraph each; placeholders are {name}.
constexpr std::array<PromptTemplate, 6> kTemplates{{
    {TemplateId::kBoidSeparation, "boid_separation",
     "You are a boid at position {position} with current velocity {velocity}. "
     "Other boids: {other_boids}. Your task is to avoid getting too close to "
     "other boids within a radius of {radius}. Return a (dx, dy) vector "
     "representing the separation force to apply to your velocity. Only output the vector as "
     "(dx, dy). NO additional text.",
     ReplyFormat::kVec2Tuple},
    {TemplateId::kBoidCohesion, "boid_cohesion",
     "You are a boid at position {position} with current velocity {velocity}. "
     "Other boids: {other_boids}. Your task is to move slightly toward the "
     "average position of nearby boids within a radius of {perception_radius}. "
     "Return a (dx, dy) vector representing the cohesion force to apply to your "
     "velocity. Only output the vector as "
     "(dx, dy). No additional text.",
     ReplyFormat::kVec2Tuple},
    {TemplateId::kBoidAlignment, "boid_alignment",
     "You are a boid at position {position} with velocity {velocity}. Other "
     "boids: {other_boids}. Your task is to align your velocity with the average "
     "velocity of nearby boids within a radius of {perception_radius}. Return a "
     "(dx, dy) vector representing the alignment force to apply to your velocity. "
     "Only output the vector as (dx, dy). "
     "NO additional text.",
     ReplyFormat::kVec2Tuple},
    {TemplateId::kAcoSelect, "aco_select",
     "You are an ant in an ACO simulation using an exploration—exploitation strategy. "
     "Current step: {step} of {max_iterations}. Paths: {paths}. "
     "Strategy: Early Phase (steps 0—{early_phase_end}): Explore—choose paths more randomly, "
     "aiming for roughly 50/50 exploration. "
     "Middle Phase (steps {mid_phase_end} to {late_phase_start}): Transition—start considering "
     "pheromones but continue occasional exploration. "
     "Late Phase (steps {late_phase_start}): Exploit—focus on the path with the better "
     "pheromone-to-distance ratio. "
     "Current phase: {current_phase}. In the {current_phase} phase, you should {phase_instruction}. "
     "Return only: short or long.",
     ReplyFormat::kPathWord},
    {TemplateId::kAcoDeposit, "aco_deposit",
     "You are a pheromone update agent in an Ant Colony Optimization simulation. "
     "The paths are given by {paths}. Based on the chosen path which is "
     "{chosen_path}, update the pheromone levels to reflect the quality of the "
     "chosen path and respond with the updated pheromones as an output: [x,y] "
     "where x corresponds to short and y corresponds to long. No additional text.",
     ReplyFormat::kPheromonePair},
    {TemplateId::kAcoEvaporate, "aco_evaporate",
     "You are a pheromone evaporation agent. The paths are given by {paths}. "
     "Based on the evaporation rate {evaporation_rate}, apply evaporation to "
     "the pheromone levels and return the pheromone levels in the format: [x,y] "
     "where x corresponds to short and y corresponds to long. No additional text.",
     ReplyFormat::kPheromonePair},
}};

std::string format_vec2(Vec2 v) {
    return "(" + format_prompt_number(v.x) + ", " + format_prompt_number(v.y) + ")";
}

struct BindingFormatter {
    std::string operator()(double v) const { return format_prompt_number(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(const std::string& v) const { return v; }
    std::string operator()(Vec2 v) const { return format_vec2(v); }
    std::string operator()(const std::vector<BoidState>& boids) const {
        std::string out = "[";
        for (std::size_t i = 0; i < boids.size(); ++i) {
            if (i > 0) out += ", ";
            out += "{id: " + std::to_string(boids[i].id) + ", position: " + format_vec2(boids[i].position) +
                   ", velocity: " + format_vec2(boids[i].velocity) + "}";
        }
        return out + "]";
    }
    std::string operator()(const PathTable& p) const {
        return "{short: {distance: " + format_prompt_number(p.short_length) +
               ", pheromone: " + format_prompt_number(p.pheromones.short_path) +
               "}, long: {distance: " + format_prompt_number(p.long_length) +
               ", pheromone: " + format_prompt_number(p.pheromones.long_path) + "}}";
    }
};

PathTable path_table(const AcoState& state, const AcoConfig& config) {
    return {config.short_length, config.long_length, state.pheromones()};
}

} // namespace

const PromptTemplate& prompt_template(TemplateId id) {
    return kTemplates.at(static_cast<std::size_t>(id));
}

std::string_view to_string(TemplateId id) noexcept {
    return kTemplates[static_cast<std::size_t>(id)].name;
}

std::vector<std::string> placeholders(const PromptTemplate& tmpl) {
    std::vector<std::string> names;
    const std::string_view text = tmpl.text;
    std::size_t pos = 0;
    while ((pos = text.find('{', pos)) != std::string_view::npos) {
        const std::size_t close = text.find('}', pos);
        if (close == std::string_view::npos) {
            break;
        }
        std::string name(text.substr(pos + 1, close - pos - 1));
        if (std::find(names.begin(), names.end(), name) == names.end()) {
            names.push_back(std::move(name));
        }
        pos = close + 1;
    }
    return names;
}

std::string format_prompt_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", value);
    std::string out(buf);
    if (out == "-0.000") {
        out = "0.000";
    }
    return out;
}

std::string format_binding(const BindingValue& value) {
    return std::visit(BindingFormatter{}, value);
}

std::string render(const PromptTemplate& tmpl, const Bindings& bindings) {
    const std::vector<std::string> names = placeholders(tmpl);
    for (const auto& [key, value] : bindings) {
        if (std::find(names.begin(), names.end(), key) == names.end()) {
            throw TemplateError("binding '" + key + "' matches no placeholder in template '" +
                                    std::string(tmpl.name) + "'",
                                key);
        }
    }

    std::string out;
    const std::string_view text = tmpl.text;
    out.reserve(text.size() + 256);
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t open = text.find('{', pos);
        if (open == std::string_view::npos) {
            out.append(text.substr(pos));
            break;
        }
        const std::size_t close = text.find('}', open);
        out.append(text.substr(pos, open - pos));
        const std::string_view name = text.substr(open + 1, close - open - 1);
        auto it = bindings.find(name);
        if (it == bindings.end()) {
            throw TemplateError("unresolved placeholder '{" + std::string(name) + "}' in template '" +
                                    std::string(tmpl.name) + "'",
                                std::string(name));
        }
        out += format_binding(it->second);
        pos = close + 1;
    }
    return out;
}

std::string_view phase_instruction(Phase phase) noexcept {
    switch (phase) {
    case Phase::kEarly: return "choose paths more randomly, aiming for roughly 50/50 exploration";
    case Phase::kMid: return "start considering pheromones but continue occasional exploration";
    case Phase::kLate: return "focus on the path with the better pheromone-to-distance ratio";
    }
    return "";
}

Bindings boid_rule_bindings(TemplateId id, const BoidState& self, std::span<const BoidState> others,
                            const WorldConfig& config) {
    Bindings b;
    b["position"] = self.position;
    b["velocity"] = self.velocity;
    b["other_boids"] = std::vector<BoidState>(others.begin(), others.end());
    switch (id) {
    case TemplateId::kBoidSeparation:
        b["radius"] = config.separation_radius;
        break;
    case TemplateId::kBoidCohesion:
    case TemplateId::kBoidAlignment:
        b["perception_radius"] = config.perception_radius;
        break;
    default:
        throw TemplateError("not a boid template: " + std::string(to_string(id)), "");
    }
    return b;
}

Bindings aco_select_bindings(const AcoState& state, const AcoConfig& config) {
    const PhaseBounds bounds = config.effective_phase_bounds();
    const Phase phase = config.phase_of(state.iteration);
    Bindings b;
    b["step"] = static_cast<std::int64_t>(state.iteration);
    b["max_iterations"] = static_cast<std::int64_t>(config.iterations);
    b["paths"] = path_table(state, config);
    b["early_phase_end"] = static_cast<std::int64_t>(bounds.early_end);
    // The middle phase begins where the early phase ends.
    b["mid_phase_end"] = static_cast<std::int64_t>(bounds.early_end);
    b["late_phase_start"] = static_cast<std::int64_t>(bounds.late_start);
    b["current_phase"] = std::string(to_string(phase));
    b["phase_instruction"] = std::string(phase_instruction(phase));
    return b;
}

Bindings aco_deposit_bindings(const AcoState& state, PathChoice chosen, const AcoConfig& config) {
    Bindings b;
    b["paths"] = path_table(state, config);
    b["chosen_path"] = std::string(to_string(chosen));
    return b;
}

Bindings aco_evaporate_bindings(const AcoState& state, const AcoConfig& config) {
    Bindings b;
    b["paths"] = path_table(state, config);
    b["evaporation_rate"] = config.evaporation_rate;
    return b;
}

} // namespace swarmbench
