#include "swarmbench/types.hpp"

namespace swarmbench {

std::string_view to_string(PathChoice choice) noexcept {
    return choice == PathChoice::kShort ? "short" : "long";
}

std::string_view to_string(Backend backend) noexcept {
    switch (backend) {
    case Backend::kClassic: return "classic";
    case Backend::kLlm: return "llm";
    case Backend::kMockLlm: return "mock";
    }
    return "unknown";
}

std::string_view to_string(Scenario scenario) noexcept {
    return scenario == Scenario::kBoids ? "boids" : "aco";
}

std::optional<Backend> backend_from_string(std::string_view name) noexcept {
    if (name == "classic") return Backend::kClassic;
    if (name == "llm") return Backend::kLlm;
    if (name == "mock" || name == "mock_llm") return Backend::kMockLlm;
    return std::nullopt;
}

std::optional<Scenario> scenario_from_string(std::string_view name) noexcept {
    if (name == "boids") return Scenario::kBoids;
    if (name == "aco") return Scenario::kAco;
    return std::nullopt;
}

std::optional<double> TrialRecord::metric(std::string_view name) const {
    if (auto it = metrics.find(name); it != metrics.end()) {
        return it->second;
    }
    return std::nullopt;
}

} // namespace swarmbench
