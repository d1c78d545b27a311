#pragma once

#include "swarmbench/vec2.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace swarmbench {

struct BoidState {
    int id = 0;
    Vec2 position;
    Vec2 velocity;

    friend bool operator==(const BoidState&, const BoidState&) = default;
};

/// Whole flock at one timestep.
using SwarmState = std::vector<BoidState>;

enum class PathChoice : std::uint8_t { kShort, kLong };

std::string_view to_string(PathChoice choice) noexcept;

/// Pheromone levels, short path first.
struct PheromonePair {
    double short_path = 0.0;
    double long_path = 0.0;

    friend bool operator==(const PheromonePair&, const PheromonePair&) = default;
};

struct AcoState {
    double pheromone_short = 0.0;
    double pheromone_long = 0.0;
    int iteration = 0;
    std::vector<PathChoice> selection_history;
    /// ratio_history[t] = short / (short + long) after iteration t completed.
    std::vector<double> ratio_history;

    PheromonePair pheromones() const noexcept { return {pheromone_short, pheromone_long}; }
    void set_pheromones(PheromonePair p) noexcept {
        pheromone_short = p.short_path;
        pheromone_long = p.long_path;
    }
};

enum class Backend : std::uint8_t { kClassic, kLlm, kMockLlm };
enum class Scenario : std::uint8_t { kBoids, kAco };

std::string_view to_string(Backend backend) noexcept;
std::string_view to_string(Scenario scenario) noexcept;
std::optional<Backend> backend_from_string(std::string_view name) noexcept;
std::optional<Scenario> scenario_from_string(std::string_view name) noexcept;

/// Names of the metrics stored in TrialRecord::metrics.
namespace metric_names {
inline constexpr std::string_view kCohesion = "cohesion";
inline constexpr std::string_view kSeparation = "separation";
inline constexpr std::string_view kAlignment = "alignment";
inline constexpr std::string_view kFitness = "fitness";
inline constexpr std::string_view kConvergenceSpeed = "convergence_speed";
inline constexpr std::string_view kSolutionQuality = "solution_quality";
inline constexpr std::string_view kLearningEfficiency = "learning_efficiency";
inline constexpr std::string_view kLearningStability = "learning_stability";
inline constexpr std::string_view kEarlyRate = "early_short_rate";
inline constexpr std::string_view kMidRate = "mid_short_rate";
inline constexpr std::string_view kLateRate = "late_short_rate";
} // namespace metric_names

/// One seeded run of one scenario under one backend.
struct TrialRecord {
    int trial_id = 0;
    std::uint64_t seed = 0;
    Backend backend = Backend::kClassic;
    Scenario scenario = Scenario::kBoids;

    /// Boids: initial swarm followed by one snapshot per step.
    std::vector<SwarmState> boid_snapshots;

    /// ACO: one entry per iteration.
    std::vector<PathChoice> selections;
    std::vector<double> ratio_history;
    std::vector<PheromonePair> pheromone_trace;
    PheromonePair final_pheromones;

    std::vector<double> iteration_seconds;

    /// Rule invocations that went through a language model (retries excluded).
    int prompt_count = 0;
    /// Completion calls including retries.
    int attempt_count = 0;
    int rule_evaluations = 0;
    int anomaly_count = 0;
    double wall_clock_seconds = 0.0;
    /// Sum of per-reply model latencies; never exceeds wall_clock_seconds.
    double model_latency_seconds = 0.0;

    /// Defined metrics only; undefined ones are listed in undefined_metrics.
    std::map<std::string, double, std::less<>> metrics;
    std::vector<std::string> undefined_metrics;

    /// Set when the trial aborted (for example a transport failure).
    std::optional<std::string> error;

    bool ok() const noexcept { return !error.has_value(); }
    std::optional<double> metric(std::string_view name) const;
};

} // namespace swarmbench
