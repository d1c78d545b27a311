#pragma once

#include "swarmbench/config.hpp"
#include "swarmbench/types.hpp"

#include <optional>
#include <span>

namespace swarmbench {

// Behavioural metrics. Every defined value lies in [0, 1]. Boids metrics
// are averaged over the supplied snapshots; nullopt means undefined (fewer
// than two boids, or no snapshots).

/// Per snapshot: max(0, 1 - mean pairwise distance / max_distance).
/// max_distance is the world diagonal in trials.
std::optional<double> boids_cohesion(std::span<const SwarmState> snapshots, double max_distance);

/// Per snapshot: fraction of unordered pairs at distance >= min_distance.
std::optional<double> boids_separation(std::span<const SwarmState> snapshots, double min_distance);

/// Per boid: (1 + cos(v_i, mean neighbour velocity)) / 2, neighbours within
/// perception_radius. Boids with no neighbours, a near-zero velocity, or a
/// near-zero neighbour mean score the neutral 0.5. Mean over boids, then
/// over snapshots.
std::optional<double> boids_alignment(std::span<const SwarmState> snapshots, double perception_radius);

/// Arithmetic mean of the three Boids metrics.
double boids_fitness(double cohesion, double separation, double alignment) noexcept;

inline constexpr int kConvergenceWindow = 5;
inline constexpr double kConvergenceThreshold = 0.8;

/// First t >= window-1 whose trailing window of selections is >= 80% short;
/// score = 1 - t / iterations, or 0 when that never happens.
double aco_convergence_speed(std::span<const PathChoice> history, int iterations);

/// short / (short + long); 0 when the total is not positive.
double aco_solution_quality(PheromonePair final_pheromones) noexcept;

/// Short-path selection percentages (0..100) per phase; nullopt for an
/// empty phase.
struct PhaseRates {
    std::optional<double> early;
    std::optional<double> mid;
    std::optional<double> late;
};

PhaseRates aco_phase_rates(std::span<const PathChoice> history, PhaseBounds bounds);

/// Pools several runs' histories before computing per-phase percentages.
PhaseRates pooled_phase_rates(std::span<const std::vector<PathChoice>> histories, PhaseBounds bounds);

struct PhaseScore {
    double value = 0.0;
    /// Some phase had no selections and was scored 0.
    bool has_empty_phase = false;
};

inline constexpr double kMidPhaseTargetRate = 0.75;

/// Mean of: early 1 - |r - 0.5| / 0.5; mid clamp(1 - |r - 0.75| / 0.75, 0, 1);
/// late r. Rates are fractions derived from the percentages in `rates`.
PhaseScore learning_efficiency_from_rates(const PhaseRates& rates) noexcept;
PhaseScore aco_learning_efficiency(std::span<const PathChoice> history, PhaseBounds bounds);

inline constexpr double kStabilityReferenceDelta = 0.1;

/// max(0, 1 - mean |ratio[t+1] - ratio[t]| / 0.1); nullopt with < 2 ratios.
std::optional<double> aco_learning_stability(std::span<const double> ratio_history);

/// Recomputes all Boids metrics from record.boid_snapshots (initial
/// snapshot excluded) and stores them in record.metrics.
void fill_boids_metrics(TrialRecord& record, const WorldConfig& config);

/// Recomputes all ACO metrics from selections, ratio history and final
/// pheromones and stores them in record.metrics.
void fill_aco_metrics(TrialRecord& record, const AcoConfig& config);

} // namespace swarmbench
