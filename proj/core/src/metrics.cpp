#include "swarmbench/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace swarmbench {

namespace {

bool has_pairs(std::span<const SwarmState> snapshots) {
    return !snapshots.empty() &&
           std::all_of(snapshots.begin(), snapshots.end(), [](const SwarmState& s) { return s.size() >= 2; });
}

template <typename PerSnapshot>
double mean_over_snapshots(std::span<const SwarmState> snapshots, PerSnapshot&& per_snapshot) {
    double sum = 0.0;
    for (const SwarmState& s : snapshots) {
        sum += per_snapshot(s);
    }
    return sum / static_cast<double>(snapshots.size());
}

double clamp01(double v) noexcept { return std::clamp(v, 0.0, 1.0); }

} // namespace

std::optional<double> boids_cohesion(std::span<const SwarmState> snapshots, double max_distance) {
    if (!has_pairs(snapshots) || !(max_distance > 0.0)) {
        return std::nullopt;
    }
    return mean_over_snapshots(snapshots, [&](const SwarmState& swarm) {
        double total = 0.0;
        int pairs = 0;
        for (std::size_t i = 0; i < swarm.size(); ++i) {
            for (std::size_t j = i + 1; j < swarm.size(); ++j) {
                total += distance(swarm[i].position, swarm[j].position);
                ++pairs;
            }
        }
        return std::max(0.0, 1.0 - (total / pairs) / max_distance);
    });
}

std::optional<double> boids_separation(std::span<const SwarmState> snapshots, double min_distance) {
    if (!has_pairs(snapshots)) {
        return std::nullopt;
    }
    return mean_over_snapshots(snapshots, [&](const SwarmState& swarm) {
        int kept = 0;
        int pairs = 0;
        for (std::size_t i = 0; i < swarm.size(); ++i) {
            for (std::size_t j = i + 1; j < swarm.size(); ++j) {
                if (distance(swarm[i].position, swarm[j].position) >= min_distance) {
                    ++kept;
                }
                ++pairs;
            }
        }
        return static_cast<double>(kept) / pairs;
    });
}

std::optional<double> boids_alignment(std::span<const SwarmState> snapshots, double perception_radius) {
    if (!has_pairs(snapshots)) {
        return std::nullopt;
    }
    return mean_over_snapshots(snapshots, [&](const SwarmState& swarm) {
        double total = 0.0;
        for (const BoidState& self : swarm) {
            Vec2 sum;
            int count = 0;
            for (const BoidState& other : swarm) {
                if (other.id != self.id && distance(self.position, other.position) <= perception_radius) {
                    sum += other.velocity;
                    ++count;
                }
            }
            double score = 0.5;
            if (count > 0) {
                const Vec2 mean = sum / static_cast<double>(count);
                const double n_self = self.velocity.norm();
                const double n_mean = mean.norm();
                if (n_self >= kEpsilon && n_mean >= kEpsilon) {
                    const double cos = (self.velocity.x * mean.x + self.velocity.y * mean.y) / (n_self * n_mean);
                    score = clamp01((1.0 + std::clamp(cos, -1.0, 1.0)) / 2.0);
                }
            }
            total += score;
        }
        return total / static_cast<double>(swarm.size());
    });
}

double boids_fitness(double cohesion, double separation, double alignment) noexcept {
    return (cohesion + separation + alignment) / 3.0;
}

double aco_convergence_speed(std::span<const PathChoice> history, int iterations) {
    if (iterations <= 0) {
        return 0.0;
    }
    const auto required = static_cast<int>(std::ceil(kConvergenceThreshold * kConvergenceWindow - 1e-12));
    int short_in_window = 0;
    for (std::size_t t = 0; t < history.size(); ++t) {
        short_in_window += history[t] == PathChoice::kShort ? 1 : 0;
        if (t >= static_cast<std::size_t>(kConvergenceWindow)) {
            short_in_window -= history[t - kConvergenceWindow] == PathChoice::kShort ? 1 : 0;
        }
        if (t + 1 >= static_cast<std::size_t>(kConvergenceWindow) && short_in_window >= required) {
            return clamp01(1.0 - static_cast<double>(t) / iterations);
        }
    }
    return 0.0;
}

double aco_solution_quality(PheromonePair final_pheromones) noexcept {
    const double total = final_pheromones.short_path + final_pheromones.long_path;
    if (!(total > 0.0)) {
        return 0.0;
    }
    return clamp01(final_pheromones.short_path / total);
}

namespace {

struct PhaseCounts {
    int shorts[3] = {0, 0, 0};
    int totals[3] = {0, 0, 0};

    void add(std::span<const PathChoice> history, PhaseBounds bounds) {
        for (std::size_t t = 0; t < history.size(); ++t) {
            const int ti = static_cast<int>(t);
            const int phase = ti < bounds.early_end ? 0 : (ti < bounds.late_start ? 1 : 2);
            ++totals[phase];
            shorts[phase] += history[t] == PathChoice::kShort ? 1 : 0;
        }
    }

    PhaseRates rates() const {
        auto rate = [&](int p) -> std::optional<double> {
            if (totals[p] == 0) return std::nullopt;
            return 100.0 * shorts[p] / totals[p];
        };
        return {rate(0), rate(1), rate(2)};
    }
};

} // namespace

PhaseRates aco_phase_rates(std::span<const PathChoice> history, PhaseBounds bounds) {
    PhaseCounts counts;
    counts.add(history, bounds);
    return counts.rates();
}

PhaseRates pooled_phase_rates(std::span<const std::vector<PathChoice>> histories, PhaseBounds bounds) {
    PhaseCounts counts;
    for (const auto& h : histories) {
        counts.add(h, bounds);
    }
    return counts.rates();
}

PhaseScore learning_efficiency_from_rates(const PhaseRates& rates) noexcept {
    PhaseScore score;
    double early = 0.0;
    double mid = 0.0;
    double late = 0.0;
    if (rates.early) {
        early = clamp01(1.0 - std::abs(*rates.early / 100.0 - 0.5) / 0.5);
    } else {
        score.has_empty_phase = true;
    }
    if (rates.mid) {
        mid = clamp01(1.0 - std::abs(*rates.mid / 100.0 - kMidPhaseTargetRate) / kMidPhaseTargetRate);
    } else {
        score.has_empty_phase = true;
    }
    if (rates.late) {
        late = clamp01(*rates.late / 100.0);
    } else {
        score.has_empty_phase = true;
    }
    score.value = (early + mid + late) / 3.0;
    return score;
}

PhaseScore aco_learning_efficiency(std::span<const PathChoice> history, PhaseBounds bounds) {
    return learning_efficiency_from_rates(aco_phase_rates(history, bounds));
}

std::optional<double> aco_learning_stability(std::span<const double> ratio_history) {
    if (ratio_history.size() < 2) {
        return std::nullopt;
    }
    double total = 0.0;
    for (std::size_t t = 0; t + 1 < ratio_history.size(); ++t) {
        total += std::abs(ratio_history[t + 1] - ratio_history[t]);
    }
    const double mean_delta = total / static_cast<double>(ratio_history.size() - 1);
    return clamp01(1.0 - mean_delta / kStabilityReferenceDelta);
}

namespace {

void store(TrialRecord& record, std::string_view name, std::optional<double> value) {
    if (value) {
        record.metrics[std::string(name)] = *value;
    } else {
        record.undefined_metrics.emplace_back(name);
    }
}

} // namespace

void fill_boids_metrics(TrialRecord& record, const WorldConfig& config) {
    namespace m = metric_names;
    record.metrics.clear();
    record.undefined_metrics.clear();

    std::span<const SwarmState> stepped;
    if (record.boid_snapshots.size() > 1) {
        stepped = std::span<const SwarmState>(record.boid_snapshots).subspan(1);
    }
    const auto cohesion = boids_cohesion(stepped, config.diagonal());
    const auto separation = boids_separation(stepped, config.min_separation_distance);
    const auto alignment = boids_alignment(stepped, config.perception_radius);
    store(record, m::kCohesion, cohesion);
    store(record, m::kSeparation, separation);
    store(record, m::kAlignment, alignment);
    std::optional<double> fitness;
    if (cohesion && separation && alignment) {
        fitness = boids_fitness(*cohesion, *separation, *alignment);
    }
    store(record, m::kFitness, fitness);
}

void fill_aco_metrics(TrialRecord& record, const AcoConfig& config) {
    namespace m = metric_names;
    record.metrics.clear();
    record.undefined_metrics.clear();

    const bool ran = !record.selections.empty();
    const PhaseBounds bounds = config.effective_phase_bounds();
    store(record, m::kConvergenceSpeed,
          ran ? std::optional(aco_convergence_speed(record.selections, config.iterations)) : std::nullopt);
    store(record, m::kSolutionQuality,
          ran ? std::optional(aco_solution_quality(record.final_pheromones)) : std::nullopt);

    const PhaseRates rates = aco_phase_rates(record.selections, bounds);
    const PhaseScore efficiency = learning_efficiency_from_rates(rates);
    store(record, m::kLearningEfficiency,
          ran && !efficiency.has_empty_phase ? std::optional(efficiency.value) : std::nullopt);
    store(record, m::kLearningStability, aco_learning_stability(record.ratio_history));

    auto fraction = [](std::optional<double> pct) -> std::optional<double> {
        if (!pct) return std::nullopt;
        return *pct / 100.0;
    };
    store(record, m::kEarlyRate, fraction(rates.early));
    store(record, m::kMidRate, fraction(rates.mid));
    store(record, m::kLateRate, fraction(rates.late));
}

} // namespace swarmbench
