#pragma once

#include "swarmbench/config.hpp"
#include "swarmbench/rng.hpp"
#include "swarmbench/rule_backend.hpp"
#include "swarmbench/types.hpp"

#include <span>

namespace swarmbench {

// Classical steering rules. Neighbours are the boids in `others` (self is
// skipped by id) whose Euclidean distance to self is <= the radius. Every
// returned force has |force| <= config.max_force.

/// Sum of unit vectors pointing away from each neighbour, weighted by
/// 1/distance. Coincident boids (distance < kEpsilon) push apart along x:
/// the lower id is pushed toward -x, the higher toward +x, with weight 1/kEpsilon.
Vec2 separation_force(const BoidState& self, std::span<const BoidState> others, double radius,
                      const WorldConfig& config);

/// Steer toward the neighbour centroid: desired velocity points at the
/// centroid with magnitude max_speed; force = desired - velocity. A boid
/// already at the centroid (offset < kEpsilon) gets zero force.
Vec2 cohesion_force(const BoidState& self, std::span<const BoidState> others, double perception_radius,
                    const WorldConfig& config);

/// Steer toward the neighbours' mean heading at max_speed. Zero when the
/// mean neighbour velocity is shorter than kEpsilon.
Vec2 alignment_force(const BoidState& self, std::span<const BoidState> others, double perception_radius,
                     const WorldConfig& config);

/// Draw order: for each boid in id order, position x then y (uniform over
/// the world); then for each boid in id order, heading angle
/// (2*pi*u) then speed (max_speed * (1 - u), so in (0, max_speed]).
SwarmState init_boids(const WorldConfig& config, SplitMix64& rng);

/// Maps a coordinate into [0, extent).
double wrap_coordinate(double value, double extent) noexcept;

class ClassicBoidRules final : public BoidRules {
public:
    std::optional<Vec2> separation(const BoidState& self, std::span<const BoidState> others,
                                   const WorldConfig& config) override {
        return separation_force(self, others, config.separation_radius, config);
    }
    std::optional<Vec2> cohesion(const BoidState& self, std::span<const BoidState> others,
                                 const WorldConfig& config) override {
        return cohesion_force(self, others, config.perception_radius, config);
    }
    std::optional<Vec2> alignment(const BoidState& self, std::span<const BoidState> others,
                                  const WorldConfig& config) override {
        return alignment_force(self, others, config.perception_radius, config);
    }
};

struct StepResult {
    SwarmState swarm;
    int rule_evaluations = 0;
    int anomalies = 0;
};

/// Synchronous update: every boid reads the same pre-step snapshot. The
/// three rule outputs are clamped to max_force, summed, added to velocity,
/// speed is clamped to max_speed, and position advances and wraps. Output
/// order matches input order; neighbour lists are always presented in id
/// order so the result does not depend on how the input is permuted.
StepResult step(const SwarmState& state, const WorldConfig& config, BoidRules& rules);

/// Full Boids trial: init_boids from `rng`, then config.iterations steps.
/// Fills snapshots, counters, timings and the cohesion / separation /
/// alignment / fitness metrics. Backend, seed and trial id are left for the
/// caller.
TrialRecord run_boids(const WorldConfig& config, SplitMix64& rng, BoidRules& rules);

} // namespace swarmbench
