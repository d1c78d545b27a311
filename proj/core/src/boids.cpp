#include "swarmbench/boids.hpp"

#include "swarmbench/metrics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

namespace swarmbench {

namespace {

template <typename Fn>
void for_each_neighbour(const BoidState& self, std::span<const BoidState> others, double radius, Fn&& fn) {
    for (const BoidState& other : others) {
        if (other.id == self.id) {
            continue;
        }
        const double d = distance(self.position, other.position);
        if (d <= radius) {
            fn(other, d);
        }
    }
}

} // namespace

Vec2 separation_force(const BoidState& self, std::span<const BoidState> others, double radius,
                      const WorldConfig& config) {
    Vec2 force;
    for_each_neighbour(self, others, radius, [&](const BoidState& other, double d) {
        if (d < kEpsilon) {
            const Vec2 away = self.id < other.id ? Vec2{-1.0, 0.0} : Vec2{1.0, 0.0};
            force += away / kEpsilon;
            return;
        }
        force += (self.position - other.position) / (d * d);
    });
    return limit(force, config.max_force);
}

Vec2 cohesion_force(const BoidState& self, std::span<const BoidState> others, double perception_radius,
                    const WorldConfig& config) {
    Vec2 sum;
    int count = 0;
    for_each_neighbour(self, others, perception_radius, [&](const BoidState& other, double) {
        sum += other.position;
        ++count;
    });
    if (count == 0) {
        return {};
    }
    const Vec2 offset = sum / static_cast<double>(count) - self.position;
    if (offset.norm() < kEpsilon) {
        return {};
    }
    const Vec2 desired = with_length(offset, config.max_speed);
    return limit(desired - self.velocity, config.max_force);
}

Vec2 alignment_force(const BoidState& self, std::span<const BoidState> others, double perception_radius,
                     const WorldConfig& config) {
    Vec2 sum;
    int count = 0;
    for_each_neighbour(self, others, perception_radius, [&](const BoidState& other, double) {
        sum += other.velocity;
        ++count;
    });
    if (count == 0) {
        return {};
    }
    const Vec2 mean = sum / static_cast<double>(count);
    if (mean.norm() < kEpsilon) {
        return {};
    }
    return limit(with_length(mean, config.max_speed) - self.velocity, config.max_force);
}

SwarmState init_boids(const WorldConfig& config, SplitMix64& rng) {
    SwarmState swarm(static_cast<std::size_t>(config.boid_count));
    for (std::size_t i = 0; i < swarm.size(); ++i) {
        swarm[i].id = static_cast<int>(i);
        const double x = rng.uniform() * config.width;
        const double y = rng.uniform() * config.height;
        swarm[i].position = {x, y};
    }
    for (BoidState& boid : swarm) {
        const double angle = 2.0 * std::numbers::pi * rng.uniform();
        const double speed = config.max_speed * (1.0 - rng.uniform());
        boid.velocity = {speed * std::cos(angle), speed * std::sin(angle)};
    }
    return swarm;
}

double wrap_coordinate(double value, double extent) noexcept {
    double wrapped = value - extent * std::floor(value / extent);
    // floor can leave value == extent through rounding for tiny negatives.
    if (wrapped >= extent || wrapped < 0.0) {
        wrapped = 0.0;
    }
    return wrapped;
}

StepResult step(const SwarmState& state, const WorldConfig& config, BoidRules& rules) {
    SwarmState by_id = state;
    std::sort(by_id.begin(), by_id.end(), [](const BoidState& a, const BoidState& b) { return a.id < b.id; });

    StepResult result;
    result.swarm.reserve(state.size());
    std::vector<BoidState> others;
    others.reserve(state.size());

    for (const BoidState& self : state) {
        others.clear();
        for (const BoidState& b : by_id) {
            if (b.id != self.id) {
                others.push_back(b);
            }
        }

        Vec2 total;
        auto accumulate = [&](std::optional<Vec2> force) {
            ++result.rule_evaluations;
            if (!force || !is_finite(*force)) {
                ++result.anomalies;
                return;
            }
            total += limit(*force, config.max_force);
        };
        accumulate(rules.separation(self, others, config));
        accumulate(rules.cohesion(self, others, config));
        accumulate(rules.alignment(self, others, config));

        BoidState next = self;
        next.velocity = limit(self.velocity + total, config.max_speed);
        const Vec2 moved = self.position + next.velocity;
        next.position = {wrap_coordinate(moved.x, config.width), wrap_coordinate(moved.y, config.height)};
        result.swarm.push_back(next);
    }
    return result;
}

TrialRecord run_boids(const WorldConfig& config, SplitMix64& rng, BoidRules& rules) {
    using Clock = std::chrono::steady_clock;
    const auto start = Clock::now();

    TrialRecord record;
    record.scenario = Scenario::kBoids;
    record.boid_snapshots.reserve(static_cast<std::size_t>(config.iterations) + 1);
    record.boid_snapshots.push_back(init_boids(config, rng));

    for (int t = 0; t < config.iterations; ++t) {
        const auto iter_start = Clock::now();
        StepResult next = step(record.boid_snapshots.back(), config, rules);
        record.rule_evaluations += next.rule_evaluations;
        record.anomaly_count += next.anomalies;
        record.boid_snapshots.push_back(std::move(next.swarm));
        record.iteration_seconds.push_back(std::chrono::duration<double>(Clock::now() - iter_start).count());
    }

    const RuleTally tally = rules.tally();
    record.prompt_count = tally.prompts;
    record.attempt_count = tally.attempts;
    record.model_latency_seconds = tally.latency_seconds;
    record.wall_clock_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    fill_boids_metrics(record, config);
    return record;
}

} // namespace swarmbench
