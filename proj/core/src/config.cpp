#include "swarmbench/config.hpp"

#include "swarmbench/errors.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace swarmbench {

using nlohmann::json;

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw ConfigError(message);
    }
}

void require_positive(double value, const char* name) {
    require(std::isfinite(value) && value > 0.0, std::string(name) + " must be a finite value > 0");
}

void require_positive(int value, const char* name) {
    require(value > 0, std::string(name) + " must be > 0");
}

// Walks one JSON object, dispatching each key to a field reader. Any key
// without a reader is an error naming "section.key".
class SectionReader {
public:
    SectionReader(const json& object, std::string section)
        : object_(object), section_(std::move(section)) {
        require(object_.is_object(), "config section '" + section_ + "' must be an object");
    }

    template <typename T>
    SectionReader& field(const std::string& key, T& out) {
        handlers_[key] = [this, key, &out](const json& value) {
            try {
                out = value.get<T>();
            } catch (const json::exception&) {
                throw ConfigError("config key '" + section_ + "." + key + "' has the wrong type");
            }
        };
        return *this;
    }

    SectionReader& custom(const std::string& key, std::function<void(const json&)> handler) {
        handlers_[key] = std::move(handler);
        return *this;
    }

    void read() const {
        for (const auto& [key, value] : object_.items()) {
            auto it = handlers_.find(key);
            if (it == handlers_.end()) {
                throw ConfigError("unknown config key '" + section_ + "." + key + "'");
            }
            it->second(value);
        }
    }

private:
    const json& object_;
    std::string section_;
    std::map<std::string, std::function<void(const json&)>> handlers_;
};

} // namespace

std::string_view to_string(Phase phase) noexcept {
    switch (phase) {
    case Phase::kEarly: return "early";
    case Phase::kMid: return "mid";
    case Phase::kLate: return "late";
    }
    return "unknown";
}

double WorldConfig::diagonal() const noexcept { return std::hypot(width, height); }

void WorldConfig::validate() const {
    require_positive(width, "world.width");
    require_positive(height, "world.height");
    require_positive(separation_radius, "world.separation_radius");
    require_positive(perception_radius, "world.perception_radius");
    require_positive(min_separation_distance, "world.min_separation_distance");
    require_positive(max_speed, "world.max_speed");
    require_positive(max_force, "world.max_force");
    require(boid_count >= 0, "world.boid_count must be >= 0");
    require(iterations >= 0, "world.iterations must be >= 0");
    require(separation_radius <= perception_radius,
            "world.separation_radius must not exceed world.perception_radius");
}

PhaseBounds AcoConfig::effective_phase_bounds() const noexcept {
    if (phase_bounds) {
        return *phase_bounds;
    }
    return {iterations / 3, (2 * iterations) / 3};
}

Phase AcoConfig::phase_of(int step) const noexcept {
    const PhaseBounds b = effective_phase_bounds();
    if (step < b.early_end) return Phase::kEarly;
    if (step < b.late_start) return Phase::kMid;
    return Phase::kLate;
}

void AcoConfig::validate() const {
    require_positive(short_length, "aco.short_length");
    require_positive(long_length, "aco.long_length");
    require(short_length < long_length, "aco.short_length must be less than aco.long_length");
    require(std::isfinite(alpha) && alpha >= 0.0, "aco.alpha must be finite and >= 0");
    require(std::isfinite(beta) && beta >= 0.0, "aco.beta must be finite and >= 0");
    require(evaporation_rate > 0.0 && evaporation_rate < 1.0, "aco.evaporation_rate must lie in (0, 1)");
    require_positive(deposit_q, "aco.deposit_q");
    require_positive(initial_pheromone, "aco.initial_pheromone");
    require(std::isfinite(pheromone_floor) && pheromone_floor > 0.0, "aco.pheromone_floor must be > 0");
    require(iterations >= 0, "aco.iterations must be >= 0");
    if (iterations > 0) {
        const PhaseBounds b = effective_phase_bounds();
        require(0 < b.early_end && b.early_end < b.late_start && b.late_start < iterations,
                "aco.phase_bounds must satisfy 0 < early_end < late_start < iterations");
    }
}

void LlmEndpointConfig::validate() const {
    require(!base_url.empty(), "llm.base_url must not be empty");
    require(!model_name.empty(), "llm.model_name must not be empty");
    require(std::isfinite(temperature) && temperature >= 0.0, "llm.temperature must be >= 0");
    require_positive(max_attempts, "llm.max_attempts");
    require_positive(timeout_seconds, "llm.timeout_seconds");
    require_positive(max_inflight, "llm.max_inflight");
}

void HarnessConfig::validate() const {
    require(trials >= 0, "harness.trials must be >= 0");
    require(latency_repetitions >= 3, "harness.latency_repetitions must be >= 3");
    require(std::isfinite(mock_latency_seconds) && mock_latency_seconds >= 0.0,
            "harness.mock_latency_seconds must be >= 0");
    require(workers >= 0, "harness.workers must be >= 0");
}

void Config::validate() const {
    world.validate();
    aco.validate();
    llm.validate();
    harness.validate();
}

Config parse_config(std::string_view json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("malformed config JSON: ") + e.what());
    }
    require(root.is_object(), "config root must be a JSON object");

    Config cfg;
    SectionReader top(root, "config");
    top.custom("world", [&](const json& v) {
        SectionReader(v, "world")
            .field("width", cfg.world.width)
            .field("height", cfg.world.height)
            .field("separation_radius", cfg.world.separation_radius)
            .field("perception_radius", cfg.world.perception_radius)
            .field("min_separation_distance", cfg.world.min_separation_distance)
            .field("max_speed", cfg.world.max_speed)
            .field("max_force", cfg.world.max_force)
            .field("boid_count", cfg.world.boid_count)
            .field("iterations", cfg.world.iterations)
            .read();
    });
    top.custom("aco", [&](const json& v) {
        SectionReader(v, "aco")
            .field("short_length", cfg.aco.short_length)
            .field("long_length", cfg.aco.long_length)
            .field("alpha", cfg.aco.alpha)
            .field("beta", cfg.aco.beta)
            .field("evaporation_rate", cfg.aco.evaporation_rate)
            .field("deposit_q", cfg.aco.deposit_q)
            .field("initial_pheromone", cfg.aco.initial_pheromone)
            .field("pheromone_floor", cfg.aco.pheromone_floor)
            .field("iterations", cfg.aco.iterations)
            .custom("phase_bounds", [&](const json& pb) {
                require(pb.is_array() && pb.size() == 2 && pb[0].is_number_integer() &&
                            pb[1].is_number_integer(),
                        "config key 'aco.phase_bounds' must be [early_end, late_start]");
                cfg.aco.phase_bounds = PhaseBounds{pb[0].get<int>(), pb[1].get<int>()};
            })
            .read();
    });
    top.custom("llm", [&](const json& v) {
        SectionReader(v, "llm")
            .field("base_url", cfg.llm.base_url)
            .field("model_name", cfg.llm.model_name)
            .field("temperature", cfg.llm.temperature)
            .field("max_attempts", cfg.llm.max_attempts)
            .field("timeout_seconds", cfg.llm.timeout_seconds)
            .field("max_inflight", cfg.llm.max_inflight)
            .read();
    });
    top.custom("harness", [&](const json& v) {
        SectionReader(v, "harness")
            .field("trials", cfg.harness.trials)
            .field("base_seed", cfg.harness.base_seed)
            .field("seeds", cfg.harness.seeds)
            .field("output_dir", cfg.harness.output_dir)
            .field("latency_repetitions", cfg.harness.latency_repetitions)
            .field("mock_latency_seconds", cfg.harness.mock_latency_seconds)
            .field("workers", cfg.harness.workers)
            .read();
    });
    top.read();

    cfg.validate();
    return cfg;
}

Config load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

void apply_api_key_from_env(LlmEndpointConfig& endpoint) {
    if (const char* key = std::getenv(kApiKeyEnv); key != nullptr && *key != '\0') {
        endpoint.api_key = std::string(key);
    }
}

} // namespace swarmbench
