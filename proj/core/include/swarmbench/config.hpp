#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace swarmbench {

struct WorldConfig {
    double width = 100.0;
    double height = 100.0;
    double separation_radius = 10.0;
    double perception_radius = 30.0;
    double min_separation_distance = 5.0;
    double max_speed = 4.0;
    double max_force = 1.0;
    int boid_count = 3;
    int iterations = 5;

    double diagonal() const noexcept;
    /// Throws ConfigError naming the first offending field.
    void validate() const;
};

/// Iteration indices splitting a run into early / mid / late phases:
/// early = [0, early_end), mid = [early_end, late_start), late = [late_start, iterations).
struct PhaseBounds {
    int early_end = 0;
    int late_start = 0;
};

enum class Phase : std::uint8_t { kEarly, kMid, kLate };

std::string_view to_string(Phase phase) noexcept;

struct AcoConfig {
    double short_length = 1.0;
    double long_length = 2.0;
    double alpha = 1.0;
    double beta = 1.0;
    double evaporation_rate = 0.1;
    double deposit_q = 1.0;
    double initial_pheromone = 1.0;
    double pheromone_floor = 0.01;
    int iterations = 18;
    /// Unset means thirds of `iterations`.
    std::optional<PhaseBounds> phase_bounds;

    PhaseBounds effective_phase_bounds() const noexcept;
    Phase phase_of(int step) const noexcept;

    /// iterations == 0 is a valid vacuous run; otherwise the phase bounds
    /// must satisfy 0 < early_end < late_start < iterations.
    void validate() const;
};

struct LlmEndpointConfig {
    std::string base_url = "http://localhost:1234/v1";
    std::string model_name = "gpt-4o-mini";
    /// Only ever populated from the environment; never serialized.
    std::optional<std::string> api_key;
    double temperature = 0.0;
    int max_attempts = 3;
    double timeout_seconds = 60.0;
    int max_inflight = 1;

    void validate() const;
};

/// Environment variable holding the bearer token for live endpoints.
inline constexpr const char* kApiKeyEnv = "SWARMBENCH_API_KEY";

struct HarnessConfig {
    int trials = 30;
    std::uint64_t base_seed = 1;
    /// When non-empty, overrides base_seed + trials.
    std::vector<std::uint64_t> seeds;
    std::string output_dir = "results";
    int latency_repetitions = 10;
    /// Artificial per-prompt delay for the mock backend.
    double mock_latency_seconds = 0.0;
    /// Worker threads for classic trials; 0 picks hardware concurrency.
    int workers = 0;

    void validate() const;
};

struct Config {
    WorldConfig world;
    AcoConfig aco;
    LlmEndpointConfig llm;
    HarnessConfig harness;

    void validate() const;
};

/// Parses a JSON document with optional sections world, aco, llm, harness.
/// Unknown sections or keys are rejected with a ConfigError naming the key.
Config parse_config(std::string_view json_text);
Config load_config(const std::filesystem::path& path);

/// Fills api_key from kApiKeyEnv when set and non-empty.
void apply_api_key_from_env(LlmEndpointConfig& endpoint);

} // namespace swarmbench
