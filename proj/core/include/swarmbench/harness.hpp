#pragma once

#include "swarmbench/chat_client.hpp"
#include "swarmbench/config.hpp"
#include "swarmbench/mock_model.hpp"
#include "swarmbench/types.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace swarmbench {

/// Trial i runs with seed base_seed + i.
std::vector<std::uint64_t> derive_seeds(std::uint64_t base_seed, int count);

struct ExperimentPlan {
    Scenario scenario = Scenario::kBoids;
    std::vector<Backend> backends{Backend::kClassic};
    /// Applied unchanged to every backend; trial i uses seeds[i].
    std::vector<std::uint64_t> seeds;
    Config config;
    std::filesystem::path output_dir;

    /// Seeds come from config.harness.seeds when given, otherwise
    /// derive_seeds(base_seed, trials).
    static ExperimentPlan from_config(Scenario scenario, std::vector<Backend> backends, const Config& config);

    int trials() const noexcept { return static_cast<int>(seeds.size()); }
    void validate() const;
};

struct RunOptions {
    /// Model behind the llm backend. When null, an OpenAiChatClient is
    /// built from plan.config.llm.
    std::shared_ptr<ChatModel> llm_model;
    MockSelectPolicy mock_select_policy = MockSelectPolicy::kClassical;
};

/// One trial. Exceptions from the backend (transport failures, invalid
/// replies that cannot fall back) end the trial with record.error set.
TrialRecord run_trial(Scenario scenario, Backend backend, int trial_id, std::uint64_t seed, const Config& config,
                      ChatModel* llm_model, const MockOptions& mock_options);

struct MetricStats {
    double mean = 0.0;
    /// Sample standard deviation; 0 for fewer than two values.
    double stddev = 0.0;
    int count = 0;
};

MetricStats describe(std::span<const double> values);

struct BackendSummary {
    Backend backend = Backend::kClassic;
    int trials = 0;
    int failed_trials = 0;
    std::map<std::string, MetricStats> metrics;
    double total_wall_clock_seconds = 0.0;
    double mean_wall_clock_seconds = 0.0;
    long long total_prompts = 0;
    long long total_attempts = 0;
    long long total_anomalies = 0;
    double total_model_latency_seconds = 0.0;
};

struct ExperimentSummary {
    Scenario scenario = Scenario::kBoids;
    /// Ordered by backend.
    std::vector<BackendSummary> backends;
    /// Mean per-trial wall clock of each non-classic backend divided by
    /// the classic one; present only when classic ran.
    std::map<Backend, double> slowdown_vs_classic;

    const BackendSummary* find(Backend backend) const;
};

/// Aggregates completed trials (errored trials only count toward
/// failed_trials). Pure function of `records`.
ExperimentSummary summarize(Scenario scenario, std::span<const TrialRecord> records);

struct ExperimentResult {
    /// Sorted by backend, then trial_id.
    std::vector<TrialRecord> records;
    ExperimentSummary summary;
    double plan_wall_clock_seconds = 0.0;

    bool all_ok() const;
};

/// Runs every (backend, seed) pair. Invalid plans throw ConfigError before
/// any trial starts; a failing trial is recorded and the plan continues.
/// Classic trials run on harness.workers threads; model-backed trials on
/// llm.max_inflight threads.
ExperimentResult run_experiment(const ExperimentPlan& plan, const RunOptions& options = {});

struct ProbePrompt {
    std::string label;
    std::string text;
};

struct ProbeRow {
    std::string label;
    int token_estimate = 0;
    double mean_latency_seconds = 0.0;
    double stddev_latency_seconds = 0.0;
    int successes = 0;
    int failures = 0;
};

/// Whitespace-separated word count times 1.3, rounded.
int estimate_tokens(std::string_view text);

/// Three path-selection prompts of increasing length (compact, standard,
/// extended); all ask for a short/long answer.
std::vector<ProbePrompt> default_probe_prompts(const AcoConfig& config);

/// Sends each prompt `repetitions` times (>= 3) and reports round-trip
/// latency statistics. Transport failures are counted per prompt.
std::vector<ProbeRow> latency_probe(ChatModel& model, std::span<const ProbePrompt> prompts, int repetitions = 10);

/// Memory in GiB for a model of params_billions * 1e9 parameters at
/// bits_per_param bits each: N * b / (8 * 1024^3).
double estimate_model_memory(double params_billions, double bits_per_param);

} // namespace swarmbench
