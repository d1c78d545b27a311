#include "swarmbench/harness.hpp"

#include "swarmbench/aco.hpp"
#include "swarmbench/boids.hpp"
#include "swarmbench/errors.hpp"
#include "swarmbench/llm_rules.hpp"
#include "swarmbench/prompts.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>

namespace swarmbench {

namespace {

template <typename Fn>
void parallel_for(std::size_t n, int workers, Fn&& fn) {
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> threads;
    const auto count = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
    threads.reserve(count);
    for (std::size_t w = 0; w < count; ++w) {
        threads.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) fn(i);
        });
    }
}

int worker_count(Backend backend, const Config& config) {
    if (backend == Backend::kClassic) {
        if (config.harness.workers > 0) return config.harness.workers;
        return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    }
    return config.llm.max_inflight;
}

} // namespace

std::vector<std::uint64_t> derive_seeds(std::uint64_t base_seed, int count) {
    std::vector<std::uint64_t> seeds;
    seeds.reserve(static_cast<std::size_t>(std::max(0, count)));
    for (int i = 0; i < count; ++i) {
        seeds.push_back(base_seed + static_cast<std::uint64_t>(i));
    }
    return seeds;
}

ExperimentPlan ExperimentPlan::from_config(Scenario scenario, std::vector<Backend> backends, const Config& config) {
    ExperimentPlan plan;
    plan.scenario = scenario;
    plan.backends = std::move(backends);
    plan.config = config;
    plan.seeds = config.harness.seeds.empty() ? derive_seeds(config.harness.base_seed, config.harness.trials)
                                              : config.harness.seeds;
    plan.output_dir = config.harness.output_dir;
    return plan;
}

void ExperimentPlan::validate() const {
    config.validate();
    if (backends.empty()) {
        throw ConfigError("experiment plan names no backend");
    }
    std::vector<Backend> sorted = backends;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ConfigError("experiment plan lists a backend twice");
    }
}

TrialRecord run_trial(Scenario scenario, Backend backend, int trial_id, std::uint64_t seed, const Config& config,
                      ChatModel* llm_model, const MockOptions& mock_options) {
    SplitMix64 rng(seed);
    TrialRecord record;
    try {
        std::unique_ptr<ChatModel> mock;
        ChatModel* model = nullptr;
        if (backend == Backend::kMockLlm) {
            mock = std::make_unique<MockChatModel>(config.world, config.aco, rng, mock_options);
            model = mock.get();
        } else if (backend == Backend::kLlm) {
            if (llm_model == nullptr) {
                throw ConfigError("llm backend requires a model endpoint");
            }
            model = llm_model;
        }

        if (scenario == Scenario::kBoids) {
            if (model == nullptr) {
                ClassicBoidRules rules;
                record = run_boids(config.world, rng, rules);
            } else {
                LlmBoidRules rules(*model, config.llm.max_attempts);
                record = run_boids(config.world, rng, rules);
            }
        } else {
            if (model == nullptr) {
                ClassicAcoRules rules(rng);
                record = run_aco(config.aco, rng, rules);
            } else {
                LlmAcoRules rules(*model, config.llm.max_attempts);
                record = run_aco(config.aco, rng, rules);
            }
        }
    } catch (const std::exception& e) {
        record = TrialRecord{};
        record.error = e.what();
    }
    record.trial_id = trial_id;
    record.seed = seed;
    record.backend = backend;
    record.scenario = scenario;
    return record;
}

MetricStats describe(std::span<const double> values) {
    MetricStats stats;
    stats.count = static_cast<int>(values.size());
    if (values.empty()) {
        return stats;
    }
    stats.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - stats.mean) * (v - stats.mean);
        stats.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    return stats;
}

const BackendSummary* ExperimentSummary::find(Backend backend) const {
    for (const BackendSummary& s : backends) {
        if (s.backend == backend) return &s;
    }
    return nullptr;
}

ExperimentSummary summarize(Scenario scenario, std::span<const TrialRecord> records) {
    ExperimentSummary summary;
    summary.scenario = scenario;

    std::map<Backend, std::vector<const TrialRecord*>> by_backend;
    for (const TrialRecord& r : records) {
        by_backend[r.backend].push_back(&r);
    }

    for (const auto& [backend, group] : by_backend) {
        BackendSummary s;
        s.backend = backend;
        s.trials = static_cast<int>(group.size());
        std::map<std::string, std::vector<double>> values;
        int completed = 0;
        for (const TrialRecord* r : group) {
            if (!r->ok()) {
                ++s.failed_trials;
                continue;
            }
            ++completed;
            s.total_wall_clock_seconds += r->wall_clock_seconds;
            s.total_prompts += r->prompt_count;
            s.total_attempts += r->attempt_count;
            s.total_anomalies += r->anomaly_count;
            s.total_model_latency_seconds += r->model_latency_seconds;
            for (const auto& [name, value] : r->metrics) {
                values[name].push_back(value);
            }
        }
        if (completed > 0) {
            s.mean_wall_clock_seconds = s.total_wall_clock_seconds / completed;
        }
        for (const auto& [name, v] : values) {
            s.metrics[name] = describe(v);
        }
        summary.backends.push_back(std::move(s));
    }

    if (const BackendSummary* classic = summary.find(Backend::kClassic);
        classic != nullptr && classic->mean_wall_clock_seconds > 0.0) {
        for (const BackendSummary& s : summary.backends) {
            if (s.backend != Backend::kClassic && s.trials > s.failed_trials) {
                summary.slowdown_vs_classic[s.backend] = s.mean_wall_clock_seconds / classic->mean_wall_clock_seconds;
            }
        }
    }
    return summary;
}

bool ExperimentResult::all_ok() const {
    return std::all_of(records.begin(), records.end(), [](const TrialRecord& r) { return r.ok(); });
}

ExperimentResult run_experiment(const ExperimentPlan& plan, const RunOptions& options) {
    plan.validate();

    std::shared_ptr<ChatModel> live = options.llm_model;
    const bool needs_live = std::find(plan.backends.begin(), plan.backends.end(), Backend::kLlm) != plan.backends.end();
    if (needs_live && !live) {
        live = std::make_shared<OpenAiChatClient>(plan.config.llm);
    }

    MockOptions mock_options;
    mock_options.latency_seconds = plan.config.harness.mock_latency_seconds;
    mock_options.select_policy = options.mock_select_policy;

    const auto start = std::chrono::steady_clock::now();
    std::vector<Backend> backends = plan.backends;
    std::sort(backends.begin(), backends.end());

    ExperimentResult result;
    for (Backend backend : backends) {
        std::vector<TrialRecord> batch(plan.seeds.size());
        parallel_for(plan.seeds.size(), worker_count(backend, plan.config), [&](std::size_t i) {
            batch[i] = run_trial(plan.scenario, backend, static_cast<int>(i), plan.seeds[i], plan.config, live.get(),
                                 mock_options);
        });
        std::move(batch.begin(), batch.end(), std::back_inserter(result.records));
    }
    result.plan_wall_clock_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.summary = summarize(plan.scenario, result.records);
    return result;
}

int estimate_tokens(std::string_view text) {
    int words = 0;
    bool in_word = false;
    for (char c : text) {
        const bool ws = c == ' ' || c == '\t' || c == '\n' || c == '\r';
        if (!ws && !in_word) ++words;
        in_word = !ws;
    }
    return static_cast<int>(std::lround(words * 1.3));
}

std::vector<ProbePrompt> default_probe_prompts(const AcoConfig& config) {
    AcoState state = initial_aco_state(config);
    const std::string standard = render(prompt_template(TemplateId::kAcoSelect), aco_select_bindings(state, config));

    std::ostringstream compact;
    compact << "Two paths: short (distance " << format_prompt_number(config.short_length) << ", pheromone "
            << format_prompt_number(state.pheromone_short) << ") and long (distance "
            << format_prompt_number(config.long_length) << ", pheromone " << format_prompt_number(state.pheromone_long)
            << "). Pick the path an ant should take. Return only: short or long.";

    // Extended: the standard prompt plus a log of earlier iterations.
    SplitMix64 rng(1);
    std::ostringstream extended;
    extended << standard << " Recent history:";
    for (int t = 0; t < 24; ++t) {
        state.iteration = t;
        const PathChoice choice = select_path(state, config, rng);
        state = evaporate(deposit(std::move(state), choice, config), config);
        extended << " step " << t << " chose " << to_string(choice) << ", pheromones now short "
                 << format_prompt_number(state.pheromone_short) << " and long "
                 << format_prompt_number(state.pheromone_long) << ";";
    }
    extended << " Return only: short or long.";

    return {{"compact", compact.str()}, {"standard", standard}, {"extended", extended.str()}};
}

std::vector<ProbeRow> latency_probe(ChatModel& model, std::span<const ProbePrompt> prompts, int repetitions) {
    if (prompts.empty()) {
        throw ConfigError("latency probe needs at least one prompt");
    }
    if (repetitions < 3) {
        throw ConfigError("latency probe needs at least 3 repetitions per prompt");
    }
    std::vector<ProbeRow> rows;
    for (const ProbePrompt& p : prompts) {
        ProbeRow row;
        row.label = p.label;
        row.token_estimate = estimate_tokens(p.text);
        std::vector<double> latencies;
        for (int i = 0; i < repetitions; ++i) {
            try {
                latencies.push_back(model.complete(CompletionRequest{p.text, std::nullopt, nullptr}).latency_seconds);
            } catch (const TransportError&) {
                ++row.failures;
            }
        }
        const MetricStats stats = describe(latencies);
        row.successes = stats.count;
        row.mean_latency_seconds = stats.mean;
        row.stddev_latency_seconds = stats.stddev;
        rows.push_back(std::move(row));
    }
    return rows;
}

double estimate_model_memory(double params_billions, double bits_per_param) {
    if (!(params_billions > 0.0) || !(bits_per_param > 0.0) || !std::isfinite(params_billions) ||
        !std::isfinite(bits_per_param)) {
        throw ConfigError("model memory estimate needs positive parameter count and bit width");
    }
    const double params = params_billions * 1e9;
    return params * bits_per_param / (8.0 * 1024.0 * 1024.0 * 1024.0);
}

} // namespace swarmbench
