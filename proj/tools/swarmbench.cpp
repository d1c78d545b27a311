// swarmbench: run paired classic / LLM swarm trials, probe endpoint latency,
// and estimate model memory.

#include "swarmbench/config.hpp"
#include "swarmbench/errors.hpp"
#include "swarmbench/harness.hpp"
#include "swarmbench/mock_model.hpp"
#include "swarmbench/reports.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sb = swarmbench;

namespace {

struct CommonEndpointFlags {
    std::string config_path;
    std::optional<std::string> endpoint;
    std::optional<std::string> model;
};

sb::Config load(const CommonEndpointFlags& flags) {
    sb::Config cfg = flags.config_path.empty() ? sb::Config{} : sb::load_config(flags.config_path);
    if (flags.endpoint) cfg.llm.base_url = *flags.endpoint;
    if (flags.model) cfg.llm.model_name = *flags.model;
    sb::apply_api_key_from_env(cfg.llm);
    return cfg;
}

void print_summary(const sb::ExperimentResult& result) {
    const auto& summary = result.summary;
    std::printf("scenario: %s\n", std::string(sb::to_string(summary.scenario)).c_str());
    for (const auto& s : summary.backends) {
        std::printf("  %-8s trials=%d failed=%d prompts=%lld anomalies=%lld wall=%.4fs (%.6fs/trial)\n",
                    std::string(sb::to_string(s.backend)).c_str(), s.trials, s.failed_trials, s.total_prompts,
                    s.total_anomalies, s.total_wall_clock_seconds, s.mean_wall_clock_seconds);
        for (const auto& [name, stats] : s.metrics) {
            std::printf("    %-20s mean=%.4f sd=%.4f\n", name.c_str(), stats.mean, stats.stddev);
        }
    }
    for (const auto& [backend, ratio] : summary.slowdown_vs_classic) {
        std::printf("  slowdown %s vs classic: %.1fx\n", std::string(sb::to_string(backend)).c_str(), ratio);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classic vs LLM-driven swarm benchmark harness"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "Run seeded paired trials and write reports");
    CommonEndpointFlags run_flags;
    std::string scenario_name = "boids";
    std::vector<std::string> backend_names{"classic"};
    std::optional<int> trials;
    std::optional<std::uint64_t> seed;
    std::optional<int> iterations;
    std::optional<std::string> out_dir;
    std::optional<double> mock_latency;
    bool scripted_select = false;
    run->add_option("--scenario", scenario_name, "boids or aco")->check(CLI::IsMember({"boids", "aco"}));
    run->add_option("--backend", backend_names, "classic, llm or mock (repeatable for paired runs)")
        ->check(CLI::IsMember({"classic", "llm", "mock"}))
        ->delimiter(',');
    run->add_option("--trials", trials, "Number of trials (seeds)");
    run->add_option("--seed", seed, "Base seed; trial i uses seed + i");
    run->add_option("--iterations", iterations, "Iterations per trial");
    run->add_option("--config", run_flags.config_path, "JSON config file")->check(CLI::ExistingFile);
    run->add_option("--out", out_dir, "Report output directory");
    run->add_option("--endpoint", run_flags.endpoint, "OpenAI-compatible base URL, e.g. http://localhost:1234/v1");
    run->add_option("--model", run_flags.model, "Model name sent to the endpoint");
    run->add_option("--mock-latency", mock_latency, "Seconds of artificial delay per mock prompt");
    run->add_flag("--mock-phase-policy", scripted_select,
                  "Mock path selection follows the prompt's phase instruction instead of the classical rule");

    // probe-latency
    auto* probe = app.add_subcommand("probe-latency", "Measure endpoint round-trip latency for prompts of varying length");
    CommonEndpointFlags probe_flags;
    std::optional<int> repetitions;
    bool probe_mock = false;
    probe->add_option("--config", probe_flags.config_path, "JSON config file")->check(CLI::ExistingFile);
    probe->add_option("--endpoint", probe_flags.endpoint, "OpenAI-compatible base URL");
    probe->add_option("--model", probe_flags.model, "Model name sent to the endpoint");
    probe->add_option("--repetitions", repetitions, "Requests per prompt (>= 3)");
    probe->add_option("--mock-latency", mock_latency, "Use the offline mock with this delay instead of an endpoint");
    probe->add_flag("--mock", probe_mock, "Use the offline mock model instead of an endpoint");

    // estimate-memory
    auto* memory = app.add_subcommand("estimate-memory", "Approximate model memory in GB");
    double params_b = 0.0;
    double bits = 0.0;
    memory->add_option("--params-b", params_b, "Parameters in billions")->required();
    memory->add_option("--bits", bits, "Bits per parameter (32, 16, 8, 4, ...)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            sb::Config cfg = load(run_flags);
            if (trials) cfg.harness.trials = *trials;
            if (seed) {
                cfg.harness.base_seed = *seed;
                cfg.harness.seeds.clear();
            }
            if (trials) cfg.harness.seeds.clear();
            if (out_dir) cfg.harness.output_dir = *out_dir;
            if (mock_latency) cfg.harness.mock_latency_seconds = *mock_latency;
            const auto scenario = *sb::scenario_from_string(scenario_name);
            if (iterations) {
                if (scenario == sb::Scenario::kBoids) {
                    cfg.world.iterations = *iterations;
                } else {
                    cfg.aco.iterations = *iterations;
                    cfg.aco.phase_bounds.reset();
                }
            }
            std::vector<sb::Backend> backends;
            for (const auto& name : backend_names) backends.push_back(*sb::backend_from_string(name));

            auto plan = sb::ExperimentPlan::from_config(scenario, backends, cfg);
            sb::RunOptions options;
            if (scripted_select) options.mock_select_policy = sb::MockSelectPolicy::kPhaseScripted;
            const auto result = sb::run_experiment(plan, options);
            print_summary(result);
            if (!result.records.empty()) {
                for (const auto& path : sb::emit_reports(result.records, result.summary, plan.output_dir)) {
                    std::printf("wrote %s\n", path.string().c_str());
                }
            }
            for (const auto& r : result.records) {
                if (!r.ok()) {
                    std::fprintf(stderr, "trial %d (%s, seed %llu) failed: %s\n", r.trial_id,
                                 std::string(sb::to_string(r.backend)).c_str(),
                                 static_cast<unsigned long long>(r.seed), r.error->c_str());
                }
            }
            return result.all_ok() ? 0 : 1;
        }

        if (*probe) {
            sb::Config cfg = load(probe_flags);
            if (repetitions) cfg.harness.latency_repetitions = *repetitions;
            if (mock_latency) cfg.harness.mock_latency_seconds = *mock_latency;
            cfg.validate();
            std::unique_ptr<sb::ChatModel> model;
            sb::SplitMix64 rng(cfg.harness.base_seed);
            if (probe_mock || mock_latency) {
                model = std::make_unique<sb::MockChatModel>(cfg.world, cfg.aco, rng,
                                                            sb::MockOptions{cfg.harness.mock_latency_seconds});
            } else {
                model = std::make_unique<sb::OpenAiChatClient>(cfg.llm);
            }
            const auto prompts = sb::default_probe_prompts(cfg.aco);
            const auto rows = sb::latency_probe(*model, prompts, cfg.harness.latency_repetitions);
            std::printf("%-10s %8s %12s %12s %6s %6s\n", "prompt", "tokens~", "mean_s", "stddev_s", "ok", "fail");
            int failures = 0;
            for (const auto& row : rows) {
                std::printf("%-10s %8d %12.4f %12.4f %6d %6d\n", row.label.c_str(), row.token_estimate,
                            row.mean_latency_seconds, row.stddev_latency_seconds, row.successes, row.failures);
                failures += row.failures;
            }
            return failures == 0 ? 0 : 1;
        }

        if (*memory) {
            std::printf("%.2f GB\n", sb::estimate_model_memory(params_b, bits));
            return 0;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
