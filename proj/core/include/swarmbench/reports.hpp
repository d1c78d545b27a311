#pragma once

#include "swarmbench/harness.hpp"
#include "swarmbench/types.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace swarmbench {

/// Writes the report set for one experiment into `output_dir` (created if
/// missing) and returns the paths written:
///
///   trials.csv        one row per trial: trial_id, seed, backend, the
///                     scenario's metrics, [fitness], wall_clock_seconds,
///                     prompt_count, anomaly_count, status
///   summary.json      per-backend aggregates and slowdown ratios
///   boids:  fitness_by_trial.csv, trajectories.csv
///   aco:    phase_rates.csv, selection_rate_by_iteration.csv, aco_trace.csv
///
/// Rows are ordered by backend then trial_id; numbers use the shortest
/// round-trip representation, so identical inputs give byte-identical files.
/// Throws ReportError naming the path when a file cannot be written.
std::vector<std::filesystem::path> emit_reports(std::span<const TrialRecord> records, const ExperimentSummary& summary,
                                                const std::filesystem::path& output_dir);

/// Metric columns of trials.csv for a scenario, in order.
std::vector<std::string> metric_columns(Scenario scenario);

/// Shortest decimal text that parses back to `value`.
std::string format_csv_number(double value);

/// summary.json document text.
std::string summary_json(const ExperimentSummary& summary);

} // namespace swarmbench
