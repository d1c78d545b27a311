#include "swarmbench/reports.hpp"

#include "swarmbench/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace swarmbench {

namespace {

namespace fs = std::filesystem;

std::string csv_quote(std::string_view text) {
    if (text.find_first_of(",\"\n\r") == std::string_view::npos) {
        return std::string(text);
    }
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void write_file(const fs::path& path, const std::string& content, std::vector<fs::path>& written) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw ReportError("cannot write report file '" + path.string() + "'");
    }
    out << content;
    out.close();
    if (!out) {
        throw ReportError("failed while writing report file '" + path.string() + "'");
    }
    written.push_back(path);
}

std::vector<const TrialRecord*> ordered(std::span<const TrialRecord> records) {
    std::vector<const TrialRecord*> out;
    out.reserve(records.size());
    for (const TrialRecord& r : records) out.push_back(&r);
    std::stable_sort(out.begin(), out.end(), [](const TrialRecord* a, const TrialRecord* b) {
        if (a->backend != b->backend) return a->backend < b->backend;
        return a->trial_id < b->trial_id;
    });
    return out;
}

std::string optional_number(std::optional<double> v) { return v ? format_csv_number(*v) : std::string(); }

std::string trials_csv(const std::vector<const TrialRecord*>& rows, Scenario scenario) {
    const std::vector<std::string> columns = metric_columns(scenario);
    std::ostringstream out;
    out << "trial_id,seed,backend";
    for (const auto& c : columns) out << ',' << c;
    out << ",wall_clock_seconds,prompt_count,anomaly_count,status,error\n";
    for (const TrialRecord* r : rows) {
        out << r->trial_id << ',' << r->seed << ',' << to_string(r->backend);
        for (const auto& c : columns) out << ',' << optional_number(r->metric(c));
        out << ',' << format_csv_number(r->wall_clock_seconds) << ',' << r->prompt_count << ',' << r->anomaly_count
            << ',' << (r->ok() ? "ok" : "error") << ',' << csv_quote(r->error.value_or("")) << '\n';
    }
    return out.str();
}

std::string fitness_by_trial_csv(const std::vector<const TrialRecord*>& rows) {
    std::ostringstream out;
    out << "backend,trial_id,seed,fitness\n";
    for (const TrialRecord* r : rows) {
        if (!r->ok()) continue;
        out << to_string(r->backend) << ',' << r->trial_id << ',' << r->seed << ','
            << optional_number(r->metric(metric_names::kFitness)) << '\n';
    }
    return out.str();
}

std::string trajectories_csv(const std::vector<const TrialRecord*>& rows) {
    std::ostringstream out;
    out << "backend,trial_id,iteration,boid_id,x,y,vx,vy\n";
    for (const TrialRecord* r : rows) {
        for (std::size_t t = 0; t < r->boid_snapshots.size(); ++t) {
            for (const BoidState& b : r->boid_snapshots[t]) {
                out << to_string(r->backend) << ',' << r->trial_id << ',' << t << ',' << b.id << ','
                    << format_csv_number(b.position.x) << ',' << format_csv_number(b.position.y) << ','
                    << format_csv_number(b.velocity.x) << ',' << format_csv_number(b.velocity.y) << '\n';
            }
        }
    }
    return out.str();
}

std::string phase_rates_csv(const std::vector<const TrialRecord*>& rows) {
    struct Acc {
        double sum[3] = {0, 0, 0};
        int n[3] = {0, 0, 0};
    };
    std::map<Backend, Acc> acc;
    const std::string_view names[3] = {metric_names::kEarlyRate, metric_names::kMidRate, metric_names::kLateRate};
    for (const TrialRecord* r : rows) {
        if (!r->ok()) continue;
        Acc& a = acc[r->backend];
        for (int p = 0; p < 3; ++p) {
            if (auto v = r->metric(names[p])) {
                a.sum[p] += *v;
                ++a.n[p];
            }
        }
    }
    const char* phases[3] = {"early", "mid", "late"};
    std::ostringstream out;
    out << "backend,phase,short_selection_percent\n";
    for (const auto& [backend, a] : acc) {
        for (int p = 0; p < 3; ++p) {
            out << to_string(backend) << ',' << phases[p] << ','
                << (a.n[p] > 0 ? format_csv_number(100.0 * a.sum[p] / a.n[p]) : std::string()) << '\n';
        }
    }
    return out.str();
}

std::string selection_rate_csv(const std::vector<const TrialRecord*>& rows) {
    std::map<Backend, std::vector<std::pair<int, int>>> per_iteration; // (short, total)
    for (const TrialRecord* r : rows) {
        if (!r->ok()) continue;
        auto& v = per_iteration[r->backend];
        if (v.size() < r->selections.size()) v.resize(r->selections.size());
        for (std::size_t t = 0; t < r->selections.size(); ++t) {
            v[t].first += r->selections[t] == PathChoice::kShort ? 1 : 0;
            ++v[t].second;
        }
    }
    std::ostringstream out;
    out << "backend,iteration,short_selection_rate,trials\n";
    for (const auto& [backend, v] : per_iteration) {
        for (std::size_t t = 0; t < v.size(); ++t) {
            out << to_string(backend) << ',' << t << ','
                << format_csv_number(static_cast<double>(v[t].first) / v[t].second) << ',' << v[t].second << '\n';
        }
    }
    return out.str();
}

std::string aco_trace_csv(const std::vector<const TrialRecord*>& rows) {
    std::ostringstream out;
    out << "backend,trial_id,iteration,choice,pheromone_short,pheromone_long,ratio\n";
    for (const TrialRecord* r : rows) {
        for (std::size_t t = 0; t < r->selections.size(); ++t) {
            out << to_string(r->backend) << ',' << r->trial_id << ',' << t << ',' << to_string(r->selections[t])
                << ',' << format_csv_number(r->pheromone_trace[t].short_path) << ','
                << format_csv_number(r->pheromone_trace[t].long_path) << ','
                << format_csv_number(r->ratio_history[t]) << '\n';
        }
    }
    return out.str();
}

} // namespace

std::vector<std::string> metric_columns(Scenario scenario) {
    namespace m = metric_names;
    if (scenario == Scenario::kBoids) {
        return {std::string(m::kCohesion), std::string(m::kSeparation), std::string(m::kAlignment),
                std::string(m::kFitness)};
    }
    return {std::string(m::kConvergenceSpeed), std::string(m::kSolutionQuality),
            std::string(m::kLearningEfficiency), std::string(m::kLearningStability),
            std::string(m::kEarlyRate), std::string(m::kMidRate), std::string(m::kLateRate)};
}

std::string format_csv_number(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::string summary_json(const ExperimentSummary& summary) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["scenario"] = std::string(to_string(summary.scenario));
    ordered_json backends = ordered_json::object();
    for (const BackendSummary& s : summary.backends) {
        ordered_json b;
        b["trials"] = s.trials;
        b["failed_trials"] = s.failed_trials;
        ordered_json metrics = ordered_json::object();
        for (const auto& [name, stats] : s.metrics) {
            metrics[name] = {{"mean", stats.mean}, {"stddev", stats.stddev}, {"count", stats.count}};
        }
        b["metrics"] = std::move(metrics);
        b["total_wall_clock_seconds"] = s.total_wall_clock_seconds;
        b["mean_wall_clock_seconds"] = s.mean_wall_clock_seconds;
        b["total_prompts"] = s.total_prompts;
        b["total_attempts"] = s.total_attempts;
        b["total_anomalies"] = s.total_anomalies;
        b["total_model_latency_seconds"] = s.total_model_latency_seconds;
        backends[std::string(to_string(s.backend))] = std::move(b);
    }
    doc["backends"] = std::move(backends);
    ordered_json slowdown = ordered_json::object();
    for (const auto& [backend, ratio] : summary.slowdown_vs_classic) {
        slowdown[std::string(to_string(backend))] = ratio;
    }
    doc["slowdown_vs_classic"] = std::move(slowdown);
    return doc.dump(2) + "\n";
}

std::vector<fs::path> emit_reports(std::span<const TrialRecord> records, const ExperimentSummary& summary,
                                   const fs::path& output_dir) {
    if (records.empty()) {
        throw ReportError("no trial records to report");
    }
    std::error_code ec;
    fs::create_directories(output_dir, ec);
    if (ec || !fs::is_directory(output_dir)) {
        throw ReportError("cannot create report directory '" + output_dir.string() + "'");
    }

    const auto rows = ordered(records);
    std::vector<fs::path> written;
    write_file(output_dir / "trials.csv", trials_csv(rows, summary.scenario), written);
    write_file(output_dir / "summary.json", summary_json(summary), written);
    if (summary.scenario == Scenario::kBoids) {
        write_file(output_dir / "fitness_by_trial.csv", fitness_by_trial_csv(rows), written);
        write_file(output_dir / "trajectories.csv", trajectories_csv(rows), written);
    } else {
        write_file(output_dir / "phase_rates.csv", phase_rates_csv(rows), written);
        write_file(output_dir / "selection_rate_by_iteration.csv", selection_rate_csv(rows), written);
        write_file(output_dir / "aco_trace.csv", aco_trace_csv(rows), written);
    }
    return written;
}

} // namespace swarmbench
