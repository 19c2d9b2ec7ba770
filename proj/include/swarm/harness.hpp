#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "swarm/abc.hpp"
#include "swarm/de.hpp"
#include "swarm/golden_section.hpp"
#include "swarm/problem.hpp"
#include "swarm/pso.hpp"
#include "swarm/run_result.hpp"
#include "swarm/stopping.hpp"

namespace swarm {

/// One bag of knobs covering every algorithm; per-algorithm configs are
/// derived from it so a campaign over several algorithms shares stopping
/// rules and population size.
struct ExperimentConfig {
    int population = 40;
    StopRules stop;

    // ABC family
    int limit = 100;
    int onlooker_count = 0;  // 0 -> population
    PerturbMode perturb_mode = PerturbMode::SingleDimension;
    GoldenSectionConfig gs;

    // DE
    double de_weight = 0.5;
    double de_crossover = 0.9;

    // PSO
    double pso_inertia = 0.729;
    double pso_cognitive = 1.49445;
    double pso_social = 1.49445;
    double pso_velocity_clamp = 0.5;
};

ColonyConfig colony_config_from(const ExperimentConfig& config);
DEConfig de_config_from(const ExperimentConfig& config);
PSOConfig pso_config_from(const ExperimentConfig& config);

/// Algorithm names in CLI order: abc, ils-abc, de, pso.
std::vector<std::string> algorithm_names();

/// One seeded run of a named algorithm. Throws std::invalid_argument for
/// an unknown algorithm name.
RunResult run_single(const Problem& problem, const std::string& algorithm,
                     const ExperimentConfig& config, std::uint64_t seed);

struct Summary {
    double mean = 0.0;
    double std_dev = 0.0;  // sample convention (n-1); 0 for n = 1
    double min = 0.0;
    double max = 0.0;
};

/// Throws std::invalid_argument on an empty sequence.
Summary summarize(std::span<const double> values);

struct ExperimentReport {
    std::string problem;
    std::string algorithm;
    Sense sense = Sense::Minimize;
    std::map<std::string, std::string> config;  // flat snapshot, full precision
    std::vector<RunResult> runs;
    double mean_value = 0.0;
    double std_value = 0.0;
    double best_value = 0.0;  // best across runs, native sense
    double mean_nfe = 0.0;
    double mean_time = 0.0;

    bool operator==(const ExperimentReport&) const = default;
};

/// n_runs independent runs seeded base_seed + run index (0-based). Runs
/// may execute on up to `jobs` threads; results are keyed by run index,
/// so the report is identical no matter the parallelism.
ExperimentReport run_experiment(const Problem& problem,
                                const std::string& algorithm,
                                const ExperimentConfig& config, int n_runs,
                                std::uint64_t base_seed, int jobs = 1);

/// AR = (nfe_one - nfe_other) / nfe_one * 100. Positive when `other` used
/// fewer evaluations. Throws std::domain_error unless nfe_one > 0.
double acceleration_rate(double nfe_one, double nfe_other);

struct ArTable {
    std::string reference;               // the algorithm others are compared to
    std::vector<std::string> problems;   // row labels
    std::vector<std::string> baselines;  // column labels
    std::vector<std::vector<double>> entries;  // [problem][baseline], percent
    std::vector<double> column_average;

    bool operator==(const ArTable&) const = default;
};

/// Builds the AR matrix of every baseline against `reference` from mean
/// NFE values. Every algorithm must cover the identical problem list;
/// mismatches throw std::invalid_argument.
ArTable ar_table(const std::vector<ExperimentReport>& reports,
                 const std::string& reference = "ils-abc");

/// Fixed-width text rendering (one decimal, as conventional for AR%).
std::string ar_table_to_text(const ArTable& table);

enum class ReportFormat { Csv, Json };

/// Parses "csv" / "json"; throws std::invalid_argument otherwise.
ReportFormat parse_report_format(const std::string& token);

/// CSV: one row per run with columns problem, algorithm, seed, best_value,
/// nfe, nfe_to_best, cycles, wall_time_s, then one summary row (seed
/// column holds "summary", numeric columns hold per-column means). JSON
/// mirrors the report losslessly. Throws std::runtime_error with the path
/// on I/O failure.
void write_report(const ExperimentReport& report, ReportFormat format,
                  const std::filesystem::path& path);

/// Same schema; reports are concatenated (CSV under one header, JSON as an
/// array).
void write_reports(std::span<const ExperimentReport> reports, ReportFormat format,
                   const std::filesystem::path& path);

std::string reports_to_csv(std::span<const ExperimentReport> reports);
std::string reports_to_json(std::span<const ExperimentReport> reports);

/// Reads back what write_report/write_reports produced in JSON form.
std::vector<ExperimentReport> read_reports_json(const std::filesystem::path& path);

}  // namespace swarm
