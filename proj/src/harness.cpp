#include "swarm/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "swarm/ils_abc.hpp"

#include <json.hpp>

namespace swarm {

namespace {

std::string full_precision(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string gs_mode_name(GsMode mode) {
    return mode == GsMode::Paper ? "paper" : "standard";
}

std::string perturb_mode_name(PerturbMode mode) {
    return mode == PerturbMode::SingleDimension ? "single-dimension"
                                                : "all-dimensions";
}

std::map<std::string, std::string> config_snapshot(const std::string& algorithm,
                                                   const ExperimentConfig& c) {
    std::map<std::string, std::string> snap;
    snap["population"] = std::to_string(c.population);
    snap["max_cycles"] = std::to_string(c.stop.max_cycles);
    snap["max_nfe"] = std::to_string(c.stop.max_nfe);
    snap["diversity_tol"] = full_precision(c.stop.diversity_tol);
    snap["value_target"] = full_precision(c.stop.value_target);
    if (algorithm == "abc" || algorithm == "ils-abc") {
        snap["limit"] = std::to_string(c.limit);
        snap["onlooker_count"] = std::to_string(c.onlooker_count);
        snap["perturb_mode"] = perturb_mode_name(c.perturb_mode);
    }
    if (algorithm == "ils-abc") {
        snap["gs_mode"] = gs_mode_name(c.gs.mode);
        snap["gs_max_iters"] = std::to_string(c.gs.max_iters);
        snap["gs_width_tol"] = full_precision(c.gs.width_tol);
        snap["gs_a0"] = full_precision(c.gs.a0);
        snap["gs_b0"] = full_precision(c.gs.b0);
    }
    if (algorithm == "de") {
        snap["de_weight"] = full_precision(c.de_weight);
        snap["de_crossover"] = full_precision(c.de_crossover);
    }
    if (algorithm == "pso") {
        snap["pso_inertia"] = full_precision(c.pso_inertia);
        snap["pso_cognitive"] = full_precision(c.pso_cognitive);
        snap["pso_social"] = full_precision(c.pso_social);
        snap["pso_velocity_clamp"] = full_precision(c.pso_velocity_clamp);
    }
    return snap;
}

}  // namespace

ColonyConfig colony_config_from(const ExperimentConfig& config) {
    ColonyConfig c;
    c.colony_size = config.population;
    c.limit = config.limit;
    c.onlooker_count = config.onlooker_count;
    c.perturb_mode = config.perturb_mode;
    c.stop = config.stop;
    return c;
}

DEConfig de_config_from(const ExperimentConfig& config) {
    DEConfig c;
    c.population = config.population;
    c.weight = config.de_weight;
    c.crossover = config.de_crossover;
    c.stop = config.stop;
    return c;
}

PSOConfig pso_config_from(const ExperimentConfig& config) {
    PSOConfig c;
    c.swarm = config.population;
    c.inertia = config.pso_inertia;
    c.cognitive = config.pso_cognitive;
    c.social = config.pso_social;
    c.velocity_clamp = config.pso_velocity_clamp;
    c.stop = config.stop;
    return c;
}

std::vector<std::string> algorithm_names() { return {"abc", "ils-abc", "de", "pso"}; }

RunResult run_single(const Problem& problem, const std::string& algorithm,
                     const ExperimentConfig& config, std::uint64_t seed) {
    if (algorithm == "abc") {
        ColonyConfig c = colony_config_from(config);
        c.rng_seed = seed;
        return run_abc(problem, c);
    }
    if (algorithm == "ils-abc") {
        ColonyConfig c = colony_config_from(config);
        c.rng_seed = seed;
        return run_ils_abc(problem, c, config.gs);
    }
    if (algorithm == "de") {
        DEConfig c = de_config_from(config);
        c.rng_seed = seed;
        return run_de(problem, c);
    }
    if (algorithm == "pso") {
        PSOConfig c = pso_config_from(config);
        c.rng_seed = seed;
        return run_pso(problem, c);
    }
    throw std::invalid_argument("unknown algorithm '" + algorithm + "'");
}

Summary summarize(std::span<const double> values) {
    if (values.empty()) {
        throw std::invalid_argument("summarize requires a nonempty sequence");
    }
    Summary s;
    s.min = values[0];
    s.max = values[0];
    double sum = 0.0;
    for (double v : values) {
        sum += v;
        s.min = std::min(s.min, v);
        s.max = std::max(s.max, v);
    }
    s.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - s.mean) * (v - s.mean);
        s.std_dev = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    return s;
}

ExperimentReport run_experiment(const Problem& problem,
                                const std::string& algorithm,
                                const ExperimentConfig& config, int n_runs,
                                std::uint64_t base_seed, int jobs) {
    if (n_runs < 1) throw std::invalid_argument("n_runs must be at least 1");
    // Validate the algorithm name before spending any work.
    const auto names = algorithm_names();
    if (std::find(names.begin(), names.end(), algorithm) == names.end()) {
        throw std::invalid_argument("unknown algorithm '" + algorithm + "'");
    }

    ExperimentReport report;
    report.problem = problem.name;
    report.algorithm = algorithm;
    report.sense = problem.sense;
    report.config = config_snapshot(algorithm, config);
    report.runs.resize(n_runs);

    auto run_one = [&](int i) {
        report.runs[i] =
            run_single(problem, algorithm, config, base_seed + std::uint64_t(i));
    };

    const int workers = std::clamp(jobs, 1, n_runs);
    if (workers == 1) {
        for (int i = 0; i < n_runs; ++i) run_one(i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < n_runs; i = next.fetch_add(1)) {
                    run_one(i);
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    std::vector<double> values, nfes, times;
    values.reserve(n_runs);
    for (const RunResult& r : report.runs) {
        values.push_back(r.best_value);
        nfes.push_back(static_cast<double>(r.nfe));
        times.push_back(r.wall_time);
    }
    const Summary value_summary = summarize(values);
    report.mean_value = value_summary.mean;
    report.std_value = value_summary.std_dev;
    report.best_value =
        problem.sense == Sense::Maximize ? value_summary.max : value_summary.min;
    report.mean_nfe = summarize(nfes).mean;
    report.mean_time = summarize(times).mean;
    return report;
}

double acceleration_rate(double nfe_one, double nfe_other) {
    if (!(nfe_one > 0.0)) {
        throw std::domain_error("acceleration_rate requires nfe_one > 0");
    }
    return (nfe_one - nfe_other) / nfe_one * 100.0;
}

ArTable ar_table(const std::vector<ExperimentReport>& reports,
                 const std::string& reference) {
    ArTable table;
    table.reference = reference;

    std::map<std::string, std::map<std::string, double>> mean_nfe;
    for (const ExperimentReport& r : reports) {
        if (std::find(table.problems.begin(), table.problems.end(), r.problem) ==
            table.problems.end()) {
            table.problems.push_back(r.problem);
        }
        if (r.algorithm != reference &&
            std::find(table.baselines.begin(), table.baselines.end(),
                      r.algorithm) == table.baselines.end()) {
            table.baselines.push_back(r.algorithm);
        }
        mean_nfe[r.problem][r.algorithm] = r.mean_nfe;
    }
    if (table.baselines.empty()) {
        throw std::invalid_argument("ar_table needs at least one baseline besides '" +
                                    reference + "'");
    }

    for (const std::string& problem : table.problems) {
        const auto& row = mean_nfe.at(problem);
        if (!row.count(reference)) {
            throw std::invalid_argument("ar_table: problem '" + problem +
                                        "' has no report for reference '" +
                                        reference + "'");
        }
        std::vector<double> entries;
        for (const std::string& baseline : table.baselines) {
            auto it = row.find(baseline);
            if (it == row.end()) {
                throw std::invalid_argument("ar_table: problem '" + problem +
                                            "' has no report for '" + baseline +
                                            "'");
            }
            entries.push_back(acceleration_rate(it->second, row.at(reference)));
        }
        table.entries.push_back(std::move(entries));
    }

    table.column_average.assign(table.baselines.size(), 0.0);
    for (const auto& row : table.entries) {
        for (std::size_t c = 0; c < row.size(); ++c) table.column_average[c] += row[c];
    }
    for (double& avg : table.column_average) {
        avg /= static_cast<double>(table.problems.size());
    }
    return table;
}

std::string ar_table_to_text(const ArTable& table) {
    std::ostringstream out;
    char buf[64];
    out << "AR (%) vs " << table.reference << "\n";
    std::size_t label_width = std::string("average").size();
    for (const auto& p : table.problems) label_width = std::max(label_width, p.size());

    std::snprintf(buf, sizeof buf, "%-*s", static_cast<int>(label_width), "problem");
    out << buf;
    for (const auto& b : table.baselines) {
        std::snprintf(buf, sizeof buf, " %10s", b.c_str());
        out << buf;
    }
    out << "\n";
    for (std::size_t r = 0; r < table.problems.size(); ++r) {
        std::snprintf(buf, sizeof buf, "%-*s", static_cast<int>(label_width),
                      table.problems[r].c_str());
        out << buf;
        for (double e : table.entries[r]) {
            std::snprintf(buf, sizeof buf, " %10.1f", e);
            out << buf;
        }
        out << "\n";
    }
    std::snprintf(buf, sizeof buf, "%-*s", static_cast<int>(label_width), "average");
    out << buf;
    for (double avg : table.column_average) {
        std::snprintf(buf, sizeof buf, " %10.1f", avg);
        out << buf;
    }
    out << "\n";
    return out.str();
}

ReportFormat parse_report_format(const std::string& token) {
    if (token == "csv") return ReportFormat::Csv;
    if (token == "json") return ReportFormat::Json;
    throw std::invalid_argument("unknown report format '" + token + "'");
}

namespace {

nlohmann::json run_to_json(const RunResult& run) {
    return nlohmann::json{
        {"seed", run.seed},       {"best_x", run.best_x},
        {"best_value", run.best_value}, {"nfe", run.nfe},
        {"nfe_to_best", run.nfe_to_best}, {"cycles", run.cycles},
        {"wall_time_s", run.wall_time},
    };
}

RunResult run_from_json(const nlohmann::json& j) {
    RunResult run;
    run.seed = j.at("seed").get<std::uint64_t>();
    run.best_x = j.at("best_x").get<std::vector<double>>();
    run.best_value = j.at("best_value").get<double>();
    run.nfe = j.at("nfe").get<std::int64_t>();
    run.nfe_to_best = j.at("nfe_to_best").get<std::int64_t>();
    run.cycles = j.at("cycles").get<std::int64_t>();
    run.wall_time = j.at("wall_time_s").get<double>();
    return run;
}

nlohmann::json report_to_json(const ExperimentReport& report) {
    nlohmann::json j;
    j["problem"] = report.problem;
    j["algorithm"] = report.algorithm;
    j["sense"] = report.sense == Sense::Maximize ? "maximize" : "minimize";
    j["config"] = report.config;
    j["runs"] = nlohmann::json::array();
    for (const RunResult& run : report.runs) j["runs"].push_back(run_to_json(run));
    j["summary"] = {
        {"mean_value", report.mean_value}, {"std_value", report.std_value},
        {"best_value", report.best_value}, {"mean_nfe", report.mean_nfe},
        {"mean_time", report.mean_time},
    };
    return j;
}

ExperimentReport report_from_json(const nlohmann::json& j) {
    ExperimentReport report;
    report.problem = j.at("problem").get<std::string>();
    report.algorithm = j.at("algorithm").get<std::string>();
    report.sense = j.at("sense").get<std::string>() == "maximize"
                       ? Sense::Maximize
                       : Sense::Minimize;
    report.config = j.at("config").get<std::map<std::string, std::string>>();
    for (const auto& run : j.at("runs")) report.runs.push_back(run_from_json(run));
    const auto& summary = j.at("summary");
    report.mean_value = summary.at("mean_value").get<double>();
    report.std_value = summary.at("std_value").get<double>();
    report.best_value = summary.at("best_value").get<double>();
    report.mean_nfe = summary.at("mean_nfe").get<double>();
    report.mean_time = summary.at("mean_time").get<double>();
    return report;
}

void csv_row(std::ostringstream& out, const ExperimentReport& report,
             const RunResult& run) {
    out << report.problem << ',' << report.algorithm << ',' << run.seed << ','
        << full_precision(run.best_value) << ',' << run.nfe << ','
        << run.nfe_to_best << ',' << run.cycles << ','
        << full_precision(run.wall_time) << '\n';
}

}  // namespace

std::string reports_to_csv(std::span<const ExperimentReport> reports) {
    std::ostringstream out;
    out << "problem,algorithm,seed,best_value,nfe,nfe_to_best,cycles,wall_time_s\n";
    for (const ExperimentReport& report : reports) {
        for (const RunResult& run : report.runs) csv_row(out, report, run);

        double mean_nfe_to_best = 0.0, mean_cycles = 0.0;
        for (const RunResult& run : report.runs) {
            mean_nfe_to_best += static_cast<double>(run.nfe_to_best);
            mean_cycles += static_cast<double>(run.cycles);
        }
        const double n = static_cast<double>(report.runs.size());
        out << report.problem << ',' << report.algorithm << ",summary,"
            << full_precision(report.mean_value) << ','
            << full_precision(report.mean_nfe) << ','
            << full_precision(mean_nfe_to_best / n) << ','
            << full_precision(mean_cycles / n) << ','
            << full_precision(report.mean_time) << '\n';
    }
    return out.str();
}

std::string reports_to_json(std::span<const ExperimentReport> reports) {
    if (reports.size() == 1) return report_to_json(reports[0]).dump(2) + "\n";
    nlohmann::json j = nlohmann::json::array();
    for (const ExperimentReport& report : reports) j.push_back(report_to_json(report));
    return j.dump(2) + "\n";
}

void write_reports(std::span<const ExperimentReport> reports, ReportFormat format,
                   const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    out << (format == ReportFormat::Csv ? reports_to_csv(reports)
                                        : reports_to_json(reports));
    out.flush();
    if (!out) {
        throw std::runtime_error("failed while writing '" + path.string() + "'");
    }
}

void write_report(const ExperimentReport& report, ReportFormat format,
                  const std::filesystem::path& path) {
    write_reports({&report, 1}, format, path);
}

std::vector<ExperimentReport> read_reports_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    }
    nlohmann::json j;
    in >> j;
    std::vector<ExperimentReport> reports;
    if (j.is_array()) {
        for (const auto& item : j) reports.push_back(report_from_json(item));
    } else {
        reports.push_back(report_from_json(j));
    }
    return reports;
}

}  // namespace swarm
