#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "swarm/harness.hpp"
#include "swarm/problem.hpp"

namespace {

constexpr const char* kBenchmarkSet[] = {"transistor", "gas", "heater", "gear"};

struct CliOptions {
    std::string command;
    std::string problem = "all";
    std::string algorithm = "all";
    int runs = 25;
    std::uint64_t seed = 1;
    int jobs = 1;

    int colony = 40;
    int limit = 100;
    int onlookers = 0;
    std::string perturb_mode = "single";
    std::int64_t cycles = 10'000;
    std::int64_t nfe_budget = 0;  // 0 -> unlimited
    double diversity_tol = 1e-4;

    std::string gs_mode = "paper";
    int gs_iters = 10;
    double gs_tol = 0.01;

    std::string heater_variant = "printed";
    std::string transistor_variant = "printed";
    int dim = 10;

    std::string format = "csv";
    std::string out;
};

swarm::ExperimentConfig experiment_config(const CliOptions& opt) {
    swarm::ExperimentConfig config;
    config.population = opt.colony;
    config.limit = opt.limit;
    config.onlooker_count = opt.onlookers;
    if (opt.perturb_mode == "single") {
        config.perturb_mode = swarm::PerturbMode::SingleDimension;
    } else if (opt.perturb_mode == "all") {
        config.perturb_mode = swarm::PerturbMode::AllDimensions;
    } else {
        throw std::invalid_argument("unknown perturb mode '" + opt.perturb_mode + "'");
    }
    config.stop.max_cycles = opt.cycles;
    config.stop.max_nfe = opt.nfe_budget > 0
                              ? opt.nfe_budget
                              : std::numeric_limits<std::int64_t>::max();
    config.stop.diversity_tol = opt.diversity_tol;

    if (opt.gs_mode == "paper") {
        config.gs.mode = swarm::GsMode::Paper;
    } else if (opt.gs_mode == "standard") {
        config.gs.mode = swarm::GsMode::Standard;
    } else {
        throw std::invalid_argument("unknown gs mode '" + opt.gs_mode + "'");
    }
    config.gs.max_iters = opt.gs_iters;
    config.gs.width_tol = opt.gs_tol;
    return config;
}

swarm::ProblemOptions problem_options(const CliOptions& opt) {
    swarm::ProblemOptions options;
    if (opt.heater_variant == "printed") {
        options.heater_variant = swarm::HeaterVariant::Printed;
    } else if (opt.heater_variant == "literature") {
        options.heater_variant = swarm::HeaterVariant::Literature;
    } else {
        throw std::invalid_argument("unknown heater variant '" + opt.heater_variant +
                                    "'");
    }
    if (opt.transistor_variant == "printed") {
        options.transistor_variant = swarm::TransistorVariant::Printed;
    } else if (opt.transistor_variant == "classic") {
        options.transistor_variant = swarm::TransistorVariant::Classic;
    } else {
        throw std::invalid_argument("unknown transistor variant '" +
                                    opt.transistor_variant + "'");
    }
    options.synthetic_dimension = opt.dim;
    return options;
}

std::vector<std::string> selected_problems(const CliOptions& opt) {
    if (opt.problem != "all") return {opt.problem};
    return {std::begin(kBenchmarkSet), std::end(kBenchmarkSet)};
}

std::vector<std::string> selected_algorithms(const CliOptions& opt) {
    if (opt.algorithm != "all") return {opt.algorithm};
    return swarm::algorithm_names();
}

std::vector<swarm::ExperimentReport> run_campaign(
    const CliOptions& opt, const std::vector<std::string>& problems,
    const std::vector<std::string>& algorithms) {
    const swarm::ExperimentConfig config = experiment_config(opt);
    const swarm::ProblemOptions prob_options = problem_options(opt);

    std::vector<swarm::ExperimentReport> reports;
    for (const std::string& problem_name : problems) {
        const swarm::Problem problem = swarm::make_problem(problem_name, prob_options);
        for (const std::string& algorithm : algorithms) {
            std::cerr << problem_name << "/" << algorithm << ": running " << opt.runs
                      << " seeds..." << std::flush;
            swarm::ExperimentReport report = swarm::run_experiment(
                problem, algorithm, config, opt.runs, opt.seed, opt.jobs);
            char line[160];
            std::snprintf(line, sizeof line,
                          " best=%.6g mean=%.6g std=%.3g mean_nfe=%.1f",
                          report.best_value, report.mean_value, report.std_value,
                          report.mean_nfe);
            std::cerr << line << "\n";
            reports.push_back(std::move(report));
        }
    }
    return reports;
}

void emit(const std::string& bytes, const std::string& out) {
    if (out.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream file(out);
    if (!file) throw std::runtime_error("cannot open '" + out + "' for writing");
    file << bytes;
    file.flush();
    if (!file) throw std::runtime_error("failed while writing '" + out + "'");
}

int dispatch(const CliOptions& opt) {
    if (opt.command == "list") {
        std::cout << "problems:";
        for (const auto& name : swarm::problem_names()) std::cout << " " << name;
        std::cout << "\nalgorithms:";
        for (const auto& name : swarm::algorithm_names()) std::cout << " " << name;
        std::cout << "\n";
        return 0;
    }

    if (opt.command == "run") {
        // Fail on bad tokens before any work is spent.
        const swarm::ReportFormat format = swarm::parse_report_format(opt.format);
        const auto problems = selected_problems(opt);
        const auto algorithms = selected_algorithms(opt);
        for (const auto& p : problems) swarm::make_problem(p, problem_options(opt));
        const auto known = swarm::algorithm_names();
        for (const auto& a : algorithms) {
            if (std::find(known.begin(), known.end(), a) == known.end()) {
                throw std::invalid_argument("unknown algorithm '" + a + "'");
            }
        }

        const auto reports = run_campaign(opt, problems, algorithms);
        const std::string bytes = format == swarm::ReportFormat::Csv
                                      ? swarm::reports_to_csv(reports)
                                      : swarm::reports_to_json(reports);
        emit(bytes, opt.out);
        return 0;
    }

    if (opt.command == "table2") {
        CliOptions all = opt;
        all.problem = "all";
        all.algorithm = "all";
        const auto reports = run_campaign(all, selected_problems(all),
                                          selected_algorithms(all));
        const swarm::ArTable table = swarm::ar_table(reports, "ils-abc");
        emit(swarm::ar_table_to_text(table), opt.out);
        return 0;
    }

    throw std::invalid_argument("unknown command '" + opt.command + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "swarmbench - artificial bee colony and friends on engineering design "
        "benchmarks"};
    CliOptions opt;

    app.add_option("command", opt.command, "run | table2 | list")->required();
    app.set_config("--config", "", "flat key=value file mirroring the flags below");

    app.add_option("--problem", opt.problem,
                   "problem name or 'all' (= the four benchmark problems)");
    app.add_option("--algorithm", opt.algorithm, "abc | ils-abc | de | pso | all");
    app.add_option("--runs", opt.runs, "independent runs per experiment")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.seed, "base seed; run i uses seed + i");
    app.add_option("--jobs", opt.jobs, "worker threads for runs")
        ->check(CLI::PositiveNumber);

    app.add_option("--colony", opt.colony, "population size SN")
        ->check(CLI::PositiveNumber);
    app.add_option("--limit", opt.limit, "scout stagnation limit")
        ->check(CLI::PositiveNumber);
    app.add_option("--onlookers", opt.onlookers, "onlooker count (0 = colony size)");
    app.add_option("--perturb-mode", opt.perturb_mode, "single | all");
    app.add_option("--cycles", opt.cycles, "maximum cycles MCN")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--nfe-budget", opt.nfe_budget,
                   "evaluation budget (0 = unlimited)");
    app.add_option("--diversity-tol", opt.diversity_tol,
                   "stop when population value spread falls below this");

    app.add_option("--gs-mode", opt.gs_mode, "paper | standard");
    app.add_option("--gs-iters", opt.gs_iters, "golden-section iteration cap")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--gs-tol", opt.gs_tol, "golden-section interval width tolerance");

    app.add_option("--heater-variant", opt.heater_variant, "printed | literature");
    app.add_option("--transistor-variant", opt.transistor_variant,
                   "printed | classic");
    app.add_option("--dim", opt.dim, "dimension for synthetic problems")
        ->check(CLI::PositiveNumber);

    app.add_option("--format", opt.format, "csv | json");
    app.add_option("--out", opt.out, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        return dispatch(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
