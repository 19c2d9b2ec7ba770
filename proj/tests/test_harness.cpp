#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <sstream>

#include "swarm/harness.hpp"

using namespace swarm;

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::stringstream stream(line);
    std::string field;
    while (std::getline(stream, field, sep)) out.push_back(field);
    return out;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) out.push_back(line);
    return out;
}

/// Minimal report carrying only what ar_table reads.
ExperimentReport nfe_report(std::string problem, std::string algorithm,
                            double mean_nfe) {
    ExperimentReport r;
    r.problem = std::move(problem);
    r.algorithm = std::move(algorithm);
    r.mean_nfe = mean_nfe;
    return r;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("summarize uses the sample convention") {
    const std::vector<double> v{1.0, 2.0, 3.0};
    const Summary s = summarize(v);
    CHECK(s.mean == 2.0);
    CHECK(s.std_dev == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.min == 1.0);
    CHECK(s.max == 3.0);

    const Summary single = summarize(std::vector<double>{5.0});
    CHECK(single.mean == 5.0);
    CHECK(single.std_dev == 0.0);

    const Summary constant = summarize(std::vector<double>{4.0, 4.0, 4.0});
    CHECK(constant.std_dev == 0.0);

    CHECK_THROWS_AS(summarize(std::vector<double>{}), std::invalid_argument);

    // permutation invariance
    std::vector<double> values{3.5, -1.0, 7.25, 0.0, 2.5, 2.5};
    std::vector<double> shuffled = values;
    std::mt19937_64 rng(5);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const Summary a = summarize(values);
    const Summary b = summarize(shuffled);
    CHECK(a.mean == doctest::Approx(b.mean).epsilon(1e-15));
    CHECK(a.std_dev == doctest::Approx(b.std_dev).epsilon(1e-12));
    CHECK(a.min == b.min);
    CHECK(a.max == b.max);
}

TEST_CASE("acceleration rate reproduces the published arithmetic") {
    CHECK(acceleration_rate(22195, 14932) == doctest::Approx(32.7236).epsilon(1e-4));
    CHECK(acceleration_rate(19784, 14932) == doctest::Approx(24.5249).epsilon(1e-4));
    CHECK(acceleration_rate(1234, 1234) == 0.0);
    CHECK_THROWS_AS(acceleration_rate(0.0, 10.0), std::domain_error);
    CHECK_THROWS_AS(acceleration_rate(-5.0, 10.0), std::domain_error);
}

TEST_CASE("ar_table matches the published comparison matrix") {
    std::vector<ExperimentReport> reports;
    const char* problems[] = {"transistor", "gas", "heater", "gear"};
    const double nfe[4][4] = {
        // pso, de, abc, ils-abc
        {22195, 19784, 17901, 14932},
        {342, 324, 319, 264},
        {6207, 5190, 4425, 3026},
        {480, 340, 648, 252},
    };
    for (int p = 0; p < 4; ++p) {
        reports.push_back(nfe_report(problems[p], "pso", nfe[p][0]));
        reports.push_back(nfe_report(problems[p], "de", nfe[p][1]));
        reports.push_back(nfe_report(problems[p], "abc", nfe[p][2]));
        reports.push_back(nfe_report(problems[p], "ils-abc", nfe[p][3]));
    }
    const ArTable table = ar_table(reports, "ils-abc");
    REQUIRE(table.baselines == std::vector<std::string>{"pso", "de", "abc"});
    REQUIRE(table.problems ==
            std::vector<std::string>{"transistor", "gas", "heater", "gear"});

    const double expected[4][3] = {
        {32.7, 24.5, 16.6},
        {22.8, 18.5, 17.2},
        {51.2, 41.7, 31.6},
        {47.5, 25.9, 61.1},
    };
    for (int p = 0; p < 4; ++p) {
        for (int c = 0; c < 3; ++c) {
            CHECK(std::abs(table.entries[p][c] - expected[p][c]) <= 0.05);
        }
    }
    CHECK(std::abs(table.column_average[0] - 38.6) <= 0.1);

    SUBCASE("scale invariance") {
        std::vector<ExperimentReport> scaled = reports;
        for (auto& r : scaled) r.mean_nfe *= 7.5;
        const ArTable table2 = ar_table(scaled, "ils-abc");
        for (int p = 0; p < 4; ++p) {
            for (int c = 0; c < 3; ++c) {
                CHECK(table2.entries[p][c] ==
                      doctest::Approx(table.entries[p][c]).epsilon(1e-12));
            }
        }
    }
    SUBCASE("text rendering has one row per problem plus an average row") {
        const auto lines = lines_of(ar_table_to_text(table));
        REQUIRE(lines.size() == 7);  // title, header, 4 problems, average
        CHECK(lines.back().find("average") == 0);
    }
}

TEST_CASE("ar_table rejects mismatched problem sets") {
    std::vector<ExperimentReport> reports;
    reports.push_back(nfe_report("gear", "abc", 100));
    reports.push_back(nfe_report("gear", "ils-abc", 80));
    reports.push_back(nfe_report("gas", "abc", 100));  // no ils-abc for gas
    CHECK_THROWS_AS(ar_table(reports, "ils-abc"), std::invalid_argument);

    std::vector<ExperimentReport> equal;
    equal.push_back(nfe_report("gear", "abc", 500));
    equal.push_back(nfe_report("gear", "ils-abc", 500));
    const ArTable table = ar_table(equal, "ils-abc");
    CHECK(table.entries[0][0] == 0.0);
}

TEST_CASE("run_experiment: seeds, determinism, degenerate aggregates") {
    const Problem sphere = make_sphere(2);
    ExperimentConfig config;
    config.population = 10;
    config.stop.max_nfe = 500;

    const ExperimentReport single = run_experiment(sphere, "abc", config, 1, 99);
    CHECK(single.runs.size() == 1);
    CHECK(single.mean_value == single.runs[0].best_value);
    CHECK(single.std_value == 0.0);
    CHECK(single.runs[0].seed == 99);

    const ExperimentReport a = run_experiment(sphere, "abc", config, 5, 1);
    const ExperimentReport b = run_experiment(sphere, "abc", config, 5, 1);
    REQUIRE(a.runs.size() == b.runs.size());
    for (std::size_t i = 0; i < a.runs.size(); ++i) {
        CHECK(same_outcome(a.runs[i], b.runs[i]));
        CHECK(a.runs[i].seed == 1 + i);
    }
    CHECK(a.mean_value == b.mean_value);
    CHECK(a.std_value == b.std_value);
    CHECK(a.best_value == b.best_value);
    CHECK(a.mean_nfe == b.mean_nfe);

    CHECK_THROWS_WITH_AS(run_experiment(sphere, "annealing", config, 2, 1),
                         doctest::Contains("annealing"), std::invalid_argument);
    CHECK_THROWS_AS(run_experiment(sphere, "abc", config, 0, 1),
                    std::invalid_argument);
}

TEST_CASE("run_experiment: parallel execution changes nothing") {
    const Problem gear = make_gear();
    ExperimentConfig config;
    config.stop.max_nfe = 2'000;
    for (const std::string algorithm : {"abc", "ils-abc", "de", "pso"}) {
        const ExperimentReport serial =
            run_experiment(gear, algorithm, config, 8, 7, 1);
        const ExperimentReport parallel =
            run_experiment(gear, algorithm, config, 8, 7, 4);
        for (std::size_t i = 0; i < serial.runs.size(); ++i) {
            CHECK(same_outcome(serial.runs[i], parallel.runs[i]));
        }
        CHECK(serial.mean_value == parallel.mean_value);
        CHECK(serial.best_value == parallel.best_value);
    }
}

TEST_CASE("maximization reports use the native sense") {
    const Problem heater = make_heater();
    ExperimentConfig config;
    config.stop.max_nfe = 1'500;
    const ExperimentReport report = run_experiment(heater, "abc", config, 4, 3);
    double max_value = report.runs[0].best_value;
    for (const auto& run : report.runs) max_value = std::max(max_value, run.best_value);
    CHECK(report.best_value == max_value);
}

TEST_CASE("CSV schema: runs plus exactly one summary row") {
    const Problem sphere = make_sphere(2);
    ExperimentConfig config;
    config.population = 8;
    config.stop.max_nfe = 300;
    const ExperimentReport report = run_experiment(sphere, "de", config, 25, 11);

    const std::string csv = reports_to_csv({&report, 1});
    const auto lines = lines_of(csv);
    REQUIRE(lines.size() == 27);  // header + 25 runs + summary
    CHECK(lines[0] ==
          "problem,algorithm,seed,best_value,nfe,nfe_to_best,cycles,wall_time_s");
    for (std::size_t i = 1; i <= 25; ++i) {
        const auto fields = split(lines[i], ',');
        REQUIRE(fields.size() == 8);
        CHECK(fields[0] == "sphere");
        CHECK(fields[1] == "de");
        CHECK(std::stoull(fields[2]) == report.runs[i - 1].seed);
        // full-precision round trip
        CHECK(std::strtod(fields[3].c_str(), nullptr) ==
              report.runs[i - 1].best_value);
        CHECK(std::stoll(fields[4]) == report.runs[i - 1].nfe);
        CHECK(std::stoll(fields[5]) == report.runs[i - 1].nfe_to_best);
        CHECK(std::stoll(fields[6]) == report.runs[i - 1].cycles);
        CHECK(std::strtod(fields[7].c_str(), nullptr) ==
              report.runs[i - 1].wall_time);
    }
    const auto summary = split(lines[26], ',');
    REQUIRE(summary.size() == 8);
    CHECK(summary[2] == "summary");
    CHECK(std::strtod(summary[3].c_str(), nullptr) == report.mean_value);
    CHECK(std::strtod(summary[4].c_str(), nullptr) == report.mean_nfe);
}

TEST_CASE("JSON round trip is lossless and matches the CSV rows") {
    const Problem gear = make_gear();
    ExperimentConfig config;
    config.stop.max_nfe = 800;
    const ExperimentReport report = run_experiment(gear, "ils-abc", config, 6, 2);

    const auto path = temp_file("swarm_report_roundtrip.json");
    write_report(report, ReportFormat::Json, path);
    const auto loaded = read_reports_json(path);
    REQUIRE(loaded.size() == 1);
    CHECK(loaded[0] == report);
    std::filesystem::remove(path);

    // CSV decodes to the same run-level values as JSON
    const auto lines = lines_of(reports_to_csv({&report, 1}));
    for (std::size_t i = 0; i < report.runs.size(); ++i) {
        const auto fields = split(lines[i + 1], ',');
        const RunResult& run = loaded[0].runs[i];
        CHECK(std::stoull(fields[2]) == run.seed);
        CHECK(std::strtod(fields[3].c_str(), nullptr) == run.best_value);
        CHECK(std::stoll(fields[4]) == run.nfe);
        CHECK(std::stoll(fields[5]) == run.nfe_to_best);
        CHECK(std::stoll(fields[6]) == run.cycles);
        CHECK(std::strtod(fields[7].c_str(), nullptr) == run.wall_time);
    }
}

TEST_CASE("multiple reports share one CSV header and round-trip as a JSON array") {
    ExperimentConfig config;
    config.population = 6;
    config.stop.max_nfe = 200;
    const std::vector<ExperimentReport> reports{
        run_experiment(make_sphere(2), "abc", config, 3, 1),
        run_experiment(make_gear(), "de", config, 2, 5),
    };

    const auto lines = lines_of(reports_to_csv(reports));
    CHECK(lines.size() == 1 + (3 + 1) + (2 + 1));
    CHECK(lines[1].rfind("sphere,abc,", 0) == 0);
    CHECK(lines[5].rfind("gear,de,", 0) == 0);

    const auto path = temp_file("swarm_reports_multi.json");
    write_reports(reports, ReportFormat::Json, path);
    const auto loaded = read_reports_json(path);
    REQUIRE(loaded.size() == 2);
    CHECK(loaded[0] == reports[0]);
    CHECK(loaded[1] == reports[1]);
    std::filesystem::remove(path);
}

TEST_CASE("format and path validation") {
    CHECK(parse_report_format("csv") == ReportFormat::Csv);
    CHECK(parse_report_format("json") == ReportFormat::Json);
    CHECK_THROWS_WITH_AS(parse_report_format("xml"), doctest::Contains("xml"),
                         std::invalid_argument);

    ExperimentReport report;
    report.problem = "sphere";
    report.algorithm = "abc";
    report.runs.resize(1);
    CHECK_THROWS_WITH_AS(
        write_report(report, ReportFormat::Csv, "/nonexistent-dir/report.csv"),
        doctest::Contains("/nonexistent-dir/report.csv"), std::runtime_error);
}
