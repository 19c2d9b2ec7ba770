#include "swarm/de.hpp"

#include <chrono>
#include <stdexcept>
#include <utility>

namespace swarm {

std::vector<double> de_mutate(std::span<const double> x_r1,
                              std::span<const double> x_r2,
                              std::span<const double> x_r3, double weight) {
    std::vector<double> donor(x_r1.size());
    for (std::size_t j = 0; j < donor.size(); ++j) {
        donor[j] = x_r1[j] + weight * (x_r2[j] - x_r3[j]);
    }
    return donor;
}

std::vector<double> de_crossover(std::span<const double> target,
                                 std::span<const double> donor, double crossover,
                                 int j_rand, Rng& rng) {
    std::vector<double> trial(target.begin(), target.end());
    for (std::size_t j = 0; j < trial.size(); ++j) {
        if (uniform01(rng) < crossover || static_cast<int>(j) == j_rand) {
            trial[j] = donor[j];
        }
    }
    return trial;
}

namespace {

struct DEState {
    std::vector<std::vector<double>> positions;
    std::vector<double> values;  // minimization scale
    std::vector<double> best_x;
    double best_value = 0.0;
    std::int64_t nfe = 0;
    std::int64_t nfe_to_best = 0;
};

bool stop_requested(const DEState& state, const DEConfig& config) {
    return state.nfe >= config.stop.max_nfe ||
           state.best_value <= config.stop.value_target;
}

}  // namespace

RunResult run_de(const Problem& problem, const DEConfig& config,
                 const ProgressFn& progress) {
    if (config.population < 4) {
        throw std::invalid_argument("DE needs a population of at least 4");
    }
    const auto start = std::chrono::steady_clock::now();
    Rng rng = make_rng(config.rng_seed);

    DEState state;
    state.positions.resize(config.population);
    state.values.resize(config.population);
    for (int i = 0; i < config.population; ++i) {
        auto& x = state.positions[i];
        x.resize(problem.dimension);
        for (int j = 0; j < problem.dimension; ++j) {
            x[j] = problem.lower[j] +
                   uniform01(rng) * (problem.upper[j] - problem.lower[j]);
        }
        state.nfe += 1;
        state.values[i] = problem.evaluate_min(x);
        if (i == 0 || state.values[i] < state.best_value) {
            state.best_value = state.values[i];
            state.best_x = x;
            state.nfe_to_best = state.nfe;
        }
    }

    std::int64_t generation = 0;
    auto spread = [&] {
        double lo = state.values[0], hi = state.values[0];
        for (double v : state.values) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        return hi - lo;
    };

    while (generation < config.stop.max_cycles && !stop_requested(state, config) &&
           spread() >= config.stop.diversity_tol) {
        for (int i = 0; i < config.population; ++i) {
            if (stop_requested(state, config)) break;
            int r1 = uniform_index_excluding(rng, config.population, i);
            int r2;
            do {
                r2 = uniform_index_excluding(rng, config.population, i);
            } while (r2 == r1);
            int r3;
            do {
                r3 = uniform_index_excluding(rng, config.population, i);
            } while (r3 == r1 || r3 == r2);

            const std::vector<double> donor =
                de_mutate(state.positions[r1], state.positions[r2],
                          state.positions[r3], config.weight);
            const int j_rand = uniform_index(rng, problem.dimension);
            std::vector<double> trial = de_crossover(
                state.positions[i], donor, config.crossover, j_rand, rng);
            trial = clamp(problem, trial);

            state.nfe += 1;
            const double value = problem.evaluate_min(trial);
            if (value <= state.values[i]) {
                state.positions[i] = std::move(trial);
                state.values[i] = value;
                if (value < state.best_value) {
                    state.best_value = value;
                    state.best_x = state.positions[i];
                    state.nfe_to_best = state.nfe;
                }
            }
        }
        ++generation;
        if (progress) progress(generation, state.best_value);
    }

    RunResult result;
    result.best_x = problem.evaluation_point(state.best_x);
    result.best_value = problem.to_native(state.best_value);
    result.nfe = state.nfe;
    result.nfe_to_best = state.nfe_to_best;
    result.cycles = generation;
    result.seed = config.rng_seed;
    result.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return result;
}

}  // namespace swarm
