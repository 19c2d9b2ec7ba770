#include "swarm/abc.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace swarm {

bool same_outcome(const RunResult& a, const RunResult& b) {
    return a.best_x == b.best_x && a.best_value == b.best_value && a.nfe == b.nfe &&
           a.nfe_to_best == b.nfe_to_best && a.cycles == b.cycles && a.seed == b.seed;
}

double fitness_of(double value) {
    if (std::isnan(value)) return 0.0;
    if (value >= 0.0) {
        return std::isinf(value) ? 0.0 : 1.0 / (1.0 + value);
    }
    return 1.0 + std::abs(value);
}

double evaluate_counted(ColonyState& state, const Problem& problem,
                        std::span<const double> x) {
    state.nfe += 1;
    return problem.evaluate_min(x);
}

namespace {

void update_best(ColonyState& state, const FoodSource& source) {
    if (state.best.position.empty() || source.value < state.best.value) {
        state.best = source;
        state.nfe_to_best = state.nfe;
    }
}

bool stop_requested(const ColonyState& state, const ColonyConfig& config) {
    if (state.nfe >= config.stop.max_nfe) return true;
    return !state.best.position.empty() &&
           state.best.value <= config.stop.value_target;
}

std::vector<double> random_position(const Problem& problem, Rng& rng) {
    std::vector<double> x(problem.dimension);
    for (int j = 0; j < problem.dimension; ++j) {
        const double u = uniform01(rng);
        x[j] = problem.lower[j] + u * (problem.upper[j] - problem.lower[j]);
    }
    return x;
}

}  // namespace

bool greedy_replace(ColonyState& state, int index, std::vector<double> position,
                    double value) {
    FoodSource& incumbent = state.sources[index];
    if (fitness_of(value) > incumbent.fitness) {
        incumbent.position = std::move(position);
        incumbent.value = value;
        incumbent.fitness = fitness_of(value);
        incumbent.trials = 0;
        update_best(state, incumbent);
        return true;
    }
    incumbent.trials += 1;
    return false;
}

std::vector<double> mutate(const Problem& problem, std::span<const double> x_i,
                           std::span<const double> x_k, std::span<const int> dims,
                           std::span<const double> phis) {
    std::vector<double> v(x_i.begin(), x_i.end());
    for (std::size_t t = 0; t < dims.size(); ++t) {
        const int j = dims[t];
        v[j] = x_i[j] + phis[t] * (x_i[j] - x_k[j]);
    }
    return clamp(problem, v);
}

std::vector<int> draw_dims(const Problem& problem, PerturbMode mode, Rng& rng) {
    if (mode == PerturbMode::AllDimensions) {
        std::vector<int> dims(problem.dimension);
        for (int j = 0; j < problem.dimension; ++j) dims[j] = j;
        return dims;
    }
    return {uniform_index(rng, problem.dimension)};
}

ColonyState initialize_colony(const Problem& problem, const ColonyConfig& config,
                              Rng& rng) {
    if (config.colony_size < 2) {
        throw std::invalid_argument("colony_size must be at least 2");
    }
    ColonyState state;
    state.sources.resize(config.colony_size);
    for (FoodSource& source : state.sources) {
        source.position = random_position(problem, rng);
        source.value = evaluate_counted(state, problem, source.position);
        source.fitness = fitness_of(source.value);
        source.trials = 0;
        update_best(state, source);
    }
    return state;
}

void eq2_update(ColonyState& state, int index, const Problem& problem,
                const ColonyConfig& config, Rng& rng) {
    const int k = uniform_index_excluding(rng, config.colony_size, index);
    const std::vector<int> dims = draw_dims(problem, config.perturb_mode, rng);
    std::vector<double> phis(dims.size());
    for (double& phi : phis) phi = uniform_real(rng, -1.0, 1.0);

    std::vector<double> trial =
        mutate(problem, state.sources[index].position, state.sources[k].position,
               dims, phis);
    const double value = evaluate_counted(state, problem, trial);
    greedy_replace(state, index, std::move(trial), value);
}

void employed_phase(ColonyState& state, const Problem& problem,
                    const ColonyConfig& config, Rng& rng) {
    for (int i = 0; i < config.colony_size; ++i) {
        if (stop_requested(state, config)) break;
        eq2_update(state, i, problem, config, rng);
    }
}

std::vector<double> selection_probabilities(const ColonyState& state) {
    const std::size_t n = state.sources.size();
    std::vector<double> probabilities(n);
    double total = 0.0;
    for (const FoodSource& source : state.sources) total += source.fitness;
    if (!(total > 0.0) || !std::isfinite(total)) {
        std::fill(probabilities.begin(), probabilities.end(), 1.0 / double(n));
        return probabilities;
    }
    for (std::size_t i = 0; i < n; ++i) {
        probabilities[i] = state.sources[i].fitness / total;
    }
    return probabilities;
}

int roulette_select(std::span<const double> probabilities, Rng& rng) {
    const double u = uniform01(rng);
    double cumulative = 0.0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        cumulative += probabilities[i];
        if (u < cumulative) return static_cast<int>(i);
    }
    return static_cast<int>(probabilities.size()) - 1;  // guards rounding drift
}

void onlooker_phase(ColonyState& state, const Problem& problem,
                    const ColonyConfig& config, Rng& rng,
                    const OnlookerStrategy& update) {
    const std::vector<double> probabilities = selection_probabilities(state);
    for (int t = 0; t < config.onlookers(); ++t) {
        if (stop_requested(state, config)) break;
        const int index = roulette_select(probabilities, rng);
        update(state, index, problem, config, rng);
    }
}

void scout_phase(ColonyState& state, const Problem& problem,
                 const ColonyConfig& config, Rng& rng) {
    if (stop_requested(state, config)) return;
    int candidate = 0;
    for (int i = 1; i < config.colony_size; ++i) {
        if (state.sources[i].trials > state.sources[candidate].trials) candidate = i;
    }
    if (state.sources[candidate].trials < config.limit) return;

    FoodSource& source = state.sources[candidate];
    source.position = random_position(problem, rng);
    source.value = evaluate_counted(state, problem, source.position);
    source.fitness = fitness_of(source.value);
    source.trials = 0;
    update_best(state, source);
}

double population_spread(const ColonyState& state) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const FoodSource& source : state.sources) {
        lo = std::min(lo, source.value);
        hi = std::max(hi, source.value);
    }
    return hi - lo;
}

RunResult run_abc(const Problem& problem, const ColonyConfig& config,
                  const OnlookerStrategy& update, const ProgressFn& progress) {
    const auto start = std::chrono::steady_clock::now();
    Rng rng = make_rng(config.rng_seed);
    ColonyState state = initialize_colony(problem, config, rng);

    while (state.cycle < config.stop.max_cycles && !stop_requested(state, config) &&
           population_spread(state) >= config.stop.diversity_tol) {
        employed_phase(state, problem, config, rng);
        onlooker_phase(state, problem, config, rng, update);
        scout_phase(state, problem, config, rng);
        state.cycle += 1;
        if (progress) progress(state.cycle, state.best.value);
    }

    RunResult result;
    result.best_x = problem.evaluation_point(state.best.position);
    result.best_value = problem.to_native(state.best.value);
    result.nfe = state.nfe;
    result.nfe_to_best = state.nfe_to_best;
    result.cycles = state.cycle;
    result.seed = config.rng_seed;
    result.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return result;
}

RunResult run_abc(const Problem& problem, const ColonyConfig& config,
                  const ProgressFn& progress) {
    return run_abc(problem, config, eq2_update, progress);
}

}  // namespace swarm
