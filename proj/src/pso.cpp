#include "swarm/pso.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace swarm {

namespace {

struct PSOState {
    std::vector<std::vector<double>> positions;
    std::vector<std::vector<double>> velocities;
    std::vector<double> values;  // current minimization-scale values
    std::vector<std::vector<double>> pbest_x;
    std::vector<double> pbest_value;
    std::vector<double> gbest_x;
    double gbest_value = 0.0;
    std::int64_t nfe = 0;
    std::int64_t nfe_to_best = 0;
};

bool stop_requested(const PSOState& state, const PSOConfig& config) {
    return state.nfe >= config.stop.max_nfe ||
           state.gbest_value <= config.stop.value_target;
}

}  // namespace

RunResult run_pso(const Problem& problem, const PSOConfig& config,
                  const ProgressFn& progress) {
    if (config.swarm < 2) {
        throw std::invalid_argument("PSO needs a swarm of at least 2");
    }
    const auto start = std::chrono::steady_clock::now();
    Rng rng = make_rng(config.rng_seed);
    const int n = problem.dimension;

    std::vector<double> vmax(n);
    for (int j = 0; j < n; ++j) {
        vmax[j] = config.velocity_clamp * (problem.upper[j] - problem.lower[j]);
    }

    PSOState state;
    state.positions.resize(config.swarm);
    state.velocities.assign(config.swarm, std::vector<double>(n, 0.0));
    state.values.resize(config.swarm);
    state.pbest_x.resize(config.swarm);
    state.pbest_value.resize(config.swarm);
    for (int i = 0; i < config.swarm; ++i) {
        auto& x = state.positions[i];
        x.resize(n);
        for (int j = 0; j < n; ++j) {
            x[j] = problem.lower[j] +
                   uniform01(rng) * (problem.upper[j] - problem.lower[j]);
        }
        state.nfe += 1;
        state.values[i] = problem.evaluate_min(x);
        state.pbest_x[i] = x;
        state.pbest_value[i] = state.values[i];
        if (i == 0 || state.values[i] < state.gbest_value) {
            state.gbest_value = state.values[i];
            state.gbest_x = x;
            state.nfe_to_best = state.nfe;
        }
    }

    std::int64_t iteration = 0;
    auto spread = [&] {
        double lo = state.values[0], hi = state.values[0];
        for (double v : state.values) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        return hi - lo;
    };

    while (iteration < config.stop.max_cycles && !stop_requested(state, config) &&
           spread() >= config.stop.diversity_tol) {
        for (int i = 0; i < config.swarm; ++i) {
            if (stop_requested(state, config)) break;
            auto& x = state.positions[i];
            auto& v = state.velocities[i];
            for (int j = 0; j < n; ++j) {
                const double u1 = uniform01(rng);
                const double u2 = uniform01(rng);
                v[j] = config.inertia * v[j] +
                       config.cognitive * u1 * (state.pbest_x[i][j] - x[j]) +
                       config.social * u2 * (state.gbest_x[j] - x[j]);
                v[j] = std::clamp(v[j], -vmax[j], vmax[j]);
                x[j] = std::clamp(x[j] + v[j], problem.lower[j], problem.upper[j]);
            }
            state.nfe += 1;
            state.values[i] = problem.evaluate_min(x);
            if (state.values[i] < state.pbest_value[i]) {
                state.pbest_value[i] = state.values[i];
                state.pbest_x[i] = x;
                if (state.values[i] < state.gbest_value) {
                    state.gbest_value = state.values[i];
                    state.gbest_x = x;
                    state.nfe_to_best = state.nfe;
                }
            }
        }
        ++iteration;
        if (progress) progress(iteration, state.gbest_value);
    }

    RunResult result;
    result.best_x = problem.evaluation_point(state.gbest_x);
    result.best_value = problem.to_native(state.gbest_value);
    result.nfe = state.nfe;
    result.nfe_to_best = state.nfe_to_best;
    result.cycles = iteration;
    result.seed = config.rng_seed;
    result.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return result;
}

}  // namespace swarm
