#include "swarm/ils_abc.hpp"

#include <utility>

namespace swarm {

std::int64_t ils_onlooker_update(ColonyState& state, int index,
                                 const Problem& problem,
                                 const ColonyConfig& config,
                                 const GoldenSectionConfig& gs, Rng& rng) {
    const int k = uniform_index_excluding(rng, config.colony_size, index);
    const std::vector<int> dims = draw_dims(problem, config.perturb_mode, rng);

    // The source positions stay put for the whole scalar search; only the
    // NFE counter moves.
    const std::vector<double>& x_i = state.sources[index].position;
    const std::vector<double>& x_k = state.sources[k].position;
    auto trial_at = [&](double f) {
        std::vector<double> v(x_i);
        for (int j : dims) v[j] = x_i[j] + f * (x_i[j] - x_k[j]);
        return clamp(problem, v);
    };

    const std::int64_t nfe_before = state.nfe;
    const GoldenSectionResult line = golden_section_search(
        [&](double f) { return evaluate_counted(state, problem, trial_at(f)); },
        gs);

    std::vector<double> best_trial = trial_at(line.f_z_best);
    const bool accepted =
        greedy_replace(state, index, std::move(best_trial), line.value_best);
    state.sign_memory = sign_memory_update(line, accepted, state.sign_memory);
    return state.nfe - nfe_before;
}

OnlookerStrategy make_ils_onlooker(GoldenSectionConfig gs) {
    return [gs](ColonyState& state, int index, const Problem& problem,
                const ColonyConfig& config, Rng& rng) {
        ils_onlooker_update(state, index, problem, config, gs, rng);
    };
}

RunResult run_ils_abc(const Problem& problem, const ColonyConfig& config,
                      const GoldenSectionConfig& gs, const ProgressFn& progress) {
    return run_abc(problem, config, make_ils_onlooker(gs), progress);
}

}  // namespace swarm
