#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "swarm/problem.hpp"
#include "swarm/rng.hpp"
#include "swarm/run_result.hpp"
#include "swarm/stopping.hpp"

namespace swarm {

/// A candidate solution with its bookkeeping. `value` is always on the
/// minimization scale; `fitness` is kept consistent with `value`.
struct FoodSource {
    std::vector<double> position;
    double value = 0.0;
    double fitness = 0.0;
    int trials = 0;
};

enum class PerturbMode { SingleDimension, AllDimensions };

struct ColonyConfig {
    int colony_size = 40;  // SN, also the number of employed bees
    int limit = 100;       // stagnation threshold before a scout fires
    int onlooker_count = 0;  // 0 -> colony_size
    PerturbMode perturb_mode = PerturbMode::SingleDimension;
    std::uint64_t rng_seed = 1;
    StopRules stop;

    int onlookers() const { return onlooker_count > 0 ? onlooker_count : colony_size; }
};

struct ColonyState {
    std::vector<FoodSource> sources;
    FoodSource best;  // best-ever copy; survives scouting of its source
    std::int64_t nfe = 0;
    std::int64_t nfe_to_best = 0;
    std::int64_t cycle = 0;
    double sign_memory = 0.0;  // diagnostic only, see sign_memory_update
};

/// Strategy applied to an onlooker-selected source. Must perform its own
/// evaluations through evaluate_counted so the NFE ledger stays exact.
using OnlookerStrategy = std::function<void(
    ColonyState&, int index, const Problem&, const ColonyConfig&, Rng&)>;

/// Per-cycle observer: (cycle, best minimization-scale value).
using ProgressFn = std::function<void(std::int64_t, double)>;

/// Minimization fitness map: 1/(1+v) for v >= 0, 1+|v| otherwise. The
/// +inf worst sentinel maps to 0.
double fitness_of(double value);

/// Evaluates x, bumps the state's NFE counter, and returns the
/// minimization-scale value. Every objective call in the engine and the
/// plugged-in strategies goes through here.
double evaluate_counted(ColonyState& state, const Problem& problem,
                        std::span<const double> x);

/// Greedy tournament: installs (position, value) as source i when its
/// fitness strictly beats the incumbent's; updates trials and best-ever.
/// Returns true when the trial was accepted.
bool greedy_replace(ColonyState& state, int index, std::vector<double> position,
                    double value);

/// Eq-style perturbation v_j = x_i_j + phi_j (x_i_j - x_k_j) on the listed
/// dimensions, clamped to the problem box. `dims` and `phis` are parallel.
std::vector<double> mutate(const Problem& problem, std::span<const double> x_i,
                           std::span<const double> x_k, std::span<const int> dims,
                           std::span<const double> phis);

/// Draws the perturbed dimension set for one update.
std::vector<int> draw_dims(const Problem& problem, PerturbMode mode, Rng& rng);

ColonyState initialize_colony(const Problem& problem, const ColonyConfig& config,
                              Rng& rng);

void employed_phase(ColonyState& state, const Problem& problem,
                    const ColonyConfig& config, Rng& rng);

/// P_i = fitness_i / sum fitness; uniform when the total is zero (or not
/// finite, which only degenerate inputs can produce).
std::vector<double> selection_probabilities(const ColonyState& state);

/// Roulette-wheel draw over a normalized probability vector.
int roulette_select(std::span<const double> probabilities, Rng& rng);

void onlooker_phase(ColonyState& state, const Problem& problem,
                    const ColonyConfig& config, Rng& rng,
                    const OnlookerStrategy& update);

/// Replaces the single most-stagnant source (trials >= limit, ties to the
/// lower index) with a fresh random one. At most one scout per cycle.
void scout_phase(ColonyState& state, const Problem& problem,
                 const ColonyConfig& config, Rng& rng);

/// Objective spread f_max - f_min over the current population.
double population_spread(const ColonyState& state);

/// Full ABC run with the given onlooker strategy.
RunResult run_abc(const Problem& problem, const ColonyConfig& config,
                  const OnlookerStrategy& update, const ProgressFn& progress = {});

/// Canonical ABC: onlookers use the same single-evaluation move as the
/// employed bees.
RunResult run_abc(const Problem& problem, const ColonyConfig& config,
                  const ProgressFn& progress = {});

/// The canonical one-evaluation onlooker move (shared with the employed
/// phase), exposed so variants can fall back to it.
void eq2_update(ColonyState& state, int index, const Problem& problem,
                const ColonyConfig& config, Rng& rng);

}  // namespace swarm
