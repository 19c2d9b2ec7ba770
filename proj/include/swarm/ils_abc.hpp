#pragma once

#include <cstdint>

#include "swarm/abc.hpp"
#include "swarm/golden_section.hpp"

namespace swarm {

/// Onlooker move of the golden-section variant: partner k and the
/// perturbed dimension set are drawn once and frozen, turning the trial
/// v_j = x_i_j + F (x_i_j - x_k_j) into a one-dimensional slice over the
/// scale factor F. The slice is minimized by golden-section search and the
/// best evaluated trial competes greedily with source i. Returns the
/// number of objective evaluations spent (all counted into state.nfe).
std::int64_t ils_onlooker_update(ColonyState& state, int index,
                                 const Problem& problem,
                                 const ColonyConfig& config,
                                 const GoldenSectionConfig& gs, Rng& rng);

/// Wraps ils_onlooker_update as a pluggable onlooker strategy.
OnlookerStrategy make_ils_onlooker(GoldenSectionConfig gs);

/// ABC with the golden-section onlooker move; employed and scout phases
/// are unchanged.
RunResult run_ils_abc(const Problem& problem, const ColonyConfig& config,
                      const GoldenSectionConfig& gs = {},
                      const ProgressFn& progress = {});

}  // namespace swarm
