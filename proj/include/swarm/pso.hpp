#pragma once

#include <cstdint>

#include "swarm/abc.hpp"
#include "swarm/problem.hpp"
#include "swarm/run_result.hpp"
#include "swarm/stopping.hpp"

namespace swarm {

/// Canonical global-best PSO with inertia weight (constriction-equivalent
/// defaults) and per-dimension velocity clamping.
struct PSOConfig {
    int swarm = 40;
    double inertia = 0.729;    // w
    double cognitive = 1.49445;  // c1
    double social = 1.49445;     // c2
    double velocity_clamp = 0.5;  // fraction of each dimension's range
    std::uint64_t rng_seed = 1;
    StopRules stop;
};

RunResult run_pso(const Problem& problem, const PSOConfig& config,
                  const ProgressFn& progress = {});

}  // namespace swarm
