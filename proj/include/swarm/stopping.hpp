#pragma once

#include <cstdint>
#include <limits>

namespace swarm {

/// Termination rules shared by every optimizer in the library.
///
/// A run stops when the first of these fires:
///   - cycle count reaches max_cycles,
///   - the evaluation counter reaches max_nfe (checked before each
///     candidate update, so a run may overshoot by at most one update),
///   - the objective spread |f_max - f_min| of the current population
///     drops below diversity_tol,
///   - the best minimization-scale value reaches value_target.
struct StopRules {
    std::int64_t max_cycles = 10'000;
    std::int64_t max_nfe = std::numeric_limits<std::int64_t>::max();
    double diversity_tol = 1e-4;
    double value_target = -std::numeric_limits<double>::infinity();
};

}  // namespace swarm
