#pragma once

#include <cstdint>
#include <vector>

namespace swarm {

/// Outcome of one seeded optimizer run.
///
/// best_value is reported in the problem's native sense (maximization
/// problems are un-negated on the way out). best_x is the point as it
/// was evaluated, i.e. with integral coordinates already rounded.
struct RunResult {
    std::vector<double> best_x;
    double best_value = 0.0;
    std::int64_t nfe = 0;          // total objective evaluations
    std::int64_t nfe_to_best = 0;  // evaluation index that produced best_x
    std::int64_t cycles = 0;
    double wall_time = 0.0;  // seconds; informational only
    std::uint64_t seed = 0;

    bool operator==(const RunResult&) const = default;
};

/// Field-wise equality ignoring wall_time, which is not reproducible.
bool same_outcome(const RunResult& a, const RunResult& b);

}  // namespace swarm
