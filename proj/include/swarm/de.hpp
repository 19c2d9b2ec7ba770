#pragma once

#include <cstdint>

#include "swarm/abc.hpp"
#include "swarm/problem.hpp"
#include "swarm/run_result.hpp"
#include "swarm/stopping.hpp"

namespace swarm {

/// Canonical DE/rand/1/bin.
struct DEConfig {
    int population = 40;
    double weight = 0.5;     // differential weight F
    double crossover = 0.9;  // crossover rate CR
    std::uint64_t rng_seed = 1;
    StopRules stop;
};

/// Donor vector x_r1 + F (x_r2 - x_r3) with r1, r2, r3 pairwise distinct.
std::vector<double> de_mutate(std::span<const double> x_r1,
                              std::span<const double> x_r2,
                              std::span<const double> x_r3, double weight);

/// Binomial crossover with a guaranteed j_rand coordinate from the donor.
std::vector<double> de_crossover(std::span<const double> target,
                                 std::span<const double> donor, double crossover,
                                 int j_rand, Rng& rng);

RunResult run_de(const Problem& problem, const DEConfig& config,
                 const ProgressFn& progress = {});

}  // namespace swarm
