#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <utility>

namespace swarm {

inline const double kGoldenRatio = (1.0 + std::sqrt(5.0)) / 2.0;

enum class GsMode {
    /// f(F1) < f(F2) shrinks b to F1, else a to F2, with both interior
    /// points re-evaluated every iteration. Shrinks by 1/delta^2 per
    /// iteration and can lose the bracket.
    Paper,
    /// Classical golden-section update (b moves to F2, a to F1) with
    /// one-point reuse; shrinks by 1/delta and preserves the bracket for
    /// unimodal functions.
    Standard,
};

struct GoldenSectionConfig {
    double a0 = -1.0;
    double b0 = 1.0;
    GsMode mode = GsMode::Paper;
    int max_iters = 10;
    double width_tol = 0.01;
};

struct GoldenSectionResult {
    double f_z_best = 0.0;   // best point actually evaluated
    double value_best = 0.0;
    std::int64_t evaluations = 0;
    std::pair<double, double> final_interval{0.0, 0.0};
};

/// Minimizes a scalar function on [a0, b0]. Always returns the best point
/// that was evaluated, never an unevaluated guess; when the iteration
/// budget or tolerance leaves no room to iterate, the midpoint is
/// evaluated once so the result is well defined. Ties between the two
/// interior points take the else-branch in both modes.
GoldenSectionResult golden_section_search(const std::function<double(double)>& g,
                                          const GoldenSectionConfig& config);

/// Direction-inversion bookkeeping: a successful (accepted) trial found at
/// a negative scale factor records the corresponding positive value.
/// Diagnostic only; it does not steer subsequent searches.
double sign_memory_update(const GoldenSectionResult& result, bool accepted,
                          double memory);

}  // namespace swarm
