#include "swarm/golden_section.hpp"

#include <stdexcept>

namespace swarm {

GoldenSectionResult golden_section_search(const std::function<double(double)>& g,
                                          const GoldenSectionConfig& config) {
    if (!(config.a0 < config.b0)) {
        throw std::invalid_argument("golden section interval requires a0 < b0");
    }
    const double delta = kGoldenRatio;
    double a = config.a0;
    double b = config.b0;

    GoldenSectionResult result;
    bool have_best = false;
    auto probe = [&](double t) {
        const double v = g(t);
        result.evaluations += 1;
        if (!have_best || v < result.value_best) {
            have_best = true;
            result.f_z_best = t;
            result.value_best = v;
        }
        return v;
    };

    int iters = 0;
    if (config.mode == GsMode::Paper) {
        while (iters < config.max_iters && (b - a) > config.width_tol) {
            const double f1 = b - (b - a) / delta;
            const double f2 = a + (b - a) / delta;
            const double g1 = probe(f1);
            const double g2 = probe(f2);
            if (g1 < g2) {
                b = f1;
            } else {
                a = f2;
            }
            ++iters;
        }
    } else if (config.max_iters > 0 && (b - a) > config.width_tol) {
        double f1 = b - (b - a) / delta;
        double f2 = a + (b - a) / delta;
        double g1 = probe(f1);
        double g2 = probe(f2);
        while (true) {
            bool fresh_is_left;
            if (g1 < g2) {
                b = f2;
                f2 = f1;
                g2 = g1;
                f1 = b - (b - a) / delta;
                fresh_is_left = true;
            } else {
                a = f1;
                f1 = f2;
                g1 = g2;
                f2 = a + (b - a) / delta;
                fresh_is_left = false;
            }
            ++iters;
            if (iters >= config.max_iters || (b - a) <= config.width_tol) break;
            if (fresh_is_left) {
                g1 = probe(f1);
            } else {
                g2 = probe(f2);
            }
        }
    }

    if (!have_best) probe(0.5 * (a + b));
    result.final_interval = {a, b};
    return result;
}

double sign_memory_update(const GoldenSectionResult& result, bool accepted,
                          double memory) {
    if (accepted && result.f_z_best < 0.0) return -result.f_z_best;
    return memory;
}

}  // namespace swarm
