#include "swarm/problem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace swarm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Worst-value sentinel in the given sense; evaluation never throws so
/// stochastic search can continue past singular points.
double worst(Sense sense) { return sense == Sense::Maximize ? -kInf : kInf; }

double guard(double value, Sense sense) {
    return std::isnan(value) ? worst(sense) : value;
}

void check_dimension(const Problem& problem, std::span<const double> x) {
    if (static_cast<int>(x.size()) != problem.dimension) {
        throw std::invalid_argument("problem '" + problem.name + "' expects " +
                                    std::to_string(problem.dimension) +
                                    " coordinates, got " + std::to_string(x.size()));
    }
}

}  // namespace

std::vector<double> Problem::evaluation_point(std::span<const double> x) const {
    check_dimension(*this, x);
    std::vector<double> out(x.begin(), x.end());
    for (int j = 0; j < dimension; ++j) {
        if (!integral.empty() && integral[j]) out[j] = std::round(out[j]);
    }
    return out;
}

Evaluation Problem::evaluate(std::span<const double> x) const {
    Evaluation eval;
    eval.x = evaluation_point(x);
    eval.value = objective(eval.x);
    return eval;
}

double Problem::evaluate_min(std::span<const double> x) const {
    const double native = evaluate(x).value;
    return sense == Sense::Maximize ? -native : native;
}

std::vector<double> clamp(const Problem& problem, std::span<const double> x) {
    check_dimension(problem, x);
    std::vector<double> out(x.begin(), x.end());
    for (int j = 0; j < problem.dimension; ++j) {
        out[j] = std::clamp(out[j], problem.lower[j], problem.upper[j]);
    }
    return out;
}

// -- Transistor modelling ------------------------------------------------

namespace {
// g[i][k], five rows of four constants.
constexpr double kG[5][4] = {
    {0.485, 0.752, 0.869, 0.982},
    {0.369, 1.254, 0.703, 1.455},
    {5.2095, 10.0677, 22.9274, 20.2153},
    {23.3037, 101.779, 111.461, 191.267},
    {28.5132, 111.8467, 134.3884, 211.4823},
};
}  // namespace

double transistor_objective(std::span<const double> x, TransistorVariant variant) {
    const double gamma = x[0] * x[2] - x[1] * x[3];
    double sum = gamma * gamma;
    for (int k = 0; k < 4; ++k) {
        const double g1 = kG[0][k], g2 = kG[1][k], g3 = kG[2][k], g4 = kG[3][k],
                     g5 = kG[4][k];
        const double brace_a =
            (1.0 - x[0] * x[1]) * x[2] *
            (std::exp(x[4] * (g1 - g3 * x[6] * 1e-3 - g5 * x[7] * 1e-3)) - 1.0);
        const double brace_b =
            (1.0 - x[0] * x[1]) * x[3] *
            (std::exp(x[5] * (g1 - g2 - g3 * x[6] * 1e-3 + g4 * x[8] * 1e-3)) - 1.0);
        double alpha, beta;
        if (variant == TransistorVariant::Printed) {
            alpha = brace_a * g5 + g4 * x[1];
            beta = brace_b * g5 * x[0] + g4;
        } else {
            alpha = brace_a - g5 + g4 * x[1];
            beta = brace_b - g5 * x[0] + g4;
        }
        sum += alpha * alpha + beta * beta;
    }
    return std::isfinite(sum) ? sum : kInf;
}

// -- Gas production facility ---------------------------------------------

double gas_objective(std::span<const double> x) {
    const double x1 = x[0], x2 = x[1];
    const double bracket = (40.0 - x1) * std::log(x2 / 200.0);
    const double value = 61.8 + 5.72 * x1 + 0.2623 * std::pow(bracket, -0.85) +
                         0.087 * bracket + 700.23 * std::pow(x2, -0.75);
    return guard(value, Sense::Minimize);
}

// -- Roughened air heater --------------------------------------------------

double heater_objective(std::span<const double> x, HeaterVariant variant) {
    const double x1 = x[0], x2 = x[1], x3 = x[2];
    if (x1 <= 0.0 || x2 <= 0.0 || x3 <= 0.0) return -kInf;

    const double f_s = 0.079 * std::pow(x3, -0.25);
    const double pitch_term =
        variant == HeaterVariant::Printed ? std::pow(x3, 0.53) : std::pow(x2, 0.53);
    const double log_half = std::log(1.0 / (2.0 * x1));
    const double f_r_base = 0.95 * pitch_term + 2.5 * log_half * log_half - 3.75;
    const double f_r = 2.0 * std::pow(f_r_base, -2.0);
    const double f_bar = 0.5 * (f_s + f_r);
    const double e_plus = x1 * x3 * std::sqrt(f_bar / 2.0);
    if (!(e_plus > 0.0)) return -kInf;

    const double r_m = 0.95 * std::pow(x2, 0.53);
    const double g_h = 4.5 * std::pow(e_plus, 0.28) * std::pow(0.7, 0.57);
    const double value = 2.51 * std::log(e_plus) + 5.5 - 0.1 * r_m - g_h;
    return guard(value, Sense::Maximize);
}

// -- Gear train --------------------------------------------------------------

double gear_objective(std::span<const double> x) {
    const double t1 = std::round(x[0]);
    const double t2 = std::round(x[1]);
    const double t3 = std::round(x[2]);
    const double t4 = std::round(x[3]);
    const double diff = 1.0 / 6.931 - (t1 * t2) / (t3 * t4);
    return diff * diff;
}

// -- Synthetic test functions -------------------------------------------------

double sphere_objective(std::span<const double> x) {
    double sum = 0.0;
    for (double v : x) sum += v * v;
    return sum;
}

double rosenbrock_objective(std::span<const double> x) {
    double sum = 0.0;
    for (std::size_t j = 0; j + 1 < x.size(); ++j) {
        const double a = x[j + 1] - x[j] * x[j];
        const double b = 1.0 - x[j];
        sum += 100.0 * a * a + b * b;
    }
    return sum;
}

double rastrigin_objective(std::span<const double> x) {
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    double sum = 10.0 * static_cast<double>(x.size());
    for (double v : x) sum += v * v - 10.0 * std::cos(kTwoPi * v);
    return sum;
}

// -- Factories ---------------------------------------------------------------

namespace {

Problem box_problem(std::string name, std::vector<double> lower,
                    std::vector<double> upper, Sense sense,
                    std::function<double(std::span<const double>)> objective) {
    Problem p;
    p.name = std::move(name);
    p.dimension = static_cast<int>(lower.size());
    p.lower = std::move(lower);
    p.upper = std::move(upper);
    p.sense = sense;
    p.integral.assign(p.dimension, false);
    p.objective = std::move(objective);
    return p;
}

}  // namespace

Problem make_transistor(TransistorVariant variant) {
    // The source model only states x_i >= 0; the upper bound 15 is a search
    // box that contains all published solutions with margin.
    return box_problem("transistor", std::vector<double>(9, 0.0),
                       std::vector<double>(9, 15.0), Sense::Minimize,
                       [variant](std::span<const double> x) {
                           return transistor_objective(x, variant);
                       });
}

Problem make_gas() {
    return box_problem("gas", {17.5, 300.0}, {40.0, 600.0}, Sense::Minimize,
                       gas_objective);
}

Problem make_heater(HeaterVariant variant) {
    return box_problem("heater", {0.02, 10.0, 3000.0}, {0.8, 40.0, 20000.0},
                       Sense::Maximize, [variant](std::span<const double> x) {
                           return heater_objective(x, variant);
                       });
}

Problem make_gear() {
    Problem p = box_problem("gear", std::vector<double>(4, 12.0),
                            std::vector<double>(4, 60.0), Sense::Minimize,
                            gear_objective);
    p.integral.assign(4, true);
    return p;
}

Problem make_sphere(int dimension) {
    return box_problem("sphere", std::vector<double>(dimension, -5.12),
                       std::vector<double>(dimension, 5.12), Sense::Minimize,
                       sphere_objective);
}

Problem make_rosenbrock(int dimension) {
    return box_problem("rosenbrock", std::vector<double>(dimension, -2.048),
                       std::vector<double>(dimension, 2.048), Sense::Minimize,
                       rosenbrock_objective);
}

Problem make_rastrigin(int dimension) {
    return box_problem("rastrigin", std::vector<double>(dimension, -5.12),
                       std::vector<double>(dimension, 5.12), Sense::Minimize,
                       rastrigin_objective);
}

Problem make_problem(const std::string& name, const ProblemOptions& options) {
    if (name == "transistor") return make_transistor(options.transistor_variant);
    if (name == "gas") return make_gas();
    if (name == "heater") return make_heater(options.heater_variant);
    if (name == "gear") return make_gear();
    if (name == "sphere") return make_sphere(options.synthetic_dimension);
    if (name == "rosenbrock") return make_rosenbrock(options.synthetic_dimension);
    if (name == "rastrigin") return make_rastrigin(options.synthetic_dimension);
    throw std::invalid_argument("unknown problem '" + name + "'");
}

std::vector<std::string> problem_names() {
    return {"transistor", "gas", "heater", "gear",
            "sphere",     "rosenbrock", "rastrigin"};
}

}  // namespace swarm
