#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace swarm {

enum class Sense { Minimize, Maximize };

/// Which form of the air-heater friction term f_r to use. The printed
/// form carries a Reynolds-number exponent where the roughness-pitch
/// term appears in the literature; both are kept for sensitivity checks.
enum class HeaterVariant { Printed, Literature };

/// Which form of the transistor residuals to use. In the printed form the
/// brace multiplies the g5 constant; the classic least-squares model from
/// the literature subtracts it instead. The two have very different
/// landscapes (the printed minimum on [0,15]^9 is ~1.3e3, the classic one
/// is ~0), so both are kept behind a switch.
enum class TransistorVariant { Printed, Classic };

/// A point together with the objective value it produced. `x` is the
/// vector as actually evaluated: integral coordinates are rounded first.
struct Evaluation {
    std::vector<double> x;
    double value = 0.0;  // native sense
};

/// A box-bounded objective. Immutable after construction; safe to share
/// across concurrent runs as long as `objective` is a pure function.
struct Problem {
    std::string name;
    int dimension = 0;
    std::vector<double> lower;
    std::vector<double> upper;
    Sense sense = Sense::Minimize;
    std::vector<bool> integral;  // true -> coordinate rounded before evaluation
    std::function<double(std::span<const double>)> objective;

    /// Rounds integral coordinates, then calls the objective (native sense).
    Evaluation evaluate(std::span<const double> x) const;

    /// The point the objective would actually see: integral coordinates
    /// rounded, everything else untouched. Makes no objective call.
    std::vector<double> evaluation_point(std::span<const double> x) const;

    /// Objective on the minimization scale the engines work in.
    double evaluate_min(std::span<const double> x) const;

    /// Maps a minimization-scale value back to the native sense.
    double to_native(double min_scale_value) const {
        return sense == Sense::Maximize ? -min_scale_value : min_scale_value;
    }

    bool maximizing() const { return sense == Sense::Maximize; }
};

/// Projects x onto the problem's box, coordinate by coordinate.
/// Throws std::invalid_argument on dimension mismatch.
std::vector<double> clamp(const Problem& problem, std::span<const double> x);

// -- Benchmark objectives (native sense, sentinel-safe) ----------------

/// Transistor-model least squares: gamma^2 + sum_k (alpha_k^2 + beta_k^2).
double transistor_objective(std::span<const double> x,
                            TransistorVariant variant = TransistorVariant::Printed);

/// Gas production facility cost; singular at x1 = 40 (returns +inf).
double gas_objective(std::span<const double> x);

/// Roughened air heater thermohydraulic performance (maximized).
double heater_objective(std::span<const double> x,
                        HeaterVariant variant = HeaterVariant::Printed);

/// Gear train ratio error; coordinates rounded to integers internally.
double gear_objective(std::span<const double> x);

double sphere_objective(std::span<const double> x);
double rosenbrock_objective(std::span<const double> x);
double rastrigin_objective(std::span<const double> x);

// -- Factories and registry --------------------------------------------

Problem make_transistor(TransistorVariant variant = TransistorVariant::Printed);
Problem make_gas();
Problem make_heater(HeaterVariant variant = HeaterVariant::Printed);
Problem make_gear();
Problem make_sphere(int dimension);
Problem make_rosenbrock(int dimension);
Problem make_rastrigin(int dimension);

struct ProblemOptions {
    HeaterVariant heater_variant = HeaterVariant::Printed;
    TransistorVariant transistor_variant = TransistorVariant::Printed;
    int synthetic_dimension = 10;  // used by sphere/rosenbrock/rastrigin
};

/// Looks a problem up by registry name. Throws std::invalid_argument,
/// naming the offending token, when the name is unknown.
Problem make_problem(const std::string& name, const ProblemOptions& options = {});

/// Registry names, in CLI order.
std::vector<std::string> problem_names();

}  // namespace swarm
