#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "swarm/problem.hpp"

using namespace swarm;

namespace {

// Independent recomputation of the residual at the all-zero point: only
// the constant g4 column survives in the beta terms.
double transistor_zero_oracle() {
    const double g4[] = {23.3037, 101.779, 111.461, 191.267};
    double sum = 0.0;
    for (double v : g4) sum += v * v;
    return sum;
}

double gear_oracle(int a, int b, int c, int d) {
    const double r = 1.0 / 6.931 - (double(a) * double(b)) / (double(c) * double(d));
    return r * r;
}

}  // namespace

TEST_CASE("clamp projects onto the box and is idempotent") {
    const Problem gas = make_gas();
    CHECK(clamp(gas, std::vector<double>{10.0, 700.0}) ==
          std::vector<double>{17.5, 600.0});
    CHECK(clamp(gas, std::vector<double>{20.0, 400.0}) ==
          std::vector<double>{20.0, 400.0});

    const Problem gear = make_gear();
    CHECK(clamp(gear, std::vector<double>{61.0, 11.4, 30.0, 30.0}) ==
          std::vector<double>{60.0, 12.0, 30.0, 30.0});

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> wide(-100.0, 1000.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> x = {wide(rng), wide(rng)};
        const auto once = clamp(gas, x);
        CHECK(clamp(gas, once) == once);
        for (int j = 0; j < 2; ++j) {
            CHECK(once[j] >= gas.lower[j]);
            CHECK(once[j] <= gas.upper[j]);
        }
    }

    CHECK_THROWS_AS(clamp(gas, std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("transistor objective") {
    const std::vector<double> zeros(9, 0.0);
    const double at_zero = transistor_objective(zeros);
    CHECK(at_zero == doctest::Approx(transistor_zero_oracle()).epsilon(1e-9));
    CHECK(at_zero == doctest::Approx(59908.64708469).epsilon(1e-6));

    // x1 x3 = x2 x4 kills the gamma term: value equals the same point with
    // the gamma contribution removed.
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(0.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> x(9);
        for (double& v : x) v = unit(rng);
        x[3] = x[0] * x[2] / std::max(x[1], 1e-9);  // force x1 x3 = x2 x4
        const double gamma = x[0] * x[2] - x[1] * x[3];
        CHECK(std::abs(gamma) < 1e-9);
        CHECK(transistor_objective(x) >= 0.0);
    }

    std::uniform_real_distribution<double> box(0.0, 15.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> x(9);
        for (double& v : x) v = box(rng);
        CHECK(transistor_objective(x) >= 0.0);
        CHECK(transistor_objective(x, TransistorVariant::Classic) >= 0.0);
    }
}

TEST_CASE("transistor classic variant reproduces literature-scale residuals") {
    // The subtractive form carries the known near-zero solution; the
    // printed form evaluates the same points many orders of magnitude
    // higher. Reference values were fixed by direct substitution.
    const std::vector<double> source{0.9, 0.45, 1.0, 2.0, 8.0, 8.0, 5.0, 1.0, 2.0};
    CHECK(transistor_objective(source, TransistorVariant::Classic) ==
          doctest::Approx(1.7881583721892765e-07).epsilon(1e-9));
    CHECK(transistor_objective(source) > 1e6);

    const std::vector<double> reported{0.9009, 0.5224, 1.0764, 1.9494, 7.8536,
                                       8.8364, 4.7712, 1.0074, 1.8545};
    CHECK(transistor_objective(reported, TransistorVariant::Classic) ==
          doctest::Approx(0.033909167884090846).epsilon(1e-9));

    // At the origin the two variants separate by exactly sum g5k^2.
    const std::vector<double> zeros(9, 0.0);
    const double g5[] = {28.5132, 111.8467, 134.3884, 211.4823};
    double g5_sq = 0.0;
    for (double v : g5) g5_sq += v * v;
    CHECK(transistor_objective(zeros, TransistorVariant::Classic) ==
          doctest::Approx(transistor_objective(zeros) + g5_sq).epsilon(1e-12));
}

TEST_CASE("gas objective matches the frozen point values") {
    CHECK(gas_objective(std::vector<double>{17.5, 600.0}) ==
          doctest::Approx(169.84370298892986).epsilon(1e-12));
    CHECK(gas_objective(std::vector<double>{17.5, 300.0}) ==
          doctest::Approx(172.44779276666583).epsilon(1e-12));
    CHECK(gas_objective(std::vector<double>{17.5, 600.0}) <
          gas_objective(std::vector<double>{17.5, 300.0}));

    // 1-D scan over x2 at fixed x1: the upper end wins.
    double best_x2 = 300.0;
    double best = gas_objective(std::vector<double>{17.5, 300.0});
    for (int j = 0; j <= 300; ++j) {
        const double x2 = 300.0 + j;
        const double v = gas_objective(std::vector<double>{17.5, x2});
        if (v < best) {
            best = v;
            best_x2 = x2;
        }
    }
    CHECK(best_x2 == 600.0);

    // x1 = 40 zeroes the bracket; the -0.85 power turns singular.
    const double singular = gas_objective(std::vector<double>{40.0, 400.0});
    CHECK(std::isinf(singular));
    CHECK(singular > 0.0);
}

TEST_CASE("heater objective, printed variant") {
    const std::vector<double> x{0.5, 10.0, 10000.0};
    CHECK(heater_objective(x) == doctest::Approx(2.049898039721665).epsilon(1e-12));

    // In the printed variant x2 only enters through R_M = 0.95 x2^0.53, so
    // moving x2 changes the objective by exactly -0.1 * delta(R_M).
    const double at_20 = heater_objective(std::vector<double>{0.5, 20.0, 10000.0});
    const double delta_rm = 0.95 * (std::pow(20.0, 0.53) - std::pow(10.0, 0.53));
    CHECK(at_20 - heater_objective(x) == doctest::Approx(-0.1 * delta_rm).epsilon(1e-12));

    const double literature =
        heater_objective(x, HeaterVariant::Literature);
    CHECK(literature != heater_objective(x));
    CHECK(std::isfinite(literature));
}

TEST_CASE("gear objective rounds and matches the enumeration-backed values") {
    CHECK(gear_objective(std::vector<double>{16.0, 19.0, 43.0, 49.0}) ==
          doctest::Approx(2.7008571488865134e-12).epsilon(1e-9));
    CHECK(gear_objective(std::vector<double>{12.0, 12.0, 12.0, 12.0}) ==
          doctest::Approx(0.7322578740113634).epsilon(1e-12));
    CHECK(gear_objective(std::vector<double>{16.4, 19.2, 42.7, 49.1}) ==
          gear_objective(std::vector<double>{16.0, 19.0, 43.0, 49.0}));

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> teeth(12, 60);
    for (int trial = 0; trial < 500; ++trial) {
        const int a = teeth(rng), b = teeth(rng), c = teeth(rng), d = teeth(rng);
        const std::vector<double> x{double(a), double(b), double(c), double(d)};
        CHECK(gear_objective(x) == gear_oracle(a, b, c, d));
        // product symmetry: swap within either pair
        CHECK(gear_objective(std::vector<double>{double(b), double(a), double(c),
                                                 double(d)}) == gear_objective(x));
        CHECK(gear_objective(std::vector<double>{double(a), double(b), double(d),
                                                 double(c)}) == gear_objective(x));
    }
}

TEST_CASE("synthetic objectives") {
    CHECK(sphere_objective(std::vector<double>{0.0, 0.0, 0.0}) == 0.0);
    CHECK(sphere_objective(std::vector<double>{1.0, 2.0}) == 5.0);
    CHECK(sphere_objective(std::vector<double>{-1.0, 1.0}) == 2.0);
    CHECK(rosenbrock_objective(std::vector<double>{1.0, 1.0, 1.0}) == 0.0);
    CHECK(rastrigin_objective(std::vector<double>{0.0, 0.0}) ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("problem registry") {
    const Problem gear = make_problem("gear");
    CHECK(gear.dimension == 4);
    CHECK(gear.sense == Sense::Minimize);
    for (int j = 0; j < 4; ++j) {
        CHECK(gear.lower[j] == 12.0);
        CHECK(gear.upper[j] == 60.0);
        CHECK(gear.integral[j]);
    }

    const Problem heater = make_problem("heater");
    CHECK(heater.dimension == 3);
    CHECK(heater.sense == Sense::Maximize);

    CHECK_THROWS_WITH_AS(make_problem("nosuch"),
                         doctest::Contains("nosuch"), std::invalid_argument);

    for (const auto& name : problem_names()) {
        const Problem p = make_problem(name);
        CHECK(p.dimension > 0);
        for (int j = 0; j < p.dimension; ++j) CHECK(p.lower[j] < p.upper[j]);
    }
}

TEST_CASE("evaluation applies the integral mask and reports the point used") {
    const Problem gear = make_problem("gear");
    const Evaluation eval =
        gear.evaluate(std::vector<double>{16.4, 19.2, 42.7, 49.1});
    CHECK(eval.x == std::vector<double>{16.0, 19.0, 43.0, 49.0});
    for (double v : eval.x) {
        CHECK(v == std::round(v));
        CHECK(v >= 12.0);
        CHECK(v <= 60.0);
    }
    CHECK(eval.value == gear_oracle(16, 19, 43, 49));

    // Rounding contract: objective(x) == objective(round(x)).
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> box(12.0, 60.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> x{box(rng), box(rng), box(rng), box(rng)};
        std::vector<double> rounded = x;
        for (double& v : rounded) v = std::round(v);
        CHECK(gear.evaluate(x).value == gear.evaluate(rounded).value);
    }
}

TEST_CASE("maximization problems negate through evaluate_min") {
    const Problem heater = make_problem("heater");
    const std::vector<double> x{0.5, 10.0, 10000.0};
    CHECK(heater.evaluate_min(x) == -heater.evaluate(x).value);
    CHECK(heater.to_native(heater.evaluate_min(x)) == heater.evaluate(x).value);

    // In-bounds evaluations stay finite for every registered problem; the
    // declared singular loci sit on measure-zero sets random draws miss.
    std::mt19937_64 rng(23);
    for (const auto& name : problem_names()) {
        const Problem p = make_problem(name);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<double> point(p.dimension);
            for (int j = 0; j < p.dimension; ++j) {
                point[j] = p.lower[j] + std::uniform_real_distribution<double>(
                                            0.0, 1.0)(rng) *
                                            (p.upper[j] - p.lower[j]);
            }
            CHECK(std::isfinite(p.evaluate(point).value));
        }
    }
}
