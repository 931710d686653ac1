#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fractoep/errors.hpp"
#include "fractoep/fracderiv.hpp"

using namespace fractoep;

namespace {
const auto t_fn = FunctionSpec::parse("t");
const auto bridge = FunctionSpec::parse("bridge");
const auto zero = FunctionSpec::parse("const:0");
}  // namespace

TEST_CASE("registry parsing") {
    CHECK(FunctionSpec::parse("poly:1,2,3")(2.0) == 17.0);
    CHECK(FunctionSpec::parse("const:2.5")(0.3) == 2.5);
    CHECK(FunctionSpec::parse("pow:0.5")(0.25) == 0.5);
    CHECK(bridge(0.5) == 0.25);
    CHECK(FunctionSpec::parse("bump:0,1")(0.5) == doctest::Approx(0.5625));
    CHECK(FunctionSpec::parse("bump:0,1")(1.5) == 0.0);
    CHECK(FunctionSpec::parse("tri:0,2")(1.0) == 0.5);
    CHECK(FunctionSpec::parse("sinpi")(0.5) == doctest::Approx(1.0));
    CHECK_THROWS_AS(FunctionSpec::parse("nope"), DomainError);
    CHECK_THROWS_AS(FunctionSpec::parse("poly:1,x"), DomainError);
    CHECK_THROWS_AS(FunctionSpec::parse("bump:1"), DomainError);
}

TEST_CASE("marchaud_lower closed forms") {
    CHECK(marchaud_lower(t_fn, 0.5, 0.25) == doctest::Approx(0.79788456080286536).epsilon(1e-9));
    CHECK(marchaud_lower(FunctionSpec::parse("poly:0,0,1"), 0.5, 0.5) ==
          doctest::Approx(0.75225277806367505).epsilon(1e-9));
    CHECK(marchaud_lower(bridge, 0.5, 0.5) == doctest::Approx(0.37612638903183752).epsilon(1e-9));
    CHECK(marchaud_lower(FunctionSpec::sinpi(), 0.5, 0.3) == doctest::Approx(2.1312403921057852).epsilon(1e-9));
    CHECK(marchaud_lower(zero, 0.5, 0.5) == 0.0);
}

TEST_CASE("power rule agrees with quadrature") {
    const auto f = FunctionSpec::parse("poly:0.3,-1,2,0.5");
    for (double a : {0.2, 0.5, 0.8})
        for (double x : {0.25, 0.5, 0.75})
            CHECK(marchaud_lower(f, a, x) == doctest::Approx(*f.dalpha_exact(a, x)).epsilon(1e-8));
}

TEST_CASE("marchaud_upper") {
    CHECK(marchaud_upper(zero, 0.5, 0.4) == 0.0);
    CHECK(marchaud_upper(FunctionSpec::parse("poly:1,-1"), 0.5, 0.75) ==
          doctest::Approx(0.79788456080286536).epsilon(1e-9));
    CHECK(marchaud_upper(FunctionSpec::sinpi(), 0.5, 0.3) == doctest::Approx(0.23766888285723108).epsilon(1e-9));
    const auto f = FunctionSpec::parse("poly:0.2,1,-3,1");
    const auto g = FunctionSpec::custom([&f](double t) { return f(1.0 - t); });
    CHECK(marchaud_upper(f, 0.6, 0.35) == doctest::Approx(marchaud_lower(g, 0.6, 0.65)).epsilon(1e-9));
}

TEST_CASE("grid derivative converges to the Marchaud value") {
    CHECK(std::abs(dalpha_grid(zero, 0.5, 0.5, 64)) == 0.0);
    double prev = 1e9;
    for (int N : {256, 1024, 4096}) {
        const auto v = dalpha_grid(bridge, 0.5, 0.5, N);
        const double err = std::abs(v.real() - 0.37612638903183752);
        CHECK(err < prev);
        prev = err;
        CHECK(std::abs(v.imag()) <= 1e-12 * std::max(1.0, std::abs(v.real())));
    }
    const auto v = dalpha_grid(t_fn, 0.5, 0.25, 4096);
    CHECK(std::abs(v.real() / 0.79788456080286536 - 1.0) < 0.05);
}

TEST_CASE("grid derivative at R < 1 has a vanishing imaginary part only in the limit") {
    const auto v = dalpha_grid(bridge, 0.5, 0.5, 256, 0.99);
    CHECK(std::isfinite(v.real()));
    CHECK(v.imag() == 0.0);  // coefficients are real for every R
}

TEST_CASE("grid derivative is linear") {
    const int N = 512;
    const auto op = build({0.5, 1.0, Variant::lower}, N);
    const auto h = linear_combination(2.0, t_fn, -3.0, bridge);
    const auto a = dalpha_grid(op, sample(t_fn, N), 200);
    const auto b = dalpha_grid(op, sample(bridge, N), 200);
    const auto c = dalpha_grid(op, sample(h, N), 200);
    CHECK(std::abs(c - (2.0 * a - 3.0 * b)) < 1e-10);
}

TEST_CASE("Grunwald-Letnikov") {
    const auto w = gl_weights(0.5, 4);
    CHECK(w == std::vector<double>{1.0, -0.5, -0.125, -0.0625});
    const double v = gl_derivative(t_fn, 0.5, 0.25, 4096);
    CHECK(v == doctest::Approx(0.56418958354775629).epsilon(0.01));
    const double ratio = dalpha_grid(t_fn, 0.5, 0.5, 4096).real() / gl_derivative(t_fn, 0.5, 0.5, 4096);
    CHECK(std::abs(ratio / std::sqrt(2.0) - 1.0) < 0.02);
}

TEST_CASE("endpoint values") {
    double prev = 1e9;
    for (int N : {256, 1024, 4096}) {
        const double v = std::abs(dalpha_endpoint(bridge, 0.5, Endpoint::zero, N).grid);
        CHECK(v < prev);
        prev = v;
    }
    CHECK(prev < 0.05);
    CHECK(std::abs(dalpha_endpoint(zero, 0.5, Endpoint::one, 64).grid) == 0.0);
    const auto rep = dalpha_endpoint(bridge, 0.5, Endpoint::one, 1024);
    CHECK(rep.limit_stated == doctest::Approx(-0.53192304053524357).epsilon(1e-7));
    CHECK(rep.limit_reflected == doctest::Approx(-0.53192304053524357).epsilon(1e-7));
    const auto asym = dalpha_endpoint(FunctionSpec::parse("poly:0,0,1,-1"), 0.5, Endpoint::one, 1024);
    CHECK(asym.limit_stated == doctest::Approx(-0.10638460810704871).epsilon(1e-7));
    CHECK(asym.limit_reflected == doctest::Approx(-0.42553843242819485).epsilon(1e-7));
    // The row at k = N follows the reflected weight.
    CHECK(std::abs(asym.grid.real() - asym.limit_reflected) < 0.05 * std::abs(asym.limit_reflected));
    CHECK_THROWS_AS(dalpha_endpoint(t_fn, 0.5, Endpoint::one, 64), DomainError);
}

TEST_CASE("composite order 2.5") {
    const auto f = FunctionSpec::parse("poly:0,0,1,-2,1");  // t^2 (1-t)^2
    const auto rep = dalpha_composite(f, 2.5, 0.5, 1024);
    CHECK(rep.value == doctest::Approx(-9.0270333367641006).epsilon(1e-8));
    CHECK(std::abs(rep.grid_full.real() / rep.grid_split.real() - 1.0) < 0.05);
    CHECK(std::abs(rep.grid_full.real() / rep.value - 1.0) < 0.05);
    const auto g = FunctionSpec::parse("poly:0,1,-1");  // bridge fails the derivative boundary condition
    CHECK_THROWS_AS(dalpha_composite(g, 2.5, 0.5, 256), DomainError);
}

TEST_CASE("integer-order action") {
    const auto f = FunctionSpec::sinpi();
    for (int n : {1, 2}) {
        double prev = 1e9;
        for (int N : {64, 256, 1024}) {
            double worst = 0.0;
            for (int k = N / 4; k <= 3 * N / 4; k += N / 16) {
                const double exact = (*f.derivative(n))(static_cast<double>(k) / N);
                worst = std::max(worst, std::abs(integer_action(f, n, k, N) - exact));
            }
            CHECK(worst < prev);
            prev = worst;
        }
        CHECK(prev < 1e-3);
    }
}
