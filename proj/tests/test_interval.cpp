#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fractoep/errors.hpp"
#include "fractoep/fracint.hpp"
#include "fractoep/interval.hpp"

using namespace fractoep;

TEST_CASE("interval map") {
    const IntervalMap iv(2.0, 4.0);
    CHECK(iv.to_unit(3.0) == 0.5);
    CHECK(iv.from_unit(0.25) == 2.5);
    CHECK(iv.length() == 2.0);
    CHECK_THROWS_AS(IntervalMap(1.0, 1.0), DomainError);
    const auto g = iv.pullback(FunctionSpec::parse("t"));
    CHECK(g(0.5) == 3.0);
}

TEST_CASE("derivative on [a, b]") {
    const IntervalMap iv(2.0, 4.0);
    const auto f = FunctionSpec::custom([](double u) { return u - 2.0; });
    CHECK(d_alpha_ab(f, 0.5, 3.0, iv) == doctest::Approx(2.2567583341910251).epsilon(1e-8));
    CHECK(d_alpha_ab(FunctionSpec::parse("const:1"), 0.5, 3.0, iv) ==
          doctest::Approx(1.1283791670955126).epsilon(1e-8));
    const double grid = d_alpha_ab(f, 0.5, 3.0, iv, GridBackend{4096, 1.0});
    CHECK(std::abs(grid / 2.2567583341910251 - 1.0) < 0.01);
}

TEST_CASE("integral on [a, b]") {
    const IntervalMap iv(2.0, 4.0);
    CHECK(j_alpha_ab(FunctionSpec::parse("const:1"), 0.5, 3.0, iv) ==
          doctest::Approx(0.56418958354775629).epsilon(1e-8));
    CHECK(j_alpha_ab(FunctionSpec::parse("const:1"), 0.5, 2.0, iv) == 0.0);
}

TEST_CASE("whole-line operators") {
    CHECK(d_alpha_inf(FunctionSpec::parse("tri:0,1"), 0.5, 0.5) ==
          doctest::Approx(-0.30234828657934546).epsilon(1e-8));
    const auto bump = FunctionSpec::parse("bump:0,1");
    const double xs[] = {-0.5, 0.0, 0.5};
    const double j_ref[] = {0.18627211647291001, 0.56738457657092647, 0.67008344489543303};
    const double d_ref[] = {1.4615196830951401, 1.2158240926519853, -0.44672229659695535};
    for (int i = 0; i < 3; ++i) {
        CHECK(j_alpha_inf(bump, 0.5, xs[i]) == doctest::Approx(j_ref[i]).epsilon(1e-8));
        CHECK(d_alpha_inf(bump, 0.5, xs[i]) == doctest::Approx(d_ref[i]).epsilon(1e-8));
    }
    CHECK(j_alpha_inf(bump, 0.5, -2.0) == 0.0);
    CHECK(d_alpha_inf(bump, 0.5, -2.0) == 0.0);
    CHECK_THROWS_AS(d_alpha_inf(FunctionSpec::sinpi(), 0.5, 0.5), DomainError);
}

TEST_CASE("whole-line derivative inverts the whole-line integral") {
    const auto bump = FunctionSpec::parse("bump:0,1");
    const auto j = j_alpha_inf_function(bump, 0.5);
    for (double x : {-0.5, 0.0, 0.5})
        CHECK(d_alpha_inf(j, 0.5, x, 1e-8) == doctest::Approx(bump(x)).epsilon(1e-5));
}

TEST_CASE("truncated power") {
    auto f = FunctionSpec::custom([](double u) { return u > 0.0 ? u : 0.0; });
    f.set_support(0.0, std::nullopt);
    auto g = FunctionSpec::custom([](double u) { return u > 0.0 && u < 0.7 ? u : 0.0; });
    g.set_support(0.0, 0.7);
    g.set_breakpoints({0.7});
    CHECK(j_alpha_inf(f, 0.5, 0.7) == doctest::Approx(0.31152712164581209).epsilon(1e-8));
    CHECK(j_alpha_inf(f, 0.5, 1.0) == doctest::Approx(0.53192304053524357).epsilon(1e-8));
    // Cutting the support at 0.7 leaves every value up to 0.7 unchanged.
    CHECK(j_alpha_inf(g, 0.5, 0.7) == doctest::Approx(0.31152712164581209).epsilon(1e-8));
    CHECK(j_alpha_inf(g, 0.5, 1.0) < j_alpha_inf(f, 0.5, 1.0));
}

TEST_CASE("whole-line derivative is translation invariant") {
    const auto f = FunctionSpec::parse("bump:0,1");
    const auto g = FunctionSpec::parse("bump:2.5,1");
    for (double x : {-0.5, 0.2, 0.9})
        CHECK(d_alpha_inf(g, 0.5, x + 2.5) == doctest::Approx(d_alpha_inf(f, 0.5, x)).epsilon(1e-8));
}

TEST_CASE("integral scaled by the interval length does not depend on the interval") {
    const auto f = FunctionSpec::parse("tri:0.5,0.5");
    const IntervalMap inner(0.0, 1.0), outer(-2.0, 3.0);
    for (double x : {0.3, 0.6, 0.9}) {
        const double a = j_alpha_ab(f, 0.5, x, inner) * std::pow(inner.length(), 0.5);
        const double b = j_alpha_ab(f, 0.5, x, outer) * std::pow(outer.length(), 0.5);
        CHECK(a == doctest::Approx(b).epsilon(1e-9));
    }
}

TEST_CASE("quadrature and pullback grid agree on [a, b]") {
    const IntervalMap iv(-1.0, 2.0);
    const auto f = FunctionSpec::parse("poly:0.5,1,-0.25");
    const double q = d_alpha_ab(f, 0.5, 0.5, iv);
    const double g = d_alpha_ab(f, 0.5, 0.5, iv, GridBackend{2048, 1.0});
    CHECK(std::abs(g / q - 1.0) < 0.01);
}
