#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fractoep/errors.hpp"
#include "fractoep/symbol.hpp"

using namespace fractoep;

TEST_CASE("eval") {
    CHECK(std::abs(eval({1.0, 0.5, Variant::lower}, 0.0) - cplx(0.75, 0.0)) < 1e-15);
    for (double th : {-3.0, -1.0, 0.2, 1.3, M_PI}) {
        const double s = std::sin(th);
        CHECK(std::abs(eval({2.0, 1.0, Variant::lower}, th) - cplx(-4.0 * s * s, 0.0)) < 1e-13);
    }
    // mpmath, principal branch.
    const cplx v = eval({0.5, 0.9, Variant::lower}, 1.0);
    CHECK(v.real() == doctest::Approx(0.92642274900357534).epsilon(1e-14));
    CHECK(v.imag() == doctest::Approx(-0.81747116760858399).epsilon(1e-14));
    CHECK(std::abs(eval({0.5, 0.9, Variant::upper}, 1.0) - std::conj(v)) < 1e-15);
    CHECK(eval({0.5, 1.0, Variant::gl}, 0.0) == cplx(0.0, 0.0));
    CHECK_THROWS_AS(eval({0.5, 1.5, Variant::lower}, 0.0), DomainError);
}

TEST_CASE("series: polynomial symbol alpha = 1") {
    SymbolSpec s{1.0, 0.7, Variant::lower};
    CHECK(std::abs(fourier_coeff_series(s, 0) - 0.51) < 1e-15);
    CHECK(std::abs(fourier_coeff_series(s, 1) + 0.7) < 1e-15);
    CHECK(std::abs(fourier_coeff_series(s, -1) - 0.7) < 1e-15);
    CHECK(fourier_coeff_series(s, 2) == cplx(0.0));
    CHECK(fourier_coeff_series(s, -5) == cplx(0.0));
    CHECK(fourier_coeff_series({2.0, 1.0, Variant::lower}, 3) == cplx(0.0));
}

TEST_CASE("series against mpmath quadrature of the symbol") {
    CHECK(fourier_coeff_series({0.5, 0.9, Variant::lower}, 3).real() == doctest::Approx(-0.05582065934426761).epsilon(1e-9));
    CHECK(fourier_coeff_series({0.5, 0.9, Variant::lower}, -3).real() == doctest::Approx(0.05582065934426761).epsilon(1e-9));
    struct Ref {
        double a;
        int n;
        double v;
    };
    const Ref refs[] = {{0.3, 64, -0.0012767884111979737}, {0.3, -7, 0.022742051585362995},
                        {0.5, 64, -0.00077924359034719843}, {0.5, -7, 0.021678619264261641},
                        {0.7, 64, -0.00032319961858466013}, {0.7, -7, 0.014060996614808473},
                        {1.5, 64, 3.6543773496197475e-5},  {1.5, -7, -0.0096639246054528368},
                        {0.5, 0, 0.76275976350181319}};
    for (const auto& r : refs) {
        const cplx c = fourier_coeff_series({r.a, 1.0, Variant::lower}, r.n, 1e-13);
        CHECK(std::abs(c.real() - r.v) < 1e-11);
        CHECK(c.imag() == 0.0);
    }
}

TEST_CASE("upper coefficient at n is lower coefficient at -n") {
    for (int n = -9; n <= 9; ++n) {
        CHECK(std::abs(fourier_coeff_series({0.4, 0.9, Variant::upper}, n) -
                       fourier_coeff_series({0.4, 0.9, Variant::lower}, -n)) < 1e-15);
    }
}

TEST_CASE("gl variant is one-sided") {
    SymbolSpec s{0.5, 1.0, Variant::gl};
    CHECK(fourier_coeff_series(s, -2) == cplx(0.0));
    CHECK(fourier_coeff_series(s, 0) == cplx(1.0));
    CHECK(fourier_coeff_series(s, 1).real() == -0.5);
    CHECK(fourier_coeff_series(s, 2).real() == -0.125);
}

TEST_CASE("series divergence and bad input") {
    CHECK_THROWS_AS(fourier_coeff_series({-0.6, 1.0, Variant::lower}, 2), ConvergenceError);
    CHECK_THROWS_AS(fourier_coeff_series({0.5, 0.0, Variant::lower}, 2), DomainError);
    CHECK_THROWS_AS(fourier_coeff_series({0.5, 1.0, Variant::lower}, 2, 0.0), DomainError);
}

TEST_CASE("fft oracle") {
    const auto c = fourier_coeff_fft({1.0, 0.7, Variant::lower}, 256);
    CHECK(std::abs(coeff_at(c, 0) - 0.51) < 1e-12);
    CHECK(std::abs(coeff_at(c, 1) + 0.7) < 1e-12);
    CHECK(std::abs(coeff_at(c, -1) - 0.7) < 1e-12);
    CHECK(std::abs(coeff_at(c, 2)) < 1e-12);
    const auto one = fourier_coeff_fft({0.0, 0.7, Variant::lower}, 64);
    CHECK(std::abs(coeff_at(one, 0) - 1.0) < 1e-15);
    for (int n = 1; n < 32; ++n) CHECK(std::abs(coeff_at(one, n)) < 1e-15);
    CHECK_THROWS_AS(fourier_coeff_fft({0.5, 0.7, Variant::lower}, 100), DomainError);
}

TEST_CASE("fft grid refinement is stable at R = 1") {
    const SymbolSpec s{0.5, 1.0, Variant::lower};
    const auto a = fourier_coeff_fft(s, 1 << 14);
    const auto b = fourier_coeff_fft(s, 1 << 15);
    double worst = 0.0;
    for (int n = -512; n <= 512; ++n) worst = std::max(worst, std::abs(coeff_at(a, n) - coeff_at(b, n)));
    CHECK(worst < 1e-6);
}

TEST_CASE("series and fft agree") {
    for (double a : {0.5, 0.7}) {
        for (double R : {0.9, 0.99}) {
            const SymbolSpec s{a, R, Variant::lower};
            const auto f = fourier_coeff_fft(s, 1 << 14);
            for (int n = -64; n <= 64; ++n) CHECK(std::abs(fourier_coeff_series(s, n) - coeff_at(f, n)) < 1e-8);
        }
    }
    const SymbolSpec s{0.3, 1.0, Variant::lower};
    const auto f = fourier_coeff_fft_extrapolated(s, 1 << 14);
    for (int n = -64; n <= 64; ++n) CHECK(std::abs(fourier_coeff_series(s, n) - coeff_at(f, n)) < 1e-8);
}

TEST_CASE("asymptotic law") {
    CHECK(asymptotic_coeff(0.5, 100) == doctest::Approx(-0.00039894228040143269).epsilon(1e-12));
    CHECK(asymptotic_coeff(0.5, -100) == doctest::Approx(-0.00039894228040143269).epsilon(1e-12));
    CHECK(asymptotic_coeff(0.5, -101) == doctest::Approx(0.00039303208489763091).epsilon(1e-12));
    CHECK(asymptotic_coeff(1.5, 100) == doctest::Approx(1.1968268412042981e-5).epsilon(1e-12));
    CHECK_THROWS_AS(asymptotic_coeff(1.0, 5), PoleError);
    CHECK_THROWS_AS(asymptotic_coeff(0.5, 0), DomainError);
}

TEST_CASE("series approaches the asymptotic law") {
    double prev = 1e9;
    for (int n : {64, 128, 256, 512}) {
        const double r = fourier_coeff_series({0.5, 1.0, Variant::lower}, n).real() / asymptotic_coeff(0.5, n);
        CHECK(std::abs(r - 1.0) < prev);
        prev = std::abs(r - 1.0);
    }
    CHECK(prev <= 0.05);
}

TEST_CASE("partial sums of |coefficients| stay bounded") {
    const auto c = fourier_coeffs_series({0.5, 1.0, Variant::lower}, 4096);
    double s1024 = 0.0, s4096 = 0.0;
    for (int n = -4096; n <= 4096; ++n) {
        const double v = std::abs(c[n + 4096]);
        s4096 += v;
        if (std::abs(n) <= 1024) s1024 += v;
    }
    CHECK(s4096 - s1024 < 0.05);
    CHECK(s4096 < 4.0);
}
