#pragma once

#include <complex>
#include <vector>

#include "fractoep/functions.hpp"

namespace fractoep {

// Samples at a + j (b - a) / N, j = 0..N.
struct GridFunction {
    double a = 0.0;
    double b = 1.0;
    int N = 0;
    std::vector<std::complex<double>> samples;

    double node(int j) const { return a + (b - a) * j / N; }
};

// Samples f on [a, b]; a non-finite value at either endpoint is stored as 0.
GridFunction sample(const FunctionSpec& f, int N, double a = 0.0, double b = 1.0);

}  // namespace fractoep
