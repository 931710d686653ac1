#pragma once

#include <vector>

namespace fractoep {

// Gamma on the reals minus the poles {0, -1, -2, ...}.
// Throws PoleError at a pole.
double gamma(double x);

// 1/Gamma(x), zero at the poles.
double rgamma(double x);

struct BinomSeq {
    double alpha = 0.0;
    std::vector<double> coeffs;  // b_0 .. b_{count-1}

    double operator[](std::size_t u) const { return coeffs[u]; }
    std::size_t size() const { return coeffs.size(); }
};

// Coefficients of (1 - x)^(-alpha): b_0 = 1, b_{u+1} = b_u (alpha + u) / (u + 1).
BinomSeq binom_coeffs(double alpha, int count);

}  // namespace fractoep
