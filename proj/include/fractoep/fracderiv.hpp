#pragma once

#include <complex>
#include <vector>

#include "fractoep/functions.hpp"
#include "fractoep/grid.hpp"
#include "fractoep/quadrature.hpp"
#include "fractoep/toeplitz.hpp"

namespace fractoep {

// N^a sum_l T_N(symbol)_{k+1,l+1} f(l/N), k = floor(N x); alpha may exceed 1.
std::complex<double> dalpha_grid(const FunctionSpec& f, double alpha, double x, int N, double R = 1.0);

// Same row against an operator built once by the caller; op.spec().alpha sets N^a.
std::complex<double> dalpha_grid(const ToeplitzOperator& op, const GridFunction& samples, int k);

// N^a (T_N X_N) at every node.
std::vector<std::complex<double>> dalpha_grid_all(const ToeplitzOperator& op, const GridFunction& samples);

// (2^a / Gamma(-a)) (int_0^x (x-t)^(-a-1) (f(t) - f(x)) dt - f(x) x^(-a) / a).
double marchaud_lower(const FunctionSpec& f, double alpha, double x, double tol = kQuadTol);

// (2^a / Gamma(-a)) (int_x^1 (t-x)^(-a-1) (f(t) - f(x)) dt - f(x) (1-x)^(-a) / a).
double marchaud_upper(const FunctionSpec& f, double alpha, double x, double tol = kQuadTol);

// Marchaud form with lower limit lo instead of 0.
double marchaud_from(const FunctionSpec& f, double alpha, double lo, double x, double tol = kQuadTol);

// w_0 = 1, w_m = w_{m-1} (m - 1 - a) / m.
std::vector<double> gl_weights(double alpha, int count);

// N^a sum_{m=0}^{k} w_m f((k - m)/N), k = floor(N x).
double gl_derivative(const FunctionSpec& f, double alpha, double x, int N);

enum class Endpoint { zero, one };

struct EndpointReport {
    std::complex<double> grid;   // grid row at k = 0 or k = N
    double limit_stated = 0.0;   // (2^a / Gamma(-a)) int_0^1 t^(-a-1) f(t) dt  (which = one)
    double limit_reflected = 0.0;  // same with weight (1 - t)^(-a-1)               (which = one)
};

// Row 0 (which = zero, requires f(0) = 0) or row N (which = one, requires f(1) = 0).
EndpointReport dalpha_endpoint(const FunctionSpec& f, double alpha, Endpoint which, int N, double R = 1.0,
                               double tol = 1e-8);

struct CompositeReport {
    double value = 0.0;              // 2^n marchaud_lower(f^(n), a', x)
    std::complex<double> grid_full;  // order-(n + a') row on f
    std::complex<double> grid_split; // 2^n times the order-a' row on f^(n)
};

// alpha_total = n + a' with a' in (0,1). Requires f^(n) in closed form and
// f, ..., f^(n-1) vanishing at 0 and 1 (checked to 1e-12).
CompositeReport dalpha_composite(const FunctionSpec& f, double alpha_total, double x, int N,
                                 double tol = kQuadTol);

// (N / 2)^n (T_N(phi_n) X_N)_k for integer n >= 1 with R = 1.
double integer_action(const FunctionSpec& f, int n, int k, int N);

}  // namespace fractoep
