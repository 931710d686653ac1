#pragma once

#include <complex>
#include <vector>

#include "fractoep/functions.hpp"
#include "fractoep/grid.hpp"
#include "fractoep/quadrature.hpp"
#include "fractoep/toeplitz.hpp"

namespace fractoep {

// (1 / (2^a Gamma(a))) int_0^x f(t) (x - t)^(a-1) dt.
double rl_integral(const FunctionSpec& f, double alpha, double x, double tol = kQuadTol);

// Same with lower limit lo.
double rl_integral_from(const FunctionSpec& f, double alpha, double lo, double x, double tol = kQuadTol);

enum class InverseBackend { dense, hankel };

// N^-a (T_N^{-1} X_N)_k, k = floor(N x), lower symbol at R.
std::complex<double> jalpha_grid(const FunctionSpec& f, double alpha, double x, int N, double R = 1.0,
                                 InverseBackend backend = InverseBackend::dense);

// N^-a T_N^{-1} X_N at every node, dense backend.
std::vector<std::complex<double>> jalpha_grid_all(const FunctionSpec& f, double alpha, int N, double R = 1.0);

// One Richardson step in N assuming an N^-a error term: values at N/2 and N.
std::complex<double> jalpha_grid_extrapolated(const FunctionSpec& f, double alpha, double x, int N,
                                              double R = 1.0);

// x^p y^p / ((p-1)!)^2 int_max(x,y)^1 (t-x)^(p-1) (t-y)^(p-1) / t^(2p) dt; 0 at (0,0).
double green_kernel(int p, double x, double y, double tol = 1e-12);

// (-1)^p 2^-n int_0^1 G_p(x,t) f(t) dt at a single point, n = 2p.
double j_n_at(const FunctionSpec& f, int n, double x, double tol = 1e-10);

// j_n_at on the grid j/N, j = 0..N.
GridFunction j_n(const FunctionSpec& f, int n, int N, double tol = 1e-10);

struct OrderSplit {
    int n = 0;        // even integer part
    int p = 0;        // n / 2
    double frac = 0;  // alpha - n in (0, 1)
};

// Throws DomainError unless alpha > 1 with even integer part and non-integer.
OrderSplit split_order(double alpha);

// j_n applied to y -> rl_integral(psi, frac, y).
double j_tilde_at(const FunctionSpec& psi, double alpha, double x, double tol = 1e-10);
GridFunction j_tilde(const FunctionSpec& psi, double alpha, int N, double tol = 1e-10);

// (-1)^p 2^-n / (2^a' Gamma(a')) int_0^1 psi(t) [int_t^1 G_p(x,y) (y-t)^(a'-1) dy] dt,
// the double integral taken in the swapped order.
double j_tilde_integral(const FunctionSpec& psi, double alpha, double x, double tol = 1e-10);

// (2^a / Gamma(a)) int_0^1 G_p(x,y) int_0^y |t-y|^(a'-1) psi(t) dt dy: the integral form
// without the sign and 2^-n calibration of j_tilde_integral. Diagnostic only.
double j_tilde_uncalibrated(const FunctionSpec& psi, double alpha, double x, double tol = 1e-10);

struct DirichletSolution {
    GridFunction y;
    std::vector<std::complex<double>> residual;  // D_a(y) - psi at each node (0 at the ends)
    double interior_residual = 0.0;  // sup over nodes in [0.1, 0.9]
    double first_node = 0.0;         // |y(1/N)|
    double last_node = 0.0;          // |y(1 - 1/N)|
};

// y = j_tilde(psi) on the grid, with residual from 2^n finite differences
// followed by the order-a' grid row at R = 1.
DirichletSolution solve_dirichlet(const FunctionSpec& psi, double alpha, int N, double tol = 1e-10);

// 2^n d^n/dx^n of grid samples, n even, by repeated 4 * second differences
// (one-sided four-point stencils at the ends).
std::vector<double> scaled_even_derivative(const std::vector<double>& y, int n, int N);

}  // namespace fractoep
