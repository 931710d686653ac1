#pragma once

#include <functional>
#include <vector>

namespace fractoep {

constexpr double kQuadTol = 1e-10;

// Adaptive Gauss-Kronrod on [a, b], split at any breakpoints inside.
// Throws QuadratureError when the error estimate exceeds tol * max(1, |f|_L1).
double integrate(const std::function<double(double)>& f, double a, double b, double tol = kQuadTol,
                 const std::vector<double>& breakpoints = {});

// int_lo^x f(t) (x - t)^(e - 1) dt for e > 0, via u = (x - t)^e.
double integrate_weak_singular(const std::function<double(double)>& f, double lo, double x, double e,
                               double tol = kQuadTol, const std::vector<double>& breakpoints = {});

// int_lo^x (x - t)^(-alpha-1) (f(t) - f(x)) dt, alpha in (0,1), via the difference
// quotient (f(t) - f(x))/(x - t) and u = (x - t)^(1 - alpha).
double integrate_marchaud(const std::function<double(double)>& f, double lo, double x, double alpha,
                          double tol = kQuadTol, const std::vector<double>& breakpoints = {});

}  // namespace fractoep
