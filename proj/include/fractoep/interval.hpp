#pragma once

#include "fractoep/functions.hpp"
#include "fractoep/quadrature.hpp"

namespace fractoep {

struct IntervalMap {
    double a = 0.0;
    double b = 1.0;

    IntervalMap(double a_, double b_);
    double to_unit(double x) const { return (x - a) / (b - a); }
    double from_unit(double t) const { return a + t * (b - a); }
    double length() const { return b - a; }

    // t -> f(a + t (b - a)), with breakpoints and support carried over.
    FunctionSpec pullback(const FunctionSpec& f) const;
};

struct GridBackend {
    int N = 1024;
    double R = 1.0;
};

struct QuadratureBackend {
    double tol = kQuadTol;
};

// D_a(f_{a,b})((x - a)/(b - a)) on the grid.
double d_alpha_ab(const FunctionSpec& f, double alpha, double x, const IntervalMap& iv, const GridBackend& be);

// (b-a)^a (2^a / Gamma(-a)) (int_a^x (x-u)^(-a-1) (f(u) - f(x)) du - f(x) (x-a)^(-a) / a).
double d_alpha_ab(const FunctionSpec& f, double alpha, double x, const IntervalMap& iv,
                  const QuadratureBackend& be = {});

// ((b-a)^-a / (2^a Gamma(a))) int_a^x f(u) (x-u)^(a-1) du.
double j_alpha_ab(const FunctionSpec& f, double alpha, double x, const IntervalMap& iv, double tol = kQuadTol);

// (2^a / Gamma(-a)) int_-inf^x (x-u)^(-a-1) (f(u) - f(x)) du for f vanishing left of
// f.support_lo(): the part below the support is the closed-form -f(x) (x - lo)^(-a) / a.
// Throws DomainError without a lower support bound.
double d_alpha_inf(const FunctionSpec& f, double alpha, double x, double tol = kQuadTol);

// (1 / (2^a Gamma(a))) int_-inf^x f(u) (x-u)^(a-1) du.
double j_alpha_inf(const FunctionSpec& f, double alpha, double x, double tol = kQuadTol);

// u -> j_alpha_inf(f, alpha, u), carrying f's lower support bound and breakpoints.
FunctionSpec j_alpha_inf_function(const FunctionSpec& f, double alpha, double tol = 1e-12);

}  // namespace fractoep
