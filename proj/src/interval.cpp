#include "fractoep/interval.hpp"

#include <cmath>

#include "fractoep/errors.hpp"
#include "fractoep/fracderiv.hpp"
#include "fractoep/fracint.hpp"

namespace fractoep {

IntervalMap::IntervalMap(double a_, double b_) : a(a_), b(b_) {
    if (!(a < b)) throw DomainError("interval: need a < b");
}

FunctionSpec IntervalMap::pullback(const FunctionSpec& f) const {
    const double lo = a, len = b - a;
    auto g = FunctionSpec::custom([f, lo, len](double t) { return f(lo + t * len); }, f.id() + "@pullback");
    std::vector<double> br;
    for (double p : f.breakpoints()) br.push_back(to_unit(p));
    g.set_breakpoints(std::move(br));
    std::optional<double> slo, shi;
    if (f.support_lo()) slo = to_unit(*f.support_lo());
    if (f.support_hi()) shi = to_unit(*f.support_hi());
    g.set_support(slo, shi);
    return g;
}

namespace {

void check_inside(double x, const IntervalMap& iv, const char* who) {
    if (!(x > iv.a && x < iv.b)) throw DomainError(std::string(who) + ": x must lie in (a, b)");
}

std::optional<double> lower_bound_of(const FunctionSpec& f) { return f.support_lo(); }

}  // namespace

double d_alpha_ab(const FunctionSpec& f, double alpha, double x, const IntervalMap& iv, const GridBackend& be) {
    check_inside(x, iv, "d_alpha_ab");
    return dalpha_grid(iv.pullback(f), alpha, iv.to_unit(x), be.N, be.R).real();
}

double d_alpha_ab(const FunctionSpec& f, double alpha, double x, const IntervalMap& iv, const QuadratureBackend& be) {
    check_inside(x, iv, "d_alpha_ab");
    return std::pow(iv.length(), alpha) * marchaud_from(f, alpha, iv.a, x, be.tol);
}

double j_alpha_ab(const FunctionSpec& f, double alpha, double x, const IntervalMap& iv, double tol) {
    if (!(x >= iv.a && x <= iv.b)) throw DomainError("j_alpha_ab: x must lie in [a, b]");
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("j_alpha_ab: alpha must lie in (0, 1)");
    return std::pow(iv.length(), -alpha) * rl_integral_from(f, alpha, iv.a, x, tol);
}

double d_alpha_inf(const FunctionSpec& f, double alpha, double x, double tol) {
    const auto lo = lower_bound_of(f);
    if (!lo) throw DomainError("d_alpha_inf: f has no lower support bound");
    if (x <= *lo) return 0.0;
    return marchaud_from(f, alpha, *lo, x, tol);
}

double j_alpha_inf(const FunctionSpec& f, double alpha, double x, double tol) {
    const auto lo = lower_bound_of(f);
    if (!lo) throw DomainError("j_alpha_inf: f has no lower support bound");
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("j_alpha_inf: alpha must lie in (0, 1)");
    if (x <= *lo) return 0.0;
    return rl_integral_from(f, alpha, *lo, x, tol);
}

FunctionSpec j_alpha_inf_function(const FunctionSpec& f, double alpha, double tol) {
    auto g = FunctionSpec::custom([f, alpha, tol](double u) { return j_alpha_inf(f, alpha, u, tol); },
                                  "J_inf(" + f.id() + ")");
    g.set_support(f.support_lo(), std::nullopt);
    g.set_breakpoints(f.breakpoints());
    return g;
}

}  // namespace fractoep
