#include "fractoep/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "fractoep/errors.hpp"

namespace fractoep {

namespace {

constexpr std::size_t kMaxPieces = 4000;

struct Piece {
    double a, b, value, error, l1;
};

// One 31-point Gauss-Kronrod rule on [a, b]. Boost reports |K - G| on the
// reference interval, so it is scaled by the half-width here; the roundoff
// term keeps smooth pieces from chasing digits that are not there.
Piece gk_rule(const std::function<double(double)>& f, double a, double b) {
    double err = 0.0, l1 = 0.0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 0, 0.0, &err, &l1);
    const double half = 0.5 * (b - a);
    return {a, b, v, std::max(err * half, 50.0 * std::numeric_limits<double>::epsilon() * l1), l1};
}

// Global adaptive bisection of the piece with the largest error estimate.
double gk_piece(const std::function<double(double)>& f, double a, double b, double tol) {
    if (a == b) return 0.0;
    auto worse = [](const Piece& p, const Piece& q) { return p.error < q.error; };
    std::priority_queue<Piece, std::vector<Piece>, decltype(worse)> heap(worse);
    heap.push(gk_rule(f, a, b));
    double value = heap.top().value, error = heap.top().error, l1 = heap.top().l1;
    while (error > tol * std::max(1.0, l1)) {
        if (heap.size() >= kMaxPieces || !std::isfinite(value))
            throw QuadratureError("quadrature: error estimate " + std::to_string(error) + " above tolerance on [" +
                                  std::to_string(a) + ", " + std::to_string(b) + "]");
        const Piece p = heap.top();
        heap.pop();
        const double mid = 0.5 * (p.a + p.b);
        if (!(mid > p.a && mid < p.b))
            throw QuadratureError("quadrature: interval exhausted near " + std::to_string(p.a));
        const Piece left = gk_rule(f, p.a, mid), right = gk_rule(f, mid, p.b);
        value += left.value + right.value - p.value;
        error += left.error + right.error - p.error;
        l1 += left.l1 + right.l1 - p.l1;
        heap.push(left);
        heap.push(right);
    }
    if (!std::isfinite(value)) throw QuadratureError("quadrature: non-finite result");
    return value;
}

std::vector<double> cut_points(double a, double b, const std::vector<double>& breakpoints) {
    std::vector<double> pts{a};
    for (double p : breakpoints)
        if (p > a && p < b) pts.push_back(p);
    std::sort(pts.begin() + 1, pts.end());
    pts.push_back(b);
    return pts;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol,
                 const std::vector<double>& breakpoints) {
    if (!(tol > 0.0)) throw DomainError("integrate: tol must be positive");
    if (a > b) return -integrate(f, b, a, tol, breakpoints);
    const auto pts = cut_points(a, b, breakpoints);
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) s += gk_piece(f, pts[i], pts[i + 1], tol);
    return s;
}

double integrate_weak_singular(const std::function<double(double)>& f, double lo, double x, double e,
                               double tol, const std::vector<double>& breakpoints) {
    if (!(e > 0.0)) throw DomainError("integrate_weak_singular: exponent must be positive");
    if (x <= lo) return 0.0;
    // t = x - u^(1/e), dt (x-t)^(e-1) = du / e.
    const double inv = 1.0 / e;
    auto g = [&](double u) { return f(x - std::pow(u, inv)); };
    std::vector<double> ub;
    for (double p : breakpoints)
        if (p > lo && p < x) ub.push_back(std::pow(x - p, e));
    return integrate(g, 0.0, std::pow(x - lo, e), tol, ub) * inv;
}

double integrate_marchaud(const std::function<double(double)>& f, double lo, double x, double alpha,
                          double tol, const std::vector<double>& breakpoints) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("integrate_marchaud: alpha must lie in (0, 1)");
    if (x <= lo) return 0.0;
    const double fx = f(x);
    // The difference quotient loses digits as t -> x; below h_min it is continued
    // linearly from its values at h_min and 2 h_min, an O(h_min^2) error.
    const double h_min = 1e-5 * (x - lo);
    const double q1 = (f(x - h_min) - fx) / h_min;
    const double q2 = (f(x - 2.0 * h_min) - fx) / (2.0 * h_min);
    auto q = [&](double t) {
        const double h = x - t;
        if (h < h_min) return q1 + (q1 - q2) * (h_min - h) / h_min;
        return (f(t) - fx) / h;
    };
    auto br = breakpoints;
    br.push_back(x - h_min);
    return integrate_weak_singular(q, lo, x, 1.0 - alpha, tol, br);
}

}  // namespace fractoep
