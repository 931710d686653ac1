#include "fractoep/fracderiv.hpp"

#include <cmath>

#include "fractoep/errors.hpp"
#include "fractoep/specialfn.hpp"

namespace fractoep {

GridFunction sample(const FunctionSpec& f, int N, double a, double b) {
    if (N < 1) throw DomainError("sample: N must be >= 1");
    if (!(a < b)) throw DomainError("sample: need a < b");
    GridFunction g;
    g.a = a;
    g.b = b;
    g.N = N;
    g.samples.resize(static_cast<std::size_t>(N) + 1);
    for (int j = 0; j <= N; ++j) {
        const double v = f(g.node(j));
        if (std::isfinite(v))
            g.samples[j] = v;
        else if (j == 0 || j == N)
            g.samples[j] = 0.0;
        else
            throw DomainError("sample: non-finite value at an interior node");
    }
    return g;
}

namespace {

int row_index(double x, int N) {
    if (N < 1) throw DomainError("grid: N must be >= 1");
    const int k = static_cast<int>(std::floor(N * x));
    if (k < 0 || k > N) throw DomainError("grid: x must lie in [0, 1]");
    return k;
}

void check_fraction(double alpha, const char* who) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError(std::string(who) + ": alpha must lie in (0, 1)");
}

}  // namespace

std::complex<double> dalpha_grid(const ToeplitzOperator& op, const GridFunction& samples, int k) {
    if (samples.N != op.N()) throw DomainError("dalpha_grid: grid and operator sizes differ");
    return std::pow(static_cast<double>(op.N()), op.spec().alpha) * row_dot(op, k, samples.samples);
}

std::vector<std::complex<double>> dalpha_grid_all(const ToeplitzOperator& op, const GridFunction& samples) {
    if (samples.N != op.N()) throw DomainError("dalpha_grid: grid and operator sizes differ");
    auto v = matvec(op, samples.samples, MatvecMode::fast);
    const double s = std::pow(static_cast<double>(op.N()), op.spec().alpha);
    for (auto& c : v) c *= s;
    return v;
}

std::complex<double> dalpha_grid(const FunctionSpec& f, double alpha, double x, int N, double R) {
    if (N < 16) throw DomainError("dalpha_grid: N must be >= 16");
    if (!(alpha > 0.0)) throw DomainError("dalpha_grid: alpha must be positive");
    const int k = row_index(x, N);
    if (k < 1 || k > N - 1) throw DomainError("dalpha_grid: floor(N x) must be an interior index");
    const auto op = build(SymbolSpec{alpha, R, Variant::lower}, N);
    return dalpha_grid(op, sample(f, N), k);
}

double marchaud_from(const FunctionSpec& f, double alpha, double lo, double x, double tol) {
    check_fraction(alpha, "marchaud");
    if (!(x > lo)) throw DomainError("marchaud: x must exceed the lower limit");
    const double fx = f(x);
    const double integral = integrate_marchaud([&f](double t) { return f(t); }, lo, x, alpha, tol, f.breakpoints());
    return std::pow(2.0, alpha) / gamma(-alpha) * (integral - fx * std::pow(x - lo, -alpha) / alpha);
}

double marchaud_lower(const FunctionSpec& f, double alpha, double x, double tol) {
    if (!(x > 0.0 && x < 1.0)) throw DomainError("marchaud_lower: x must lie in (0, 1)");
    return marchaud_from(f, alpha, 0.0, x, tol);
}

double marchaud_upper(const FunctionSpec& f, double alpha, double x, double tol) {
    check_fraction(alpha, "marchaud_upper");
    if (!(x > 0.0 && x < 1.0)) throw DomainError("marchaud_upper: x must lie in (0, 1)");
    // Mirror s = -t turns int_x^1 (t-x)^(-a-1) into int_{-1}^{-x} (-x-s)^(-a-1).
    std::vector<double> br;
    for (double p : f.breakpoints()) br.push_back(-p);
    const double fx = f(x);
    const double integral =
        integrate_marchaud([&f](double s) { return f(-s); }, -1.0, -x, alpha, tol, br);
    return std::pow(2.0, alpha) / gamma(-alpha) * (integral - fx * std::pow(1.0 - x, -alpha) / alpha);
}

std::vector<double> gl_weights(double alpha, int count) {
    if (count < 1) throw DomainError("gl_weights: count must be >= 1");
    std::vector<double> w(static_cast<std::size_t>(count));
    w[0] = 1.0;
    for (int m = 1; m < count; ++m) w[m] = w[m - 1] * (m - 1 - alpha) / m;
    return w;
}

double gl_derivative(const FunctionSpec& f, double alpha, double x, int N) {
    check_fraction(alpha, "gl_derivative");
    const int k = row_index(x, N);
    if (k < 1) throw DomainError("gl_derivative: floor(N x) must be >= 1");
    const auto w = gl_weights(alpha, k + 1);
    const auto g = sample(f, N);
    double s = 0.0;
    for (int m = 0; m <= k; ++m) s += w[m] * g.samples[k - m].real();
    return std::pow(static_cast<double>(N), alpha) * s;
}

EndpointReport dalpha_endpoint(const FunctionSpec& f, double alpha, Endpoint which, int N, double R, double tol) {
    check_fraction(alpha, "dalpha_endpoint");
    if (N < 16) throw DomainError("dalpha_endpoint: N must be >= 16");
    const double end = which == Endpoint::zero ? 0.0 : 1.0;
    if (std::abs(f(end)) > 1e-12) throw DomainError("dalpha_endpoint: f must vanish at the chosen endpoint");
    EndpointReport rep;
    const auto op = build(SymbolSpec{alpha, R, Variant::lower}, N);
    rep.grid = dalpha_grid(op, sample(f, N), which == Endpoint::zero ? 0 : N);
    if (which == Endpoint::one) {
        const double pref = std::pow(2.0, alpha) / gamma(-alpha);
        // t^(-a-1) f(t) near t = 0 behaves like f'(0) t^(-a); same for the mirror at t = 1.
        auto stated = [&f](double t) { return t > 0.0 ? f(t) / t : 0.0; };
        auto reflected = [&f](double s) { return s > 0.0 ? f(1.0 - s) / s : 0.0; };
        // int_0^1 t^(-a) g(t) dt with the singular weight at 0: write t = 1 - u.
        auto weak0 = [&](const std::function<double(double)>& g) {
            return integrate_weak_singular([&g](double u) { return g(1.0 - u); }, 0.0, 1.0, 1.0 - alpha, tol);
        };
        rep.limit_stated = pref * weak0(stated);
        rep.limit_reflected = pref * weak0(reflected);
    }
    return rep;
}

CompositeReport dalpha_composite(const FunctionSpec& f, double alpha_total, double x, int N, double tol) {
    const int n = static_cast<int>(std::floor(alpha_total));
    const double frac = alpha_total - n;
    if (n < 1 || !(frac > 0.0)) throw DomainError("dalpha_composite: alpha_total must exceed 1 and be non-integer");
    for (int j = 0; j < n; ++j) {
        const auto d = f.derivative(j);
        if (!d) throw DomainError("dalpha_composite: derivatives of f are not available in closed form");
        if (std::abs((*d)(0.0)) > 1e-12 || std::abs((*d)(1.0)) > 1e-12)
            throw DomainError("dalpha_composite: f and its first n-1 derivatives must vanish at 0 and 1");
    }
    const auto fn = f.derivative(n);
    if (!fn) throw DomainError("dalpha_composite: n-th derivative of f is not available in closed form");
    CompositeReport rep;
    const double scale = std::pow(2.0, n);
    rep.value = scale * marchaud_lower(*fn, frac, x, tol);
    const int k = row_index(x, N);
    const auto full = build(SymbolSpec{alpha_total, 1.0, Variant::lower}, N);
    rep.grid_full = dalpha_grid(full, sample(f, N), k);
    const auto part = build(SymbolSpec{frac, 1.0, Variant::lower}, N);
    rep.grid_split = scale * dalpha_grid(part, sample(*fn, N), k);
    return rep;
}

double integer_action(const FunctionSpec& f, int n, int k, int N) {
    if (n < 1) throw DomainError("integer_action: n must be >= 1");
    if (k < n || k > N - n) throw DomainError("integer_action: row too close to the boundary");
    const auto op = build(SymbolSpec{static_cast<double>(n), 1.0, Variant::lower}, N);
    const auto v = row_dot(op, k, sample(f, N).samples);
    return std::pow(N / 2.0, n) * v.real();
}

}  // namespace fractoep
