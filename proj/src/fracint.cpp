#include "fractoep/fracint.hpp"

#include <cmath>

#include "fractoep/errors.hpp"
#include "fractoep/specialfn.hpp"
#include "fractoep/wienerhopf.hpp"

namespace fractoep {

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

void check_unit(double x, const char* who) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError(std::string(who) + ": point must lie in [0, 1]");
}

std::vector<double> with_point(std::vector<double> br, double x) {
    br.push_back(x);
    return br;
}

}  // namespace

double rl_integral_from(const FunctionSpec& f, double alpha, double lo, double x, double tol) {
    if (!(alpha > 0.0)) throw DomainError("rl_integral: alpha must be positive");
    if (x <= lo) return 0.0;
    const double integral =
        integrate_weak_singular([&f](double t) { return f(t); }, lo, x, alpha, tol, f.breakpoints());
    return integral / (std::pow(2.0, alpha) * gamma(alpha));
}

double rl_integral(const FunctionSpec& f, double alpha, double x, double tol) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("rl_integral: alpha must lie in (0, 1)");
    if (!(x > 0.0 && x <= 1.0)) throw DomainError("rl_integral: x must lie in (0, 1]");
    return rl_integral_from(f, alpha, 0.0, x, tol);
}

std::complex<double> jalpha_grid(const FunctionSpec& f, double alpha, double x, int N, double R,
                                 InverseBackend backend) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("jalpha_grid: alpha must lie in (0, 1)");
    if (N < 16) throw DomainError("jalpha_grid: N must be >= 16");
    const int k = static_cast<int>(std::floor(N * x));
    if (k < 1 || k > N - 1) throw DomainError("jalpha_grid: floor(N x) must be an interior index");
    const auto X = sample(f, N);
    const double scale = std::pow(static_cast<double>(N), -alpha);
    if (backend == InverseBackend::hankel) {
        const auto fac = factor(alpha, R, N, 0, Variant::lower);
        const auto r = invert_apply(fac, FourierPoly(0, X.samples));
        return scale * r[k];
    }
    const auto op = build(SymbolSpec{alpha, R, Variant::lower}, N);
    return scale * solve(op, X.samples)[k];
}

std::vector<std::complex<double>> jalpha_grid_all(const FunctionSpec& f, double alpha, int N, double R) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("jalpha_grid: alpha must lie in (0, 1)");
    if (N < 16) throw DomainError("jalpha_grid: N must be >= 16");
    const auto op = build(SymbolSpec{alpha, R, Variant::lower}, N);
    auto z = solve(op, sample(f, N).samples);
    const double scale = std::pow(static_cast<double>(N), -alpha);
    for (auto& v : z) v *= scale;
    return z;
}

std::complex<double> jalpha_grid_extrapolated(const FunctionSpec& f, double alpha, double x, int N, double R) {
    if (N % 2 != 0) throw DomainError("jalpha_grid_extrapolated: N must be even");
    const auto fine = jalpha_grid(f, alpha, x, N, R);
    const auto coarse = jalpha_grid(f, alpha, x, N / 2, R);
    const double w = std::pow(2.0, alpha);
    return (w * fine - coarse) / (w - 1.0);
}

double green_kernel(int p, double x, double y, double tol) {
    if (p < 1) throw DomainError("green_kernel: p must be >= 1");
    check_unit(x, "green_kernel");
    check_unit(y, "green_kernel");
    if (x == 0.0 || y == 0.0) return 0.0;
    const double m = std::max(x, y);
    if (m == 1.0) return 0.0;
    auto g = [p, x, y](double t) {
        return std::pow(t - x, p - 1) * std::pow(t - y, p - 1) / std::pow(t, 2 * p);
    };
    const double integral = integrate(g, m, 1.0, tol);
    const double fp = factorial(p - 1);
    return std::pow(x * y, p) / (fp * fp) * integral;
}

double j_n_at(const FunctionSpec& f, int n, double x, double tol) {
    if (n < 2 || n % 2 != 0) throw DomainError("j_n: n must be a positive even integer");
    check_unit(x, "j_n");
    const int p = n / 2;
    auto g = [&](double t) { return green_kernel(p, x, t, 1e-13) * f(t); };
    const double integral = integrate(g, 0.0, 1.0, tol, with_point(f.breakpoints(), x));
    return ((p % 2 == 0) ? 1.0 : -1.0) * std::pow(2.0, -n) * integral;
}

GridFunction j_n(const FunctionSpec& f, int n, int N, double tol) {
    if (N < 1) throw DomainError("j_n: N must be >= 1");
    GridFunction g;
    g.N = N;
    g.samples.resize(static_cast<std::size_t>(N) + 1);
    for (int j = 0; j <= N; ++j) g.samples[j] = j_n_at(f, n, g.node(j), tol);
    return g;
}

OrderSplit split_order(double alpha) {
    const double n = std::floor(alpha);
    OrderSplit s;
    s.n = static_cast<int>(n);
    s.p = s.n / 2;
    s.frac = alpha - n;
    if (!(alpha > 1.0) || !(s.frac > 0.0) || s.n % 2 != 0)
        throw DomainError("order must exceed 1, be non-integer and have an even integer part");
    return s;
}

double j_tilde_at(const FunctionSpec& psi, double alpha, double x, double tol) {
    const auto s = split_order(alpha);
    const auto inner = FunctionSpec::custom(
        [&psi, s, tol](double y) { return y > 0.0 ? rl_integral_from(psi, s.frac, 0.0, y, tol * 1e-3) : 0.0; },
        "rl");
    return j_n_at(inner, s.n, x, tol);
}

GridFunction j_tilde(const FunctionSpec& psi, double alpha, int N, double tol) {
    if (N < 1) throw DomainError("j_tilde: N must be >= 1");
    GridFunction g;
    g.N = N;
    g.samples.resize(static_cast<std::size_t>(N) + 1);
    for (int j = 0; j <= N; ++j) g.samples[j] = j_tilde_at(psi, alpha, g.node(j), tol);
    return g;
}

double j_tilde_integral(const FunctionSpec& psi, double alpha, double x, double tol) {
    const auto s = split_order(alpha);
    check_unit(x, "j_tilde_integral");
    // K(t) = int_t^1 G_p(x,y) (y-t)^(a'-1) dy, with s = -y putting the weight at the upper limit.
    auto kernel = [&, s](double t) {
        if (t >= 1.0) return 0.0;
        auto h = [&](double sv) { return green_kernel(s.p, x, std::min(1.0, std::max(0.0, -sv)), 1e-13); };
        return integrate_weak_singular(h, -1.0, -t, s.frac, tol * 1e-2, {-x});
    };
    auto outer = [&](double t) { return psi(t) * kernel(t); };
    const double integral = integrate(outer, 0.0, 1.0, tol, with_point(psi.breakpoints(), x));
    const double sign = (s.p % 2 == 0) ? 1.0 : -1.0;
    return sign * std::pow(2.0, -s.n) * integral / (std::pow(2.0, s.frac) * gamma(s.frac));
}

double j_tilde_uncalibrated(const FunctionSpec& psi, double alpha, double x, double tol) {
    const auto s = split_order(alpha);
    check_unit(x, "j_tilde_uncalibrated");
    auto inner = [&](double y) {
        if (y <= 0.0) return 0.0;
        return integrate_weak_singular([&psi](double t) { return psi(t); }, 0.0, y, s.frac, tol * 1e-3,
                                       psi.breakpoints());
    };
    auto outer = [&](double y) { return green_kernel(s.p, x, y, 1e-13) * inner(y); };
    const double integral = integrate(outer, 0.0, 1.0, tol, {x});
    return std::pow(2.0, alpha) / gamma(alpha) * integral;
}

std::vector<double> scaled_even_derivative(const std::vector<double>& y, int n, int N) {
    if (n < 2 || n % 2 != 0) throw DomainError("scaled_even_derivative: n must be a positive even integer");
    if (N < 3 || static_cast<int>(y.size()) != N + 1) throw DomainError("scaled_even_derivative: need N >= 3 and N+1 samples");
    const double h2 = 1.0 / (static_cast<double>(N) * N);
    std::vector<double> cur = y;
    for (int r = 0; r < n / 2; ++r) {
        std::vector<double> d(cur.size());
        for (int j = 1; j < N; ++j) d[j] = (cur[j + 1] - 2.0 * cur[j] + cur[j - 1]) / h2;
        d[0] = (2.0 * cur[0] - 5.0 * cur[1] + 4.0 * cur[2] - cur[3]) / h2;
        d[N] = (2.0 * cur[N] - 5.0 * cur[N - 1] + 4.0 * cur[N - 2] - cur[N - 3]) / h2;
        for (auto& v : d) v *= 4.0;
        cur = std::move(d);
    }
    return cur;
}

DirichletSolution solve_dirichlet(const FunctionSpec& psi, double alpha, int N, double tol) {
    const auto s = split_order(alpha);
    if (N < 16) throw DomainError("solve_dirichlet: N must be >= 16");
    DirichletSolution sol;
    sol.y = j_tilde(psi, alpha, N, tol);
    std::vector<double> yr(sol.y.samples.size());
    for (std::size_t j = 0; j < yr.size(); ++j) yr[j] = sol.y.samples[j].real();
    const auto z = scaled_even_derivative(yr, s.n, N);
    const auto op = build(SymbolSpec{s.frac, 1.0, Variant::lower}, N);
    GridFunction zg;
    zg.N = N;
    zg.samples.assign(z.begin(), z.end());
    const double scale = std::pow(static_cast<double>(N), s.frac);
    const auto dz = matvec(op, zg.samples, MatvecMode::fast);
    sol.residual.assign(static_cast<std::size_t>(N) + 1, 0.0);
    for (int j = 1; j < N; ++j) {
        const double x = static_cast<double>(j) / N;
        sol.residual[j] = scale * dz[j] - psi(x);
        if (x >= 0.1 - 1e-12 && x <= 0.9 + 1e-12)
            sol.interior_residual = std::max(sol.interior_residual, std::abs(sol.residual[j]));
    }
    sol.first_node = std::abs(yr[1]);
    sol.last_node = std::abs(yr[N - 1]);
    return sol;
}

}  // namespace fractoep
