#include "fractoep/symbol.hpp"

#include <cmath>

#include "fft.hpp"
#include "fractoep/errors.hpp"
#include "fractoep/specialfn.hpp"

namespace fractoep {

namespace {

constexpr long kMaxSeriesTerms = 10'000'000;

// b_m(a) by recurrence.
double binom_at(double a, int m) {
    double b = 1.0;
    for (int u = 0; u < m; ++u) b *= (a + u) / (u + 1);
    return b;
}

// sum_{v >= 0} b_v(-alpha) b_{m+v}(-alpha) (-1)^v R^{m+2v}, given bm = b_m(-alpha).
double lower_series(double alpha, double R, int m, double bm, double tol) {
    const double a = -alpha;
    if (bm == 0.0) return 0.0;
    const double R2 = R * R;
    const bool at_limit = (R == 1.0);
    if (at_limit && alpha <= -0.5)
        throw ConvergenceError("symbol series: alpha <= -1/2 is not summable at R = 1");

    // |b_v| and |b_{m+v}| are non-increasing from v0 on; for v > alpha the
    // product has a fixed sign, so (-1)^v makes the terms alternate.
    const long v0 = std::max(0L, static_cast<long>(std::ceil((alpha - 1.0) / 2.0)));
    const long v_alt = std::max(v0, static_cast<long>(std::floor(alpha)) + 1);

    double bv = 1.0;
    double bmv = bm;
    double rpow = std::pow(R, m);
    double sum = 0.0;
    for (long v = 0; v < kMaxSeriesTerms; ++v) {
        const double t = ((v % 2 == 0) ? 1.0 : -1.0) * bv * bmv * rpow;
        if (at_limit) {
            if (v - 1 >= v_alt && std::abs(t) < tol) return sum + 0.5 * t;
        }
        sum += t;
        if (!at_limit && v >= v0 && std::abs(t) * R2 / (1.0 - R2) < tol) return sum;
        bv *= (a + v) / (v + 1);
        bmv *= (a + m + v) / (m + v + 1);
        rpow *= R2;
        if (bv == 0.0 || bmv == 0.0 || rpow == 0.0) return sum;
    }
    throw ConvergenceError("symbol series: term cap reached before the tail bound fell below tol");
}

// Coefficient given b_|n|(-alpha) precomputed.
cplx series_with(const SymbolSpec& spec, int n, double bm, double tol) {
    const int m = std::abs(n);
    if (spec.variant == Variant::gl) {
        if (n < 0) return 0.0;
        return bm * std::pow(spec.R, m);
    }
    // The upper symbol is the lower one at -theta, so its n-th coefficient is the lower (-n)-th.
    const int nl = (spec.variant == Variant::upper) ? -n : n;
    double s = lower_series(spec.alpha, spec.R, m, bm, tol);
    if (nl < 0 && (m % 2 == 1)) s = -s;
    return s;
}

}  // namespace

Variant parse_variant(const std::string& name) {
    if (name == "lower") return Variant::lower;
    if (name == "upper") return Variant::upper;
    if (name == "gl") return Variant::gl;
    throw DomainError("unknown symbol variant '" + name + "'");
}

std::string to_string(Variant v) {
    switch (v) {
        case Variant::lower: return "lower";
        case Variant::upper: return "upper";
        case Variant::gl: return "gl";
    }
    return "?";
}

void SymbolSpec::validate() const {
    if (!std::isfinite(alpha)) throw DomainError("symbol: alpha must be finite");
    if (!(R > 0.0 && R <= 1.0)) throw DomainError("symbol: R must lie in (0, 1]");
}

cplx eval(const SymbolSpec& spec, double theta) {
    spec.validate();
    const double R = spec.R;
    cplx base;
    switch (spec.variant) {
        case Variant::lower: base = cplx(1.0 - R * R, -2.0 * R * std::sin(theta)); break;
        case Variant::upper: base = cplx(1.0 - R * R, 2.0 * R * std::sin(theta)); break;
        case Variant::gl: base = 1.0 - R * std::polar(1.0, theta); break;
    }
    if (spec.alpha == 0.0) return 1.0;
    if (base == cplx(0.0, 0.0)) {
        if (spec.alpha > 0.0) return 0.0;
        throw DomainError("symbol: zero base with non-positive alpha");
    }
    if (base.imag() == 0.0 && base.real() < 0.0 && spec.alpha != std::floor(spec.alpha))
        throw DomainError("symbol: negative real base with non-integer alpha");
    return std::pow(base, spec.alpha);
}

cplx fourier_coeff_series(const SymbolSpec& spec, int n, double tol) {
    spec.validate();
    if (!(tol > 0.0)) throw DomainError("fourier_coeff_series: tol must be positive");
    return series_with(spec, n, binom_at(-spec.alpha, std::abs(n)), tol);
}

std::vector<cplx> fourier_coeffs_series(const SymbolSpec& spec, int n_max, double tol) {
    spec.validate();
    if (n_max < 0) throw DomainError("fourier_coeffs_series: n_max must be >= 0");
    if (!(tol > 0.0)) throw DomainError("fourier_coeffs_series: tol must be positive");
    const BinomSeq b = binom_coeffs(-spec.alpha, n_max + 1);
    std::vector<cplx> out(2 * static_cast<std::size_t>(n_max) + 1);
    for (int n = -n_max; n <= n_max; ++n) out[n + n_max] = series_with(spec, n, b[std::abs(n)], tol);
    return out;
}

std::vector<cplx> fourier_coeff_fft(const SymbolSpec& spec, int grid_size) {
    spec.validate();
    if (grid_size < 4 || (grid_size & (grid_size - 1)) != 0)
        throw DomainError("fourier_coeff_fft: grid_size must be a power of two >= 4");
    std::vector<cplx> samples(grid_size);
    for (int j = 0; j < grid_size; ++j) samples[j] = eval(spec, 2.0 * M_PI * j / grid_size);
    auto c = detail::dft(samples, -1);
    for (auto& v : c) v /= static_cast<double>(grid_size);
    return c;
}

std::vector<cplx> fourier_coeff_fft_extrapolated(const SymbolSpec& spec, int grid_size) {
    const auto c1 = fourier_coeff_fft(spec, grid_size);
    const auto c2 = fourier_coeff_fft(spec, 2 * grid_size);
    const auto c4 = fourier_coeff_fft(spec, 4 * grid_size);
    const double w1 = std::pow(2.0, spec.alpha + 1.0);
    const double w2 = 2.0 * w1;
    std::vector<cplx> out(grid_size);
    for (int n = -grid_size / 2; n < grid_size / 2; ++n) {
        const cplx r1 = (w1 * coeff_at(c2, n) - coeff_at(c1, n)) / (w1 - 1.0);
        const cplx r2 = (w1 * coeff_at(c4, n) - coeff_at(c2, n)) / (w1 - 1.0);
        out[((n % grid_size) + grid_size) % grid_size] = (w2 * r2 - r1) / (w2 - 1.0);
    }
    return out;
}

cplx coeff_at(const std::vector<cplx>& by_mod, int n) {
    const int M = static_cast<int>(by_mod.size());
    return by_mod[((n % M) + M) % M];
}

double asymptotic_coeff(double alpha, int n) {
    if (n == 0) throw DomainError("asymptotic_coeff: n must be nonzero");
    if (!(alpha > -0.5)) throw DomainError("asymptotic_coeff: alpha must exceed -1/2");
    const double pref = std::pow(2.0, alpha) / gamma(-alpha);
    const double mag = std::pow(static_cast<double>(std::abs(n)), -alpha - 1.0) * pref;
    if (n > 0) return mag;
    return (std::abs(n) % 2 == 0) ? mag : -mag;
}

}  // namespace fractoep
