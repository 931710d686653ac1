#pragma once

#include <complex>
#include <string>
#include <vector>

namespace fractoep {

using cplx = std::complex<double>;

enum class Variant {
    lower,  // (1 - R chi)^a (1 + R conj(chi))^a
    upper,  // (1 + R chi)^a (1 - R conj(chi))^a, the theta -> -theta mirror of lower
    gl      // (1 - R chi)^a, one-sided
};

Variant parse_variant(const std::string& name);
std::string to_string(Variant v);

struct SymbolSpec {
    double alpha = 0.5;
    double R = 1.0;
    Variant variant = Variant::lower;

    // Throws DomainError unless R is in (0, 1] and alpha is finite.
    void validate() const;
};

cplx eval(const SymbolSpec& spec, double theta);

constexpr double kSeriesTol = 1e-10;
constexpr int kDefaultGrid = 1 << 14;

// Fourier coefficient of index n summed from the binomial series.
// The tail is bounded geometrically for R < 1 and by the alternating-series
// estimate at R = 1; summation stops once that bound is below tol.
cplx fourier_coeff_series(const SymbolSpec& spec, int n, double tol = kSeriesTol);

// All coefficients with |n| <= n_max, stored at n + n_max.
std::vector<cplx> fourier_coeffs_series(const SymbolSpec& spec, int n_max, double tol = kSeriesTol);

// DFT of the sampled symbol; entry n mod grid_size approximates the n-th coefficient.
std::vector<cplx> fourier_coeff_fft(const SymbolSpec& spec, int grid_size = kDefaultGrid);

// Two Richardson steps over grids M, 2M, 4M. Aliasing from the branch points
// of the R = 1 symbol decays like M^-(alpha+1), then M^-(alpha+2).
// Returned with the same n mod grid_size layout as fourier_coeff_fft.
std::vector<cplx> fourier_coeff_fft_extrapolated(const SymbolSpec& spec, int grid_size = kDefaultGrid);

// Read entry n from a coefficient vector laid out modulo its size.
cplx coeff_at(const std::vector<cplx>& by_mod, int n);

// n^(-a-1) 2^a / Gamma(-a) for n > 0; (-1)^n |n|^(-a-1) 2^a / Gamma(-a) for n < 0.
double asymptotic_coeff(double alpha, int n);

}  // namespace fractoep
