#pragma once

#include <utility>

#include "fractoep/fourier_poly.hpp"
#include "fractoep/symbol.hpp"

namespace fractoep {

// g1 analytic, g2 co-analytic, g1 g2 = symbol of `variant`:
//   upper: g1 = (1 + R chi)^a, g2 = (1 - R conj chi)^a
//   lower: g1 = (1 - R chi)^a, g2 = (1 + R conj chi)^a
struct Factorization {
    double alpha = 0.0;
    double R = 0.0;
    int N = 0;
    int M = 0;  // truncation degree of every stored series
    Variant variant = Variant::upper;
    FourierPoly g1, g2, g1_inv, g2_inv;
    FourierPoly phi_N;        // chi^(N+1) g1 / g2
    FourierPoly phi_tilde_N;  // chi^(-N-1) g2 / g1
    double hankel_norm = 0.0;  // ||H_phi_tilde H_phi||, filled by factor()
};

// Smallest truncation degree at which every factor series has its tail below
// 1e-14, floored at max(4N, 256).
int default_truncation(double alpha, double R, int N);

// Throws DomainError unless 0 < R < 1, and ConvergenceError when M is too
// small for the tail target.
Factorization factor(double alpha, double R, int N, int M = 0, Variant variant = Variant::upper);

enum class HankelKind { phi, phi_tilde };

// phi: pi_-(phi_N p) for p supported on indices >= 0.
// phi_tilde: pi_+(phi_tilde_N p) for p supported on indices < 0.
FourierPoly hankel_apply(const Factorization& f, HankelKind which, const FourierPoly& p);

// Spectral norm of H_phi_tilde H_phi, from the explicit Hankel matrices on
// indices 0 .. M-1 by power iteration on A^* A.
double hankel_product_norm(const Factorization& f);

struct InverseParts {
    FourierPoly leading;     // pi_+(Q / g2) / g1
    FourierPoly correction;  // pi_+(((I - H~H)^-1 pi_+(pi_+(Q / g2) phi~)) phi) / g1
    int neumann_terms = 0;
    FourierPoly result() const { return leading - correction; }
};

InverseParts invert_apply_parts(const Factorization& f, const FourierPoly& Q, int max_terms = 500);

// T_N^{-1} Q on indices 0..N; Q must have degree <= N and no negative indices.
FourierPoly invert_apply(const Factorization& f, const FourierPoly& Q, int max_terms = 500);

// (coefficient -k of ((1+R chi)/(1-R conj chi))^a, coefficient k of its reciprocal),
// from a DFT of the ratio sampled on 2^14 points.
std::pair<cplx, cplx> gamma_coeffs(double alpha, double R, int k);

}  // namespace fractoep
