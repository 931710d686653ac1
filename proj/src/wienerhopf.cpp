#include "fractoep/wienerhopf.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "fft.hpp"
#include "fractoep/errors.hpp"

namespace fractoep {

namespace {

constexpr double kTailTarget = 1e-14;
constexpr int kMaxTruncation = 1 << 20;
constexpr double kNeumannTol = 1e-12;

// Coefficients of (1 - s x)^e for u = 0..M, i.e. b_u(-e) s^u.
std::vector<cplx> power_series(double e, double s, int M) {
    std::vector<cplx> c(static_cast<std::size_t>(M) + 1);
    double b = 1.0, sp = 1.0;
    for (int u = 0; u <= M; ++u) {
        c[u] = b * sp;
        b *= (-e + u) / (u + 1);
        sp *= s;
    }
    return c;
}

FourierPoly analytic(std::vector<cplx> c) { return FourierPoly(0, std::move(c)); }

FourierPoly coanalytic(std::vector<cplx> c) {
    std::reverse(c.begin(), c.end());
    const int lo = -static_cast<int>(c.size()) + 1;
    return FourierPoly(lo, std::move(c));
}

// |b_u(a)| R^u for both exponents +-alpha below the target at u = M.
bool tail_ok(double alpha, double R, int M) {
    for (double e : {alpha, -alpha}) {
        double b = 1.0, rp = 1.0, worst = 0.0;
        for (int u = 0; u <= M; ++u) {
            if (u >= M - 2) worst = std::max(worst, std::abs(b) * rp);
            b *= (e + u) / (u + 1);
            rp *= R;
        }
        if (worst >= kTailTarget) return false;
    }
    return true;
}

}  // namespace

int default_truncation(double alpha, double R, int N) {
    if (!(R > 0.0 && R < 1.0)) throw DomainError("factor: R must lie in (0, 1)");
    int M = std::max(4 * N, 256);
    while (!tail_ok(alpha, R, M)) {
        M = static_cast<int>(M * 1.25);
        if (M > kMaxTruncation)
            throw ConvergenceError("factor: no truncation below 2^20 meets the 1e-14 tail target");
    }
    return M;
}

Factorization factor(double alpha, double R, int N, int M, Variant variant) {
    if (!(R > 0.0 && R < 1.0)) throw DomainError("factor: R must lie in (0, 1)");
    if (!std::isfinite(alpha)) throw DomainError("factor: alpha must be finite");
    if (N < 0) throw DomainError("factor: N must be >= 0");
    if (variant == Variant::gl) throw DomainError("factor: gl variant has no two-sided factorization");
    if (M == 0) M = default_truncation(alpha, R, N);
    if (!tail_ok(alpha, R, M))
        throw ConvergenceError("factor: truncation " + std::to_string(M) + " leaves a tail above 1e-14");

    Factorization f;
    f.alpha = alpha;
    f.R = R;
    f.N = N;
    f.M = M;
    f.variant = variant;
    // g1 = (1 - s1 chi)^a, g2 = (1 - s2 conj chi)^a.
    const double s1 = (variant == Variant::upper) ? -R : R;
    const double s2 = -s1;
    f.g1 = analytic(power_series(alpha, s1, M));
    f.g1_inv = analytic(power_series(-alpha, s1, M));
    f.g2 = coanalytic(power_series(alpha, s2, M));
    f.g2_inv = coanalytic(power_series(-alpha, s2, M));
    const int store = 2 * M + N + 2;
    f.phi_N = mul(f.g1, f.g2_inv, store).shifted(N + 1);
    f.phi_tilde_N = mul(f.g2, f.g1_inv, store).shifted(-N - 1);
    f.hankel_norm = hankel_product_norm(f);
    return f;
}

FourierPoly hankel_apply(const Factorization& f, HankelKind which, const FourierPoly& p) {
    if (p.empty()) return {};
    const int store = 4 * f.M + 2 * f.N + 4;
    if (which == HankelKind::phi) {
        if (p.lo() < 0) throw DomainError("hankel_apply: phi acts on indices >= 0 only");
        return mul(f.phi_N, p, store).pi_minus().restricted(-f.M, -1);
    }
    if (p.hi() >= 0) throw DomainError("hankel_apply: phi_tilde acts on negative indices only");
    return mul(f.phi_tilde_N, p, store).pi_plus().restricted(0, f.M);
}

double hankel_product_norm(const Factorization& f) {
    const int K = f.M;
    // H_phi[j][i] = phi_N(-1-i-j) maps index i >= 0 to index -1-j.
    // H_phi_tilde[m][j] = phi_tilde_N(m+1+j) maps index -1-j to index m >= 0.
    Eigen::MatrixXcd Hp(K, K), Ht(K, K);
    for (int j = 0; j < K; ++j)
        for (int i = 0; i < K; ++i) {
            Hp(j, i) = f.phi_N[-1 - i - j];
            Ht(j, i) = f.phi_tilde_N[j + 1 + i];
        }
    Eigen::VectorXcd v = Eigen::VectorXcd::Ones(K) / std::sqrt(static_cast<double>(K));
    double sigma2 = 0.0;
    for (int it = 0; it < 500; ++it) {
        const Eigen::VectorXcd Av = Ht * (Hp * v);
        Eigen::VectorXcd w = Hp.adjoint() * (Ht.adjoint() * Av);
        const double nw = w.norm();
        if (nw == 0.0) return 0.0;
        v = w / nw;
        if (std::abs(nw - sigma2) <= 1e-13 * nw) {
            sigma2 = nw;
            break;
        }
        sigma2 = nw;
    }
    return std::sqrt(sigma2);
}

InverseParts invert_apply_parts(const Factorization& f, const FourierPoly& Q, int max_terms) {
    if (!Q.empty() && (Q.lo() < 0 || Q.hi() > f.N))
        throw DomainError("invert_apply: Q must be supported on indices 0..N");
    const int store = 4 * f.M + 2 * f.N + 4;
    InverseParts parts;
    if (Q.empty()) return parts;

    const FourierPoly a = mul(Q, f.g2_inv, store).pi_plus();
    parts.leading = mul(a, f.g1_inv, store).restricted(0, f.N);

    const FourierPoly rhs = mul(a, f.phi_tilde_N, store).pi_plus().restricted(0, f.M);
    FourierPoly w = rhs;
    FourierPoly term = rhs;
    const double scale = std::max(rhs.max_abs(), 1e-300);
    bool converged = rhs.max_abs() == 0.0;
    int terms = 0;
    while (!converged && terms < max_terms) {
        term = hankel_apply(f, HankelKind::phi_tilde, hankel_apply(f, HankelKind::phi, term));
        w = w + term;
        ++terms;
        if (term.max_abs() <= kNeumannTol * scale || term.empty()) converged = true;
    }
    if (!converged) throw ConvergenceError("invert_apply: Neumann series did not converge within max_terms");
    parts.neumann_terms = terms;
    const FourierPoly b = mul(w, f.phi_N, store).pi_plus();
    parts.correction = mul(b, f.g1_inv, store).restricted(0, f.N);
    return parts;
}

FourierPoly invert_apply(const Factorization& f, const FourierPoly& Q, int max_terms) {
    const double norm = f.hankel_norm;
    if (!(norm < 1.0))
        throw ConvergenceError("invert_apply: ||H~ H|| = " + std::to_string(norm) + " is not below 1");
    return invert_apply_parts(f, Q, max_terms).result();
}

std::pair<cplx, cplx> gamma_coeffs(double alpha, double R, int k) {
    if (k < 1) throw DomainError("gamma_coeffs: k must be >= 1");
    if (!(R > 0.0 && R < 1.0)) throw DomainError("gamma_coeffs: R must lie in (0, 1)");
    const int M = 1 << 14;
    if (k >= M / 2) throw DomainError("gamma_coeffs: k too large for the sampling grid");
    std::vector<cplx> r(M), s(M);
    for (int j = 0; j < M; ++j) {
        const cplx chi = std::polar(1.0, 2.0 * M_PI * j / M);
        const cplx ratio = std::pow((1.0 + R * chi) / (1.0 - R * std::conj(chi)), alpha);
        r[j] = ratio;
        s[j] = 1.0 / ratio;
    }
    auto cr = detail::dft(r, -1);
    auto cs = detail::dft(s, -1);
    return {cr[M - k] / static_cast<double>(M), cs[k] / static_cast<double>(M)};
}

}  // namespace fractoep
