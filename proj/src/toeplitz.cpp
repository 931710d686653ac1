#include "fractoep/toeplitz.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "fft.hpp"
#include "fractoep/errors.hpp"
#include "fractoep/specialfn.hpp"

namespace fractoep {

ToeplitzOperator::ToeplitzOperator(SymbolSpec spec, int N, std::vector<cplx> coeffs)
    : spec_(spec), N_(N), coeffs_(std::move(coeffs)) {
    if (N < 0 || coeffs_.size() != 2 * static_cast<std::size_t>(N) + 1)
        throw DomainError("ToeplitzOperator: need 2N+1 coefficients");
}

bool ToeplitzOperator::is_real() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const cplx& c) { return c.imag() == 0.0; });
}

ToeplitzOperator build(const SymbolSpec& spec, int N, double tol) {
    if (N < 1) throw DomainError("build: N must be >= 1");
    return ToeplitzOperator(spec, N, fourier_coeffs_series(spec, N, tol));
}

cplx row_dot(const ToeplitzOperator& op, int k, const CVec& v) {
    if (static_cast<int>(v.size()) != op.order()) throw DomainError("row_dot: dimension mismatch");
    cplx s = 0.0;
    for (int l = 0; l < op.order(); ++l) s += op.entry(k, l) * v[l];
    return s;
}

CVec matvec(const ToeplitzOperator& op, const CVec& v, MatvecMode mode) {
    const int n = op.order();
    if (static_cast<int>(v.size()) != n) throw DomainError("matvec: dimension mismatch");
    if (mode == MatvecMode::direct) {
        CVec out(n);
        for (int k = 0; k < n; ++k) out[k] = row_dot(op, k, v);
        return out;
    }
    // Circulant embedding: first column h(0..N), 0 padding, h(-N..-1).
    const int L = detail::next_pow2(2 * n);
    CVec c(L), x(L);
    for (int m = 0; m < n; ++m) c[m] = op.coeff(m);
    for (int m = 1; m < n; ++m) c[L - m] = op.coeff(-m);
    std::copy(v.begin(), v.end(), x.begin());
    auto fc = detail::dft(c, -1);
    auto fx = detail::dft(x, -1);
    for (int i = 0; i < L; ++i) fc[i] *= fx[i];
    auto y = detail::dft(fc, +1);
    CVec out(n);
    for (int k = 0; k < n; ++k) out[k] = y[k] / static_cast<double>(L);
    return out;
}

namespace {

template <typename Scalar>
std::vector<CVec> dense_solve(const ToeplitzOperator& op, const std::vector<CVec>& rhs, SolveInfo* info) {
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const int n = op.order();
    Mat T(n, n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            if constexpr (std::is_same_v<Scalar, double>)
                T(k, l) = op.entry(k, l).real();
            else
                T(k, l) = op.entry(k, l);
        }
    Eigen::PartialPivLU<Mat> lu(T);
    const double rc = lu.rcond();
    if (!(rc >= 1e-14))
        throw SingularMatrixError("solve: matrix is singular to working precision (condition estimate " +
                                      std::to_string(rc > 0 ? 1.0 / rc : INFINITY) + ")",
                                  rc > 0 ? 1.0 / rc : INFINITY);
    std::vector<CVec> out;
    double worst = 0.0;
    for (const auto& r : rhs) {
        if (static_cast<int>(r.size()) != n) throw DomainError("solve: dimension mismatch");
        Eigen::VectorXcd b(n);
        for (int i = 0; i < n; ++i) b(i) = r[i];
        Eigen::VectorXcd x;
        if constexpr (std::is_same_v<Scalar, double>) {
            Eigen::VectorXd xr = lu.solve(b.real());
            Eigen::VectorXd xi = lu.solve(b.imag());
            x = xr.cast<cplx>() + cplx(0.0, 1.0) * xi.cast<cplx>();
        } else {
            x = lu.solve(b);
        }
        const Eigen::VectorXcd res = T.template cast<cplx>() * x - b;
        const double bn = b.cwiseAbs().maxCoeff();
        if (bn > 0.0) worst = std::max(worst, res.cwiseAbs().maxCoeff() / bn);
        out.emplace_back(x.data(), x.data() + n);
    }
    if (info) {
        info->rcond = rc;
        info->residual = worst;
    }
    if (worst > 1e-9)
        throw SingularMatrixError("solve: relative residual " + std::to_string(worst) + " exceeds 1e-9",
                                  1.0 / rc);
    return out;
}

}  // namespace

std::vector<CVec> solve_many(const ToeplitzOperator& op, const std::vector<CVec>& rhs, SolveInfo* info) {
    if (op.N() > kDenseMaxN) throw DomainError("solve: N exceeds the dense cap");
    if (op.is_real()) return dense_solve<double>(op, rhs, info);
    return dense_solve<cplx>(op, rhs, info);
}

CVec solve(const ToeplitzOperator& op, const CVec& rhs, SolveInfo* info) {
    return solve_many(op, {rhs}, info).front();
}

cplx t1_entry(double alpha, double R, int k, int l, Variant variant) {
    if (k == l) throw DomainError("t1_entry: diagonal entries are outside the formula's domain");
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("t1_entry: alpha must lie in (0, 1)");
    if (!(R > 0.0 && R <= 1.0)) throw DomainError("t1_entry: R must lie in (0, 1]");
    if (variant == Variant::gl) throw DomainError("t1_entry: gl variant not supported");
    const int d = std::abs(l - k);
    const double mag = std::pow(R, d) * std::pow(static_cast<double>(d), alpha - 1.0) / gamma(alpha) *
                       std::pow(1.0 + R * R, -alpha);
    const bool alternating = (variant == Variant::lower) ? (l > k) : (k > l);
    return (alternating && d % 2 == 1) ? -mag : mag;
}

cplx t1_exact(double alpha, double R, int k, int l, Variant variant) {
    if (k < 0 || l < 0) throw DomainError("t1_exact: indices must be non-negative");
    if (variant == Variant::gl) throw DomainError("t1_exact: gl variant not supported");
    const BinomSeq b = binom_coeffs(alpha, std::max(k, l) + 1);
    // Lower: 1/g1 = (1 - R chi)^-a, 1/g2 = (1 + R conj chi)^-a. Upper flips both signs.
    const double s1 = (variant == Variant::lower) ? R : -R;
    const double s2 = -s1;
    double sum = 0.0;
    for (int j = 0; j <= std::min(k, l); ++j)
        sum += b[k - j] * std::pow(s1, k - j) * b[l - j] * std::pow(s2, l - j);
    return sum;
}

}  // namespace fractoep
