#pragma once

#include <complex>
#include <vector>

#include "fractoep/symbol.hpp"

namespace fractoep {

using CVec = std::vector<cplx>;

enum class MatvecMode { direct, fast };

class ToeplitzOperator {
public:
    // coeffs holds h(-N) .. h(N), i.e. h(n) at index n + N.
    ToeplitzOperator(SymbolSpec spec, int N, std::vector<cplx> coeffs);

    int N() const { return N_; }
    int order() const { return N_ + 1; }
    const SymbolSpec& spec() const { return spec_; }
    const std::vector<cplx>& coeffs() const { return coeffs_; }

    cplx coeff(int n) const { return coeffs_[static_cast<std::size_t>(n + N_)]; }
    // 0-based (k, l) for the 1-based entry (k+1, l+1) = h(k - l).
    cplx entry(int k, int l) const { return coeff(k - l); }

    bool is_real() const;

private:
    SymbolSpec spec_;
    int N_;
    std::vector<cplx> coeffs_;
};

ToeplitzOperator build(const SymbolSpec& spec, int N, double tol = kSeriesTol);

CVec matvec(const ToeplitzOperator& op, const CVec& v, MatvecMode mode = MatvecMode::fast);

// Row k of T applied to v.
cplx row_dot(const ToeplitzOperator& op, int k, const CVec& v);

// Default cap on the dense order.
constexpr int kDenseMaxN = 2048;

struct SolveInfo {
    double rcond = 0.0;     // reciprocal condition estimate (1-norm)
    double residual = 0.0;  // ||T x - rhs||_inf / ||rhs||_inf
};

// Dense LU solve. Throws SingularMatrixError when the reciprocal condition
// estimate falls below 1e-14 or the relative residual exceeds 1e-9.
CVec solve(const ToeplitzOperator& op, const CVec& rhs, SolveInfo* info = nullptr);

// Several right-hand sides sharing one factorization.
std::vector<CVec> solve_many(const ToeplitzOperator& op, const std::vector<CVec>& rhs,
                             SolveInfo* info = nullptr);

// Asymptotic leading term of the inverse entry (k+1, l+1), k != l:
// R^|l-k| |l-k|^(a-1) / Gamma(a) (1+R^2)^(-a). For the lower symbol the sign
// alternates as (-1)^(l-k) above the diagonal only; the upper symbol mirrors it.
cplx t1_entry(double alpha, double R, int k, int l, Variant variant = Variant::lower);

// Exact leading term sum_{j=0}^{min(k,l)} c1(k - j) c2(j - l), where c1, c2 are
// the coefficients of the inverse analytic and co-analytic factors.
cplx t1_exact(double alpha, double R, int k, int l, Variant variant = Variant::lower);

}  // namespace fractoep
