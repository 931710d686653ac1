#pragma once

#include <complex>
#include <vector>

namespace fractoep {

using cplx = std::complex<double>;

// Two-sided truncated Fourier series: coefficients for indices lo .. lo + size - 1.
class FourierPoly {
public:
    FourierPoly() = default;
    FourierPoly(int lo, std::vector<cplx> coeffs);

    static FourierPoly zero() { return {}; }
    static FourierPoly monomial(int k, cplx c = 1.0);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
    bool empty() const { return c_.empty(); }
    const std::vector<cplx>& coeffs() const { return c_; }

    // Zero outside the stored range.
    cplx operator[](int n) const;

    // Multiply by chi^k.
    FourierPoly shifted(int k) const;
    // Keep indices in [from, to].
    FourierPoly restricted(int from, int to) const;

    FourierPoly pi_plus() const;   // indices >= 0
    FourierPoly pi_minus() const;  // indices < 0

    double max_abs() const;

    friend FourierPoly operator+(const FourierPoly& a, const FourierPoly& b);
    friend FourierPoly operator-(const FourierPoly& a, const FourierPoly& b);
    friend FourierPoly operator*(cplx s, const FourierPoly& a);

private:
    int lo_ = 0;
    std::vector<cplx> c_;
};

// Product, exact on the full index range lo_p + lo_q .. hi_p + hi_q, then
// restricted to |n| <= m_store.
FourierPoly mul(const FourierPoly& p, const FourierPoly& q, int m_store);

}  // namespace fractoep
