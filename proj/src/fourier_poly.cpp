#include "fractoep/fourier_poly.hpp"

#include <algorithm>
#include <cmath>

#include "fft.hpp"

namespace fractoep {

FourierPoly::FourierPoly(int lo, std::vector<cplx> coeffs) : lo_(lo), c_(std::move(coeffs)) {}

FourierPoly FourierPoly::monomial(int k, cplx c) { return FourierPoly(k, {c}); }

cplx FourierPoly::operator[](int n) const {
    if (c_.empty() || n < lo_ || n > hi()) return 0.0;
    return c_[static_cast<std::size_t>(n - lo_)];
}

FourierPoly FourierPoly::shifted(int k) const { return FourierPoly(lo_ + k, c_); }

FourierPoly FourierPoly::restricted(int from, int to) const {
    if (c_.empty()) return {};
    const int a = std::max(from, lo_);
    const int b = std::min(to, hi());
    if (a > b) return {};
    return FourierPoly(a, std::vector<cplx>(c_.begin() + (a - lo_), c_.begin() + (b - lo_) + 1));
}

FourierPoly FourierPoly::pi_plus() const { return restricted(0, std::max(hi(), 0)); }

FourierPoly FourierPoly::pi_minus() const { return restricted(std::min(lo_, -1), -1); }

double FourierPoly::max_abs() const {
    double m = 0.0;
    for (const auto& v : c_) m = std::max(m, std::abs(v));
    return m;
}

namespace {

FourierPoly combine(const FourierPoly& a, const FourierPoly& b, double sign) {
    if (a.empty()) return sign * b;
    if (b.empty()) return a;
    const int lo = std::min(a.lo(), b.lo());
    const int hi = std::max(a.hi(), b.hi());
    std::vector<cplx> c(static_cast<std::size_t>(hi - lo + 1));
    for (int n = lo; n <= hi; ++n) c[n - lo] = a[n] + sign * b[n];
    return FourierPoly(lo, std::move(c));
}

}  // namespace

FourierPoly operator+(const FourierPoly& a, const FourierPoly& b) { return combine(a, b, 1.0); }

FourierPoly operator-(const FourierPoly& a, const FourierPoly& b) { return combine(a, b, -1.0); }

FourierPoly operator*(cplx s, const FourierPoly& a) {
    std::vector<cplx> c(a.coeffs());
    for (auto& v : c) v *= s;
    return FourierPoly(a.lo(), std::move(c));
}

FourierPoly mul(const FourierPoly& p, const FourierPoly& q, int m_store) {
    if (p.empty() || q.empty()) return {};
    auto c = detail::convolve(p.coeffs(), q.coeffs());
    return FourierPoly(p.lo() + q.lo(), std::move(c)).restricted(-m_store, m_store);
}

}  // namespace fractoep
