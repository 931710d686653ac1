#include "fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace fractoep::detail {

namespace {

// FFTW's planner is not reentrant; execution on a private plan is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& in, int sign) {
    const int n = static_cast<int>(in.size());
    std::vector<std::complex<double>> out(in.size());
    if (n == 0) return out;
    std::vector<std::complex<double>> buf(in);
    auto* ib = reinterpret_cast<fftw_complex*>(buf.data());
    auto* ob = reinterpret_cast<fftw_complex*>(out.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_1d(n, ib, ob, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    return out;
}

int next_pow2(int n) {
    int p = 1;
    while (p < n) p <<= 1;
    return p;
}

std::vector<std::complex<double>> convolve(const std::vector<std::complex<double>>& a,
                                           const std::vector<std::complex<double>>& b) {
    if (a.empty() || b.empty()) return {};
    const int len = static_cast<int>(a.size() + b.size() - 1);
    const int L = next_pow2(len);
    std::vector<std::complex<double>> pa(L), pb(L);
    std::copy(a.begin(), a.end(), pa.begin());
    std::copy(b.begin(), b.end(), pb.begin());
    auto fa = dft(pa, -1);
    auto fb = dft(pb, -1);
    for (int i = 0; i < L; ++i) fa[i] *= fb[i];
    auto c = dft(fa, +1);
    c.resize(len);
    for (auto& v : c) v /= static_cast<double>(L);
    return c;
}

}  // namespace fractoep::detail
