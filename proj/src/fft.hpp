#pragma once

#include <complex>
#include <vector>

namespace fractoep::detail {

// Unnormalized forward (sign -1) or backward (sign +1) complex DFT.
std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& in, int sign);

// Linear convolution of two sequences.
std::vector<std::complex<double>> convolve(const std::vector<std::complex<double>>& a,
                                           const std::vector<std::complex<double>>& b);

int next_pow2(int n);

}  // namespace fractoep::detail
