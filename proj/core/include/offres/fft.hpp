#pragma once

#include <complex>
#include <vector>

namespace offres::detail {

/// In-place radix-2 DFT, X_k = sum_n x_n exp(sign * 2 pi i k n / N).
/// N must be a power of two. No normalization is applied.
void fft_radix2(std::vector<std::complex<double>>& data, int sign);

}  // namespace offres::detail
