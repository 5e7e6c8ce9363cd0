#pragma once

#include <complex>
#include <vector>

namespace lrm {

// In-place forward transform, X[m] = sum_j x[j] exp(-2 pi i j m / N).
// N must be a power of two.
void fft_inplace(std::vector<std::complex<double>>& x);

}  // namespace lrm
