#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace fcs {

// Smallest power of two >= n.
std::size_t next_pow2(std::size_t n);

// In-place iterative radix-2 transform; a.size() must be a power of two.
// The inverse transform includes the 1/N scaling.
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse);

}  // namespace fcs
