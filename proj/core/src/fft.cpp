#include "fcshape/fft.hpp"

#include <cassert>
#include <cmath>
#include <utility>

namespace fcs {

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

void fft_inplace(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  assert(n > 0 && (n & (n - 1)) == 0);
  if (n < 2) return;

  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  // Roots computed directly from the angle so stage error does not
  // accumulate multiplicatively.
  constexpr double two_pi = 6.283185307179586476925286766559;
  const double sign = inverse ? 1.0 : -1.0;
  std::vector<std::complex<double>> roots(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    roots[k] = std::polar(1.0, sign * two_pi * static_cast<double>(k) / static_cast<double>(n));
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t base = 0; base < n; base += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        const std::complex<double> w = roots[j * stride];
        const std::complex<double> u = a[base + j];
        const std::complex<double> v = a[base + j + len / 2] * w;
        a[base + j] = u + v;
        a[base + j + len / 2] = u - v;
      }
    }
  }

  if (inverse) {
    const double inv_n = 1.0 / static_cast<double>(n);
    for (auto& x : a) x *= inv_n;
  }
}

}  // namespace fcs
