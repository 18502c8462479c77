#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "fcshape/matrix.hpp"
#include "fcshape/series.hpp"

namespace fcs {

// All 2p-1 cross-correlation lag products of a pair of length-p series:
// values[i] = R_{i-(p-1)}(x, y) for i in [0, 2p-2], where
//   R_k(x,y) = sum_{j=1}^{p-k} x_{j+k} y_j   for k >= 0, and
//   R_k(x,y) = R_{-k}(y,x)                   for k < 0.
struct CrossCorrelation {
  std::vector<double> values;
  std::size_t series_length = 0;  // p

  long lag_at(std::size_t i) const {
    return static_cast<long>(i) - static_cast<long>(series_length) + 1;
  }
};

// Shape-based distance between two series plus the alignment it implies.
struct SbdResult {
  double dist = 0.0;   // 1 - max coefficient-normalized cross-correlation, in [0, 2]
  long shift = 0;      // lag achieving the max, in [-(p-1), p-1]
  TimeSeries aligned;  // y shifted toward x, zero-padded
};

// Lag products computed via padded FFTs; both series must share one length.
CrossCorrelation cross_correlate(const TimeSeries& x, const TimeSeries& y);

// Shape-based distance of two z-normalized series. Ties in the lag argmax go
// to the smallest index; an all-zero operand yields dist = 1, shift = 0 and a
// zero aligned series.
SbdResult sbd(const TimeSeries& x, const TimeSeries& y);

// y shifted by `shift` samples and zero-padded back to its length.
TimeSeries shift_zero_pad(const TimeSeries& y, long shift);

// Distance matrix D(j, i) = sbd(prototypes[j], series[i]).dist. Reuses the
// per-series FFT across prototypes; numerically identical to calling sbd()
// pairwise.
Matrix sbd_distance_matrix(const std::vector<TimeSeries>& prototypes,
                           const std::vector<TimeSeries>& series);

namespace detail {

// Spectrum of a series zero-padded to padded_length (a power of two).
std::vector<std::complex<double>> padded_spectrum(const TimeSeries& x,
                                                  std::size_t padded_length);

// The 2p-1 lag products recovered from two spectra (fx . conj(fy), inverse
// transform, circular-to-linear reordering).
std::vector<double> lag_products(std::vector<std::complex<double>> fx,
                                 const std::vector<std::complex<double>>& fy,
                                 std::size_t p);

// Scans lag products for the peak normalized correlation; smallest index
// wins ties. Returns {dist, shift}.
std::pair<double, long> correlation_peak(const std::vector<double>& lags,
                                         std::size_t p, double norm_product);

}  // namespace detail

}  // namespace fcs
