#include "fcshape/sbd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fcshape/errors.hpp"
#include "fcshape/fft.hpp"

namespace fcs {

namespace detail {

std::vector<std::complex<double>> padded_spectrum(const TimeSeries& x,
                                                  std::size_t padded_length) {
  std::vector<std::complex<double>> f(padded_length);
  for (std::size_t i = 0; i < x.size(); ++i) f[i] = x.values[i];
  fft_inplace(f, false);
  return f;
}

std::vector<double> lag_products(std::vector<std::complex<double>> fx,
                                 const std::vector<std::complex<double>>& fy,
                                 std::size_t p) {
  const std::size_t padded = fx.size();
  for (std::size_t k = 0; k < padded; ++k) fx[k] *= std::conj(fy[k]);
  fft_inplace(fx, true);

  // Circular index s holds lag s for s >= 0 and lag s - L for the tail.
  std::vector<double> lags(2 * p - 1);
  for (std::size_t i = 0; i < lags.size(); ++i) {
    const long lag = static_cast<long>(i) - static_cast<long>(p) + 1;
    const std::size_t idx =
        lag >= 0 ? static_cast<std::size_t>(lag)
                 : padded - static_cast<std::size_t>(-lag);
    lags[i] = fx[idx].real();
  }
  return lags;
}

std::pair<double, long> correlation_peak(const std::vector<double>& lags,
                                         std::size_t p, double norm_product) {
  double best = -std::numeric_limits<double>::infinity();
  std::size_t best_index = 0;
  for (std::size_t i = 0; i < lags.size(); ++i) {
    const double ncc = lags[i] / norm_product;
    if (ncc > best) {
      best = ncc;
      best_index = i;
    }
  }
  const double dist = std::clamp(1.0 - best, 0.0, 2.0);
  const long shift = static_cast<long>(best_index) - static_cast<long>(p) + 1;
  return {dist, shift};
}

}  // namespace detail

CrossCorrelation cross_correlate(const TimeSeries& x, const TimeSeries& y) {
  if (x.size() != y.size()) {
    throw DimensionError("cross-correlation needs equal lengths, got " +
                         std::to_string(x.size()) + " and " + std::to_string(y.size()));
  }
  const std::size_t p = x.size();
  const std::size_t padded = next_pow2(2 * p - 1);
  auto fx = detail::padded_spectrum(x, padded);
  const auto fy = detail::padded_spectrum(y, padded);

  CrossCorrelation cc;
  cc.series_length = p;
  cc.values = detail::lag_products(std::move(fx), fy, p);
  return cc;
}

TimeSeries shift_zero_pad(const TimeSeries& y, long shift) {
  const std::size_t p = y.size();
  TimeSeries out = zero_series(p);
  if (shift >= 0) {
    const std::size_t s = static_cast<std::size_t>(shift);
    for (std::size_t i = s; i < p; ++i) out.values[i] = y.values[i - s];
  } else {
    const std::size_t s = static_cast<std::size_t>(-shift);
    for (std::size_t i = 0; i + s < p; ++i) out.values[i] = y.values[i + s];
  }
  return out;
}

SbdResult sbd(const TimeSeries& x, const TimeSeries& y) {
  if (x.size() != y.size()) {
    throw DimensionError("SBD needs equal lengths, got " + std::to_string(x.size()) +
                         " and " + std::to_string(y.size()));
  }
  const double nx = l2_norm(x);
  const double ny = l2_norm(y);
  if (nx == 0.0 || ny == 0.0) {
    // No correlation is measurable against a zero operand.
    return SbdResult{1.0, 0, zero_series(y.size())};
  }

  const CrossCorrelation cc = cross_correlate(x, y);
  const auto [dist, shift] = detail::correlation_peak(cc.values, x.size(), nx * ny);
  return SbdResult{dist, shift, shift_zero_pad(y, shift)};
}

Matrix sbd_distance_matrix(const std::vector<TimeSeries>& prototypes,
                           const std::vector<TimeSeries>& series) {
  Matrix d(prototypes.size(), series.size());
  if (prototypes.empty() || series.empty()) return d;

  const std::size_t p = series[0].size();
  for (const auto& proto : prototypes) {
    if (proto.size() != p) {
      throw DimensionError("prototype length " + std::to_string(proto.size()) +
                           " does not match series length " + std::to_string(p));
    }
  }
  const std::size_t padded = next_pow2(2 * p - 1);

  std::vector<std::vector<std::complex<double>>> proto_spectra;
  std::vector<double> proto_norms;
  std::vector<bool> proto_zero;
  proto_spectra.reserve(prototypes.size());
  for (const auto& proto : prototypes) {
    proto_spectra.push_back(detail::padded_spectrum(proto, padded));
    proto_norms.push_back(l2_norm(proto));
    proto_zero.push_back(proto_norms.back() == 0.0);
  }

  for (std::size_t i = 0; i < series.size(); ++i) {
    if (series[i].size() != p) {
      throw DimensionError("series " + std::to_string(i) + " has length " +
                           std::to_string(series[i].size()) + ", expected " +
                           std::to_string(p));
    }
    const double ns = l2_norm(series[i]);
    if (ns == 0.0) {
      for (std::size_t j = 0; j < prototypes.size(); ++j) d(j, i) = 1.0;
      continue;
    }
    const auto fs = detail::padded_spectrum(series[i], padded);
    for (std::size_t j = 0; j < prototypes.size(); ++j) {
      if (proto_zero[j]) {
        d(j, i) = 1.0;
        continue;
      }
      const auto lags = detail::lag_products(proto_spectra[j], fs, p);
      d(j, i) = detail::correlation_peak(lags, p, proto_norms[j] * ns).first;
    }
  }
  return d;
}

}  // namespace fcs
