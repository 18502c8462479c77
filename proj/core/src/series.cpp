#include "fcshape/series.hpp"

#include <algorithm>
#include <cmath>

#include "fcshape/errors.hpp"

namespace fcs {

double series_mean(const TimeSeries& x) {
  double s = 0.0;
  for (double v : x.values) s += v;
  return x.values.empty() ? 0.0 : s / static_cast<double>(x.size());
}

double population_stddev(const TimeSeries& x) {
  if (x.values.empty()) return 0.0;
  const double m = series_mean(x);
  double s = 0.0;
  for (double v : x.values) {
    const double d = v - m;
    s += d * d;
  }
  return std::sqrt(s / static_cast<double>(x.size()));
}

double l2_norm(const TimeSeries& x) {
  double s = 0.0;
  for (double v : x.values) s += v * v;
  return std::sqrt(s);
}

bool all_zero(const TimeSeries& x) {
  return std::all_of(x.values.begin(), x.values.end(),
                     [](double v) { return v == 0.0; });
}

TimeSeries z_normalize(const TimeSeries& raw) {
  if (raw.size() < 2) {
    throw InvalidSeriesError("z-normalization requires at least 2 samples, got " +
                             std::to_string(raw.size()));
  }
  const double m = series_mean(raw);
  const double sd = population_stddev(raw);

  double amplitude = 0.0;
  for (double v : raw.values) amplitude = std::max(amplitude, std::abs(v));

  // A deviation at or below the rounding noise of the samples means the
  // series is constant for all practical purposes.
  if (sd <= 1e-13 * amplitude || sd == 0.0) {
    return zero_series(raw.size());
  }

  TimeSeries out;
  out.values.reserve(raw.size());
  for (double v : raw.values) out.values.push_back((v - m) / sd);
  return out;
}

TimeSeries zero_series(std::size_t length) {
  return TimeSeries(std::vector<double>(length, 0.0));
}

}  // namespace fcs
