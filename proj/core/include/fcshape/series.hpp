#pragma once

#include <cstddef>
#include <vector>

namespace fcs {

// A finite, equal-sampled waveform of length p. Values are dimensionless
// after z-normalization.
struct TimeSeries {
  std::vector<double> values;

  TimeSeries() = default;
  explicit TimeSeries(std::vector<double> v) : values(std::move(v)) {}

  std::size_t size() const noexcept { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
  double& operator[](std::size_t i) { return values[i]; }

  bool operator==(const TimeSeries&) const = default;
};

double series_mean(const TimeSeries& x);

// Population standard deviation (divides by p, not p-1).
double population_stddev(const TimeSeries& x);

// Euclidean norm of the sample vector.
double l2_norm(const TimeSeries& x);

bool all_zero(const TimeSeries& x);

// Linear transform to zero mean and unit population standard deviation.
// A (numerically) constant series maps to the all-zero series. Throws
// InvalidSeriesError when the input has fewer than 2 samples.
TimeSeries z_normalize(const TimeSeries& raw);

TimeSeries zero_series(std::size_t length);

}  // namespace fcs
