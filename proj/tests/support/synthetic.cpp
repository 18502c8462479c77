#include "synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace synthetic {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

fcs::TimeSeries random_z_series(fcs::Rng& rng, std::size_t p) {
  fcs::TimeSeries raw;
  raw.values.reserve(p);
  for (std::size_t i = 0; i < p; ++i) raw.values.push_back(rng.normal());
  return fcs::z_normalize(raw);
}

fcs::TimeSeries sine_wave(std::size_t p, std::size_t cycles) {
  fcs::TimeSeries s;
  s.values.reserve(p);
  for (std::size_t t = 0; t < p; ++t) {
    const double phase = static_cast<double>(cycles * t) / static_cast<double>(p);
    s.values.push_back(std::sin(kTwoPi * phase));
  }
  return s;
}

fcs::TimeSeries square_wave(std::size_t p, std::size_t cycles) {
  fcs::TimeSeries s;
  s.values.reserve(p);
  for (std::size_t t = 0; t < p; ++t) {
    const double phase = static_cast<double>(cycles * t) / static_cast<double>(p);
    s.values.push_back(phase - std::floor(phase) < 0.5 ? 1.0 : -1.0);
  }
  return s;
}

fcs::TimeSeries triangle_wave(std::size_t p, std::size_t cycles) {
  fcs::TimeSeries s;
  s.values.reserve(p);
  for (std::size_t t = 0; t < p; ++t) {
    const double phase = static_cast<double>(cycles * t) / static_cast<double>(p);
    const double frac = phase - std::floor(phase);
    s.values.push_back(frac < 0.5 ? 4.0 * frac - 1.0 : 3.0 - 4.0 * frac);
  }
  return s;
}

fcs::TimeSeries rotate(const fcs::TimeSeries& x, long shift) {
  const long p = static_cast<long>(x.size());
  fcs::TimeSeries out = x;
  for (long t = 0; t < p; ++t) {
    const long src = ((t + shift) % p + p) % p;
    out.values[static_cast<std::size_t>(t)] = x.values[static_cast<std::size_t>(src)];
  }
  return out;
}

fcs::Dataset shift_scale_dataset(std::uint64_t seed, std::size_t p, std::size_t copies,
                                 long max_shift, double scale_min, double scale_max,
                                 double noise) {
  fcs::Rng rng(seed);
  const std::vector<fcs::TimeSeries> templates = {sine_wave(p), square_wave(p),
                                                  triangle_wave(p)};
  fcs::Dataset ds;
  ds.name = "synthetic-shapes";
  std::vector<int> labels;
  for (std::size_t cls = 0; cls < templates.size(); ++cls) {
    for (std::size_t i = 0; i < copies; ++i) {
      const long shift =
          static_cast<long>(rng.uniform_below(2 * static_cast<std::uint64_t>(max_shift) + 1)) -
          max_shift;
      const double scale = scale_min + (scale_max - scale_min) * rng.uniform();
      fcs::TimeSeries s = rotate(templates[cls], shift);
      for (double& v : s.values) v = scale * v + noise * rng.normal();
      ds.series.push_back(fcs::z_normalize(s));
      labels.push_back(static_cast<int>(cls) + 1);
    }
  }
  ds.labels = std::move(labels);
  return ds;
}

fcs::Dataset gaussian_blobs(std::uint64_t seed, std::size_t per_blob, std::size_t dims,
                            double separation, double sigma) {
  fcs::Rng rng(seed);
  fcs::Dataset ds;
  ds.name = "blobs";
  std::vector<int> labels;
  for (int blob = 0; blob < 2; ++blob) {
    const double center = blob == 0 ? 0.0 : separation;
    for (std::size_t i = 0; i < per_blob; ++i) {
      fcs::TimeSeries s;
      s.values.reserve(dims);
      for (std::size_t d = 0; d < dims; ++d) {
        s.values.push_back(center + sigma * rng.normal());
      }
      ds.series.push_back(std::move(s));
      labels.push_back(blob + 1);
    }
  }
  ds.labels = std::move(labels);
  return ds;
}

fcs::Dataset random_dataset(std::uint64_t seed, std::size_t n, std::size_t p) {
  fcs::Rng rng(seed);
  fcs::Dataset ds;
  ds.name = "noise";
  for (std::size_t i = 0; i < n; ++i) ds.series.push_back(random_z_series(rng, p));
  return ds;
}

fcs::CrispPartition random_partition(fcs::Rng& rng, std::size_t n, std::size_t c) {
  fcs::CrispPartition u;
  u.clusters = static_cast<int>(c);
  u.labels.resize(n);
  // Seat one object per cluster first so none is empty.
  std::vector<std::size_t> seats = rng.sample_without_replacement(n, c);
  for (std::size_t j = 0; j < seats.size(); ++j) {
    u.labels[seats[j]] = static_cast<int>(j) + 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (u.labels[k] == 0) {
      u.labels[k] = static_cast<int>(rng.uniform_below(c)) + 1;
    }
  }
  return u;
}

}  // namespace synthetic
