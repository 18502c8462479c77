#pragma once

// Deterministic synthetic inputs shared by the unit and acceptance suites.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fcshape/dataset.hpp"
#include "fcshape/partition.hpp"
#include "fcshape/rng.hpp"
#include "fcshape/series.hpp"

namespace synthetic {

// A z-normalized series of iid standard normals.
fcs::TimeSeries random_z_series(fcs::Rng& rng, std::size_t p);

// Template waveforms of length p. The default cycle counts give the three
// shapes disjoint harmonic content (6, 4 and 8 cycles), so they stay far
// apart in normalized cross-correlation while circular shifts wrap within
// each period.
fcs::TimeSeries sine_wave(std::size_t p, std::size_t cycles = 6);
fcs::TimeSeries square_wave(std::size_t p, std::size_t cycles = 4);
fcs::TimeSeries triangle_wave(std::size_t p, std::size_t cycles = 8);

// x rotated left by `shift` samples (negative rotates right).
fcs::TimeSeries rotate(const fcs::TimeSeries& x, long shift);

// Labeled dataset of `copies` randomly rotated and scaled copies of each of
// the three template waveforms, plus mild additive noise, every series
// z-normalized. Shifts are drawn from [-max_shift, max_shift] and scales
// from [scale_min, scale_max].
fcs::Dataset shift_scale_dataset(std::uint64_t seed, std::size_t p, std::size_t copies,
                                 long max_shift, double scale_min, double scale_max,
                                 double noise = 0.02);

// Two well-separated Gaussian blobs embedded as length-`dims` vectors (not
// z-normalized), labeled 1 and 2.
fcs::Dataset gaussian_blobs(std::uint64_t seed, std::size_t per_blob, std::size_t dims,
                            double separation, double sigma);

// n z-normalized noise series of length p, unlabeled.
fcs::Dataset random_dataset(std::uint64_t seed, std::size_t n, std::size_t p);

// A uniform random crisp partition over n objects with exactly c used labels
// (every cluster nonempty).
fcs::CrispPartition random_partition(fcs::Rng& rng, std::size_t n, std::size_t c);

}  // namespace synthetic
