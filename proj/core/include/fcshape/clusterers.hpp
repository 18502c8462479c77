#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fcshape/dataset.hpp"
#include "fcshape/partition.hpp"
#include "fcshape/series.hpp"

namespace fcs {

enum class DistanceKind { sbd, euclidean };
enum class InitKind { sample_prototypes, random_assignment };
enum class PrototypeKind { mean, shape_extracted };

struct ClusterConfig {
  std::size_t clusters = 2;          // c, with 2 <= c < n
  double fuzzifier = 2.0;            // m; m = 1 selects crisp updates in fcm()
  std::size_t max_iterations = 100;
  double epsilon = 1e-6;
  std::uint64_t seed = 0;
  DistanceKind distance = DistanceKind::sbd;
  InitKind init = InitKind::sample_prototypes;
  bool sbd_unsquared = false;  // flip the membership exponent convention
};

struct PrototypeSet {
  std::vector<TimeSeries> centroids;
  PrototypeKind kind = PrototypeKind::mean;
};

struct ClusterResult {
  CrispPartition crisp;
  std::optional<FuzzyPartition> fuzzy;  // kept for the fuzzy algorithms
  PrototypeSet prototypes;
  std::vector<double> objective_trace;  // one J value per iteration
  std::size_t iterations = 0;
  double elapsed_seconds = 0.0;
  std::size_t empty_cluster_events = 0;
};

// Indices of the c series drawn (without replacement) as initial prototypes
// for a given seed. Exposed so callers can reason about the seeded
// initialization.
std::vector<std::size_t> sample_prototype_indices(std::uint64_t seed, std::size_t n,
                                                  std::size_t c);

// Alternating-optimization c-means: fuzzy memberships (or crisp nearest-
// prototype assignment when m = 1) against weighted-mean prototypes,
// terminating on the objective delta. cfg.distance selects the model norm;
// with the SBD norm and m > 1 this is exactly fcs_plus().
ClusterResult fcm(const Dataset& data, const ClusterConfig& cfg);

// Crisp shape-based clustering: per-cluster shape extraction followed by
// nearest-prototype assignment, terminating when the label vector repeats.
ClusterResult kshape(const Dataset& data, const ClusterConfig& cfg);

// Fuzzy c-means with the SBD model norm and mean prototypes; the fuzzy
// partition is retained and the crisp one is its hardening. Requires m > 1.
ClusterResult fcs_plus(const Dataset& data, const ClusterConfig& cfg);

// Fuzzy memberships hardened each iteration to drive shape-extracted
// prototypes, terminating on the Frobenius norm of the centroid change.
// Requires m > 1.
ClusterResult fcs_plus_plus(const Dataset& data, const ClusterConfig& cfg);

}  // namespace fcs
