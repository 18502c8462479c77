#include "fcshape/clusterers.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "fcshape/errors.hpp"
#include "fcshape/prototypes.hpp"
#include "fcshape/rng.hpp"
#include "fcshape/sbd.hpp"

namespace fcs {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void validate(const Dataset& data, const ClusterConfig& cfg, bool needs_fuzzy,
              bool allow_c_equal_n = false) {
  const std::size_t n = data.size();
  if (n < 2) throw ConfigError("clustering needs at least 2 series");
  for (const auto& s : data.series) {
    if (s.size() != data.length()) {
      throw DimensionError("all series must share one length");
    }
  }
  const std::size_t c_limit = allow_c_equal_n ? n : n - 1;
  if (cfg.clusters < 2 || cfg.clusters > c_limit) {
    throw ConfigError("cluster count must satisfy 2 <= c " +
                      std::string(allow_c_equal_n ? "<= n" : "< n") + ", got c = " +
                      std::to_string(cfg.clusters) + " with n = " + std::to_string(n));
  }
  if (!(cfg.epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  if (cfg.max_iterations == 0) throw ConfigError("iteration limit must be positive");
  if (needs_fuzzy) {
    if (!(cfg.fuzzifier > 1.0)) {
      throw ConfigError("fuzzifier must exceed 1 for the fuzzy algorithms");
    }
  } else if (!(cfg.fuzzifier >= 1.0)) {
    throw ConfigError("fuzzifier must be at least 1");
  }
}

Matrix squared_euclidean_matrix(const std::vector<TimeSeries>& prototypes,
                                const std::vector<TimeSeries>& series) {
  Matrix d(prototypes.size(), series.size());
  for (std::size_t j = 0; j < prototypes.size(); ++j) {
    for (std::size_t i = 0; i < series.size(); ++i) {
      double s = 0.0;
      for (std::size_t t = 0; t < prototypes[j].size(); ++t) {
        const double delta = prototypes[j].values[t] - series[i].values[t];
        s += delta * delta;
      }
      d(j, i) = s;
    }
  }
  return d;
}

Matrix distance_matrix(DistanceKind kind, const std::vector<TimeSeries>& prototypes,
                       const std::vector<TimeSeries>& series) {
  return kind == DistanceKind::sbd ? sbd_distance_matrix(prototypes, series)
                                   : squared_euclidean_matrix(prototypes, series);
}

double crisp_objective(const Matrix& d, const CrispPartition& u) {
  double j = 0.0;
  for (std::size_t k = 0; k < u.labels.size(); ++k) {
    j += d(static_cast<std::size_t>(u.labels[k] - 1), k);
  }
  return j;
}

double fuzzy_objective(const Matrix& d, const FuzzyPartition& u, double m) {
  double j = 0.0;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t k = 0; k < d.cols(); ++k) {
      j += std::pow(u.memberships(i, k), m) * d(i, k);
    }
  }
  return j;
}

std::vector<TimeSeries> cluster_members(const Dataset& data, const CrispPartition& u,
                                        int cluster) {
  std::vector<TimeSeries> members;
  for (std::size_t k = 0; k < u.labels.size(); ++k) {
    if (u.labels[k] == cluster) members.push_back(data.series[k]);
  }
  return members;
}

CrispPartition random_labels(Rng& rng, std::size_t n, std::size_t c) {
  CrispPartition u;
  u.clusters = static_cast<int>(c);
  u.labels.resize(n);
  for (auto& l : u.labels) l = static_cast<int>(rng.uniform_below(c)) + 1;
  return u;
}

// Crisp per-cluster means; an empty cluster keeps its previous centroid.
void update_mean_prototypes_crisp(const Dataset& data, const CrispPartition& u,
                                  std::vector<TimeSeries>& centroids,
                                  std::size_t& empty_events) {
  for (std::size_t j = 0; j < centroids.size(); ++j) {
    const auto members = cluster_members(data, u, static_cast<int>(j) + 1);
    if (members.empty()) {
      ++empty_events;
      continue;
    }
    centroids[j] = mean_prototype(members, std::vector<double>(members.size(), 1.0));
  }
}

// Membership-weighted means with weights u_ik^m; a cluster whose weights all
// underflow keeps its previous centroid.
void update_mean_prototypes_fuzzy(const Dataset& data, const FuzzyPartition& u,
                                  double m, std::vector<TimeSeries>& centroids,
                                  std::size_t& empty_events) {
  std::vector<double> weights(data.size());
  for (std::size_t j = 0; j < centroids.size(); ++j) {
    double total = 0.0;
    for (std::size_t k = 0; k < data.size(); ++k) {
      weights[k] = std::pow(u.memberships(j, k), m);
      total += weights[k];
    }
    if (total <= 0.0) {
      ++empty_events;
      continue;
    }
    centroids[j] = mean_prototype(data.series, weights);
  }
}

// Per-cluster shape extraction; an empty cluster keeps its previous centroid.
void update_shape_prototypes(const Dataset& data, const CrispPartition& u,
                             std::vector<TimeSeries>& centroids,
                             std::size_t& empty_events) {
  for (std::size_t j = 0; j < centroids.size(); ++j) {
    const auto members = cluster_members(data, u, static_cast<int>(j) + 1);
    if (members.empty()) {
      ++empty_events;
      continue;
    }
    centroids[j] = shape_extract(members, centroids[j]);
  }
}

std::vector<TimeSeries> sampled_prototypes(const Dataset& data, const ClusterConfig& cfg) {
  std::vector<TimeSeries> centroids;
  centroids.reserve(cfg.clusters);
  for (std::size_t idx : sample_prototype_indices(cfg.seed, data.size(), cfg.clusters)) {
    centroids.push_back(data.series[idx]);
  }
  return centroids;
}

double centroid_delta(const std::vector<TimeSeries>& a, const std::vector<TimeSeries>& b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t t = 0; t < a[j].size(); ++t) {
      const double d = a[j].values[t] - b[j].values[t];
      s += d * d;
    }
  }
  return std::sqrt(s);
}

// Shared alternating-optimization loop behind fcm() and fcs_plus().
ClusterResult run_c_means(const Dataset& data, const ClusterConfig& cfg) {
  const auto start = Clock::now();
  const bool crisp_updates = cfg.fuzzifier == 1.0;
  const bool unsquared = cfg.sbd_unsquared && cfg.distance == DistanceKind::sbd;

  ClusterResult result;
  result.prototypes.kind = PrototypeKind::mean;

  std::vector<TimeSeries>& centroids = result.prototypes.centroids;
  Rng rng(cfg.seed);
  if (cfg.init == InitKind::sample_prototypes) {
    centroids = sampled_prototypes(data, cfg);
  } else {
    const CrispPartition u0 = random_labels(rng, data.size(), cfg.clusters);
    centroids.assign(cfg.clusters, zero_series(data.length()));
    update_mean_prototypes_crisp(data, u0, centroids, result.empty_cluster_events);
  }

  Matrix d = distance_matrix(cfg.distance, centroids, data.series);
  double previous_j = std::numeric_limits<double>::infinity();

  FuzzyPartition fuzzy;
  CrispPartition crisp;
  for (std::size_t t = 1; t <= cfg.max_iterations; ++t) {
    if (crisp_updates) {
      crisp = nearest_prototype(d);
      update_mean_prototypes_crisp(data, crisp, centroids, result.empty_cluster_events);
    } else {
      fuzzy = fuzzy_memberships(d, cfg.fuzzifier, unsquared);
      update_mean_prototypes_fuzzy(data, fuzzy, cfg.fuzzifier, centroids,
                                   result.empty_cluster_events);
    }

    d = distance_matrix(cfg.distance, centroids, data.series);
    const double j = crisp_updates ? crisp_objective(d, crisp)
                                   : fuzzy_objective(d, fuzzy, cfg.fuzzifier);
    result.objective_trace.push_back(j);
    result.iterations = t;
    if (std::abs(j - previous_j) < cfg.epsilon) break;
    previous_j = j;
  }

  if (crisp_updates) {
    result.crisp = std::move(crisp);
  } else {
    result.crisp = harden(fuzzy);
    result.fuzzy = std::move(fuzzy);
  }
  result.elapsed_seconds = seconds_since(start);
  return result;
}

}  // namespace

std::vector<std::size_t> sample_prototype_indices(std::uint64_t seed, std::size_t n,
                                                  std::size_t c) {
  Rng rng(seed);
  return rng.sample_without_replacement(n, c);
}

ClusterResult fcm(const Dataset& data, const ClusterConfig& cfg) {
  validate(data, cfg, /*needs_fuzzy=*/false);
  return run_c_means(data, cfg);
}

ClusterResult fcs_plus(const Dataset& data, const ClusterConfig& cfg) {
  validate(data, cfg, /*needs_fuzzy=*/true);
  ClusterConfig shaped = cfg;
  shaped.distance = DistanceKind::sbd;
  return run_c_means(data, shaped);
}

ClusterResult kshape(const Dataset& data, const ClusterConfig& cfg) {
  // c = n is allowed: distinct prototypes then pin each series to itself.
  validate(data, cfg, /*needs_fuzzy=*/false, /*allow_c_equal_n=*/true);
  const auto start = Clock::now();

  ClusterResult result;
  result.prototypes.kind = PrototypeKind::shape_extracted;
  std::vector<TimeSeries>& centroids = result.prototypes.centroids;

  Rng rng(cfg.seed);
  CrispPartition labels;
  if (cfg.init == InitKind::sample_prototypes) {
    centroids = sampled_prototypes(data, cfg);
    labels = nearest_prototype(sbd_distance_matrix(centroids, data.series));
  } else {
    centroids.assign(cfg.clusters, zero_series(data.length()));
    labels = random_labels(rng, data.size(), cfg.clusters);
  }

  for (std::size_t t = 1; t <= cfg.max_iterations; ++t) {
    const CrispPartition previous = labels;

    update_shape_prototypes(data, labels, centroids, result.empty_cluster_events);
    const Matrix d = sbd_distance_matrix(centroids, data.series);
    labels = nearest_prototype(d);

    result.objective_trace.push_back(crisp_objective(d, labels));
    result.iterations = t;
    if (labels.labels == previous.labels) break;
  }

  result.crisp = std::move(labels);
  result.elapsed_seconds = seconds_since(start);
  return result;
}

ClusterResult fcs_plus_plus(const Dataset& data, const ClusterConfig& cfg) {
  validate(data, cfg, /*needs_fuzzy=*/true);
  const auto start = Clock::now();

  ClusterResult result;
  result.prototypes.kind = PrototypeKind::shape_extracted;
  std::vector<TimeSeries>& centroids = result.prototypes.centroids;

  Rng rng(cfg.seed);
  if (cfg.init == InitKind::sample_prototypes) {
    centroids = sampled_prototypes(data, cfg);
  } else {
    const CrispPartition u0 = random_labels(rng, data.size(), cfg.clusters);
    centroids.assign(cfg.clusters, zero_series(data.length()));
    update_shape_prototypes(data, u0, centroids, result.empty_cluster_events);
  }

  Matrix d = sbd_distance_matrix(centroids, data.series);
  CrispPartition hardened;
  for (std::size_t t = 1; t <= cfg.max_iterations; ++t) {
    const FuzzyPartition fuzzy = fuzzy_memberships(d, cfg.fuzzifier, cfg.sbd_unsquared);
    hardened = harden(fuzzy);

    const std::vector<TimeSeries> previous = centroids;
    update_shape_prototypes(data, hardened, centroids, result.empty_cluster_events);
    const double delta = centroid_delta(centroids, previous);

    d = sbd_distance_matrix(centroids, data.series);
    result.objective_trace.push_back(crisp_objective(d, hardened));
    result.iterations = t;
    if (delta < cfg.epsilon) break;
  }

  result.crisp = std::move(hardened);
  result.elapsed_seconds = seconds_since(start);
  return result;
}

}  // namespace fcs
