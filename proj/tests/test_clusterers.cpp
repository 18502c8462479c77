#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fcshape/clusterers.hpp"
#include "fcshape/errors.hpp"
#include "fcshape/rng.hpp"
#include "fcshape/validity.hpp"
#include "support/synthetic.hpp"

using fcs::ClusterConfig;
using fcs::ClusterResult;
using fcs::Dataset;

namespace {

fcs::CrispPartition truth_partition(const Dataset& ds) {
  fcs::CrispPartition truth;
  truth.labels = *ds.labels;
  truth.clusters = static_cast<int>(ds.label_count());
  return truth;
}

bool non_increasing(const std::vector<double>& trace, double tol) {
  for (std::size_t t = 1; t < trace.size(); ++t) {
    if (trace[t] > trace[t - 1] + tol) return false;
  }
  return true;
}

// A seed whose two sampled prototypes come from different blobs, so the
// alternating optimization cannot start in the symmetric trap.
std::uint64_t blob_spanning_seed(std::size_t n, std::size_t per_blob) {
  for (std::uint64_t seed = 0;; ++seed) {
    const auto idx = fcs::sample_prototype_indices(seed, n, 2);
    if ((idx[0] < per_blob) != (idx[1] < per_blob)) return seed;
  }
}

ClusterConfig shape_config(std::size_t c, std::uint64_t seed) {
  ClusterConfig cfg;
  cfg.clusters = c;
  cfg.seed = seed;
  cfg.distance = fcs::DistanceKind::sbd;
  return cfg;
}

}  // namespace

TEST_CASE("fcm separates well-separated blobs") {
  const Dataset blobs = synthetic::gaussian_blobs(5, 20, 2, 10.0, 0.5);
  ClusterConfig cfg;
  cfg.clusters = 2;
  cfg.fuzzifier = 2.0;
  cfg.distance = fcs::DistanceKind::euclidean;
  cfg.seed = blob_spanning_seed(blobs.size(), 20);

  const ClusterResult result = fcs::fcm(blobs, cfg);
  const fcs::CviReport report = fcs::evaluate_cvis(result.crisp, truth_partition(blobs));
  CHECK(report.ri == 1.0);
  REQUIRE(result.fuzzy.has_value());
  CHECK(result.fuzzy->clusters() == 2);
}

TEST_CASE("hcm separates the same blobs with crisp updates") {
  const Dataset blobs = synthetic::gaussian_blobs(6, 20, 2, 10.0, 0.5);
  ClusterConfig cfg;
  cfg.clusters = 2;
  cfg.fuzzifier = 1.0;
  cfg.distance = fcs::DistanceKind::euclidean;
  cfg.seed = blob_spanning_seed(blobs.size(), 20);

  const ClusterResult result = fcs::fcm(blobs, cfg);
  CHECK(fcs::evaluate_cvis(result.crisp, truth_partition(blobs)).ri == 1.0);
  CHECK_FALSE(result.fuzzy.has_value());
}

TEST_CASE("cluster count must stay below the series count for c-means") {
  const Dataset blobs = synthetic::gaussian_blobs(7, 3, 2, 10.0, 0.5);
  ClusterConfig cfg;
  cfg.clusters = blobs.size();
  cfg.distance = fcs::DistanceKind::euclidean;
  CHECK_THROWS_AS(fcs::fcm(blobs, cfg), fcs::ConfigError);
  cfg.clusters = 1;
  CHECK_THROWS_AS(fcs::fcm(blobs, cfg), fcs::ConfigError);
}

TEST_CASE("euclidean objective traces never increase") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Dataset data = synthetic::random_dataset(200 + seed, 24, 12);
    ClusterConfig cfg;
    cfg.clusters = 3;
    cfg.distance = fcs::DistanceKind::euclidean;
    cfg.seed = seed;
    cfg.fuzzifier = seed % 2 == 0 ? 2.0 : 1.0;
    const ClusterResult result = fcs::fcm(data, cfg);
    CHECK(non_increasing(result.objective_trace, 1e-9));
    CHECK(result.iterations == result.objective_trace.size());
    CHECK(result.iterations <= cfg.max_iterations);
  }
}

TEST_CASE("kshape recovers shift and scale groups") {
  const Dataset data = synthetic::shift_scale_dataset(301, 64, 10, 16, 0.5, 2.0);
  const ClusterResult result = fcs::kshape(data, shape_config(3, 4));
  CHECK(fcs::evaluate_cvis(result.crisp, truth_partition(data)).ri == 1.0);
  CHECK(result.prototypes.kind == fcs::PrototypeKind::shape_extracted);
  CHECK(result.prototypes.centroids.size() == 3);
}

TEST_CASE("kshape with c equal to n separates distinct series") {
  fcs::Rng rng(131);
  Dataset data;
  data.name = "distinct";
  for (int i = 0; i < 5; ++i) data.series.push_back(synthetic::random_z_series(rng, 24));

  const ClusterResult result = fcs::kshape(data, shape_config(5, 3));
  std::vector<int> sorted = result.crisp.labels;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{1, 2, 3, 4, 5});
}

TEST_CASE("repeat runs are identical") {
  const Dataset data = synthetic::shift_scale_dataset(302, 32, 6, 8, 0.5, 2.0);
  for (int algorithm = 0; algorithm < 3; ++algorithm) {
    auto run = [&]() {
      const ClusterConfig cfg = shape_config(3, 99);
      switch (algorithm) {
        case 0: return fcs::kshape(data, cfg);
        case 1: return fcs::fcs_plus(data, cfg);
        default: return fcs::fcs_plus_plus(data, cfg);
      }
    };
    const ClusterResult a = run();
    const ClusterResult b = run();
    CHECK(a.crisp.labels == b.crisp.labels);
    CHECK(a.objective_trace == b.objective_trace);
    CHECK(a.prototypes.centroids == b.prototypes.centroids);
    CHECK(a.iterations == b.iterations);
  }
}

TEST_CASE("fcs+ recovers the shape groups and keeps a valid fuzzy partition") {
  const Dataset data = synthetic::shift_scale_dataset(303, 64, 10, 16, 0.5, 2.0);
  const ClusterResult result = fcs::fcs_plus(data, shape_config(3, 11));
  CHECK(fcs::evaluate_cvis(result.crisp, truth_partition(data)).ri == 1.0);

  REQUIRE(result.fuzzy.has_value());
  for (std::size_t k = 0; k < result.fuzzy->objects(); ++k) {
    double sum = 0.0;
    for (std::size_t i = 0; i < result.fuzzy->clusters(); ++i) {
      sum += result.fuzzy->memberships(i, k);
    }
    CHECK(std::abs(sum - 1.0) < 1e-10);
  }
  CHECK(result.prototypes.kind == fcs::PrototypeKind::mean);
}

TEST_CASE("fcs+ requires a fuzzifier above 1") {
  const Dataset data = synthetic::shift_scale_dataset(304, 32, 4, 8, 0.5, 2.0);
  ClusterConfig cfg = shape_config(3, 1);
  cfg.fuzzifier = 1.0;
  CHECK_THROWS_AS(fcs::fcs_plus(data, cfg), fcs::ConfigError);
  CHECK_THROWS_AS(fcs::fcs_plus_plus(data, cfg), fcs::ConfigError);
}

TEST_CASE("fcs++ recovers the shape groups crisply") {
  const Dataset data = synthetic::shift_scale_dataset(305, 64, 10, 16, 0.5, 2.0);
  const ClusterResult result = fcs::fcs_plus_plus(data, shape_config(3, 21));
  CHECK(fcs::evaluate_cvis(result.crisp, truth_partition(data)).ri == 1.0);
  CHECK_FALSE(result.fuzzy.has_value());
  CHECK(result.prototypes.kind == fcs::PrototypeKind::shape_extracted);
  CHECK(!result.objective_trace.empty());
  CHECK(result.iterations <= shape_config(3, 21).max_iterations);
}

TEST_CASE("identical series force empty-cluster handling") {
  fcs::Rng rng(137);
  const fcs::TimeSeries x = synthetic::random_z_series(rng, 16);
  Dataset data;
  data.name = "identical";
  for (int i = 0; i < 6; ++i) data.series.push_back(x);

  const ClusterResult result = fcs::kshape(data, shape_config(2, 0));
  CHECK(result.empty_cluster_events > 0);
  CHECK(result.prototypes.centroids.size() == 2);
  const auto& labels = result.crisp.labels;
  CHECK(std::all_of(labels.begin(), labels.end(), [&](int l) { return l == labels[0]; }));
}

TEST_CASE("permuting the unsampled series permutes the labels") {
  const std::size_t n = 18, c = 3;
  const std::uint64_t seed = 77;
  const Dataset data = synthetic::shift_scale_dataset(306, 32, 6, 8, 0.5, 2.0);
  REQUIRE(data.size() == n);

  // Fix the sampled prototypes so both runs start identically, then rotate
  // the remaining series.
  const auto sampled = fcs::sample_prototype_indices(seed, n, c);
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::find(sampled.begin(), sampled.end(), i) == sampled.end()) rest.push_back(i);
  }
  std::vector<std::size_t> source(n);
  std::iota(source.begin(), source.end(), std::size_t{0});
  for (std::size_t r = 0; r < rest.size(); ++r) {
    source[rest[r]] = rest[(r + 1) % rest.size()];
  }

  Dataset permuted;
  permuted.name = data.name;
  for (std::size_t i = 0; i < n; ++i) permuted.series.push_back(data.series[source[i]]);

  for (int algorithm = 0; algorithm < 4; ++algorithm) {
    ClusterConfig cfg = shape_config(c, seed);
    auto run = [&](const Dataset& ds) {
      switch (algorithm) {
        case 0: return fcs::kshape(ds, cfg);
        case 1: return fcs::fcs_plus(ds, cfg);
        case 2: return fcs::fcs_plus_plus(ds, cfg);
        default:
          cfg.distance = fcs::DistanceKind::euclidean;
          return fcs::fcm(ds, cfg);
      }
    };
    const ClusterResult base = run(data);
    const ClusterResult perm = run(permuted);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(perm.crisp.labels[i] == base.crisp.labels[source[i]]);
    }
  }
}

TEST_CASE("fixed seeds give reproducible hcm with random assignment init") {
  const Dataset data = synthetic::random_dataset(307, 20, 10);
  ClusterConfig cfg;
  cfg.clusters = 4;
  cfg.distance = fcs::DistanceKind::euclidean;
  cfg.fuzzifier = 1.0;
  cfg.init = fcs::InitKind::random_assignment;
  cfg.seed = 13;
  const ClusterResult a = fcs::fcm(data, cfg);
  const ClusterResult b = fcs::fcm(data, cfg);
  CHECK(a.crisp.labels == b.crisp.labels);
  CHECK(non_increasing(a.objective_trace, 1e-9));
}

TEST_CASE("random assignment init works for the shape algorithms") {
  const Dataset data = synthetic::shift_scale_dataset(308, 32, 6, 8, 0.5, 2.0);
  ClusterConfig cfg = shape_config(3, 5);
  cfg.init = fcs::InitKind::random_assignment;

  const ClusterResult ks = fcs::kshape(data, cfg);
  CHECK(ks.iterations <= cfg.max_iterations);
  CHECK(ks.crisp.labels.size() == data.size());

  const ClusterResult fpp = fcs::fcs_plus_plus(data, cfg);
  CHECK(fpp.iterations <= cfg.max_iterations);
  CHECK(fpp.crisp.labels.size() == data.size());
}
