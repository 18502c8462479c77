#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fcshape/partition.hpp"

namespace fcs {

// Co-occurrence counts between two crisp partitions of the same n objects.
struct ContingencyTable {
  std::size_t rows = 0;  // clusters in u
  std::size_t cols = 0;  // clusters in q
  std::vector<std::uint64_t> counts;  // row-major
  std::vector<std::uint64_t> row_sums;
  std::vector<std::uint64_t> col_sums;
  std::uint64_t total = 0;  // n

  std::uint64_t at(std::size_t i, std::size_t j) const { return counts[i * cols + j]; }
};

// The four pair-comparison counts derived from a contingency table:
//   a  pairs together in both partitions
//   b  pairs together in q only
//   c  pairs together in u only
//   d  pairs apart in both
// a + b + c + d = n(n-1)/2.
struct PairCounts {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;
  std::uint64_t d = 0;

  std::uint64_t total_pairs() const { return a + b + c + d; }
};

struct CviReport {
  double ri = 0.0;
  double ari = 0.0;
  double nmi = 0.0;
  double vi = 0.0;
};

ContingencyTable contingency(const CrispPartition& u, const CrispPartition& q);

PairCounts pair_counts(const ContingencyTable& table);

// (a + d) / (a + b + c + d), in [0, 1], 1 iff the partitions agree.
double rand_index(const PairCounts& pc);

// Chance-corrected Rand index (Hubert-Arabie form); returns 1 when the
// partitions are identical and the correction denominator vanishes, 0 for
// other degenerate cases.
double adjusted_rand(const PairCounts& pc);

// Joint entropy minus mutual information (natural log); a metric on
// partitions valued in [0, log n], 0 iff the partitions agree.
double variation_of_information(const ContingencyTable& table);

// Mutual information normalized by the larger marginal entropy, in [0, 1].
// Two zero-entropy (single-cluster) partitions compare as identical: 1.
double nmi_max(const ContingencyTable& table);

// All four indices from one contingency table.
CviReport evaluate_cvis(const CrispPartition& u, const CrispPartition& q);

}  // namespace fcs
