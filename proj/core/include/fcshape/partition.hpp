#pragma once

#include <cstddef>
#include <vector>

#include "fcshape/matrix.hpp"

namespace fcs {

// A c x n membership matrix: entries in [0, 1], every column summing to 1.
struct FuzzyPartition {
  Matrix memberships;

  std::size_t clusters() const noexcept { return memberships.rows(); }
  std::size_t objects() const noexcept { return memberships.cols(); }

  bool operator==(const FuzzyPartition&) const = default;
};

// A hard assignment: labels[k] in 1..clusters.
struct CrispPartition {
  std::vector<int> labels;
  int clusters = 0;

  std::size_t objects() const noexcept { return labels.size(); }

  bool operator==(const CrispPartition&) const = default;
};

// Membership update from a c x n matrix of squared dissimilarities:
// u_ik = ( sum_j (d_ik / d_jk)^(1/(m-1)) )^-1. Columns containing zero
// distances split their membership equally over the zero entries. With
// unsquared_exponent the ratio exponent becomes 2/(m-1), treating the inputs
// as unsquared distances. Requires m > 1 and nonnegative distances.
FuzzyPartition fuzzy_memberships(const Matrix& squared_distances, double m,
                                 bool unsquared_exponent = false);

// Labels each column with its minimum-distance row; ties go to the lowest
// cluster index.
CrispPartition nearest_prototype(const Matrix& distances);

// Per-column argmax hardening; ties go to the lowest cluster index.
CrispPartition harden(const FuzzyPartition& fuzzy);

// The 0/1 matrix form of a crisp partition.
Matrix crisp_matrix(const CrispPartition& crisp);

}  // namespace fcs
