#pragma once

#include <cstddef>
#include <vector>

#include "fcshape/matrix.hpp"
#include "fcshape/series.hpp"

namespace fcs {

// Weighted arithmetic mean of members, elementwise. Weights must be
// nonnegative and sum to a positive value.
TimeSeries mean_prototype(const std::vector<TimeSeries>& members,
                          const std::vector<double>& weights);

// Members aligned toward the reference via the SBD shift; an all-zero
// reference leaves them unchanged.
std::vector<TimeSeries> align_members(const std::vector<TimeSeries>& members,
                                      const TimeSeries& reference);

// The explicit matrices of the centroid maximization problem over aligned
// members X': S = X'^T X', the centering projector Q = I - (1/p)[1] and
// M = Q^T S Q. O(p^2) storage; intended for diagnostics and cross-checks,
// the extraction itself never forms them.
struct RayleighProblem {
  Matrix S;
  Matrix Q;
  Matrix M;
};

RayleighProblem build_rayleigh_problem(const std::vector<TimeSeries>& aligned_members);

// v^T M v / v^T v for the problem induced by the aligned members, evaluated
// without forming M.
double rayleigh_quotient(const std::vector<TimeSeries>& aligned_members,
                         const std::vector<double>& v);

struct ShapeExtraction {
  TimeSeries centroid;                // z-normalized, sign-resolved
  std::vector<double> eigenvector;    // unit dominant eigenvector of M
  double eigenvalue = 0.0;
  std::size_t power_iterations = 0;
};

// Cluster centroid as the dominant eigenvector of M over the SBD-aligned
// members, found by power iteration (M is positive semidefinite, so the
// largest eigenvalue is also the largest in magnitude). The sign is chosen
// to keep the centroid close to the reference (or, for a zero reference,
// positively correlated with the first member), and the result is
// z-normalized. Throws EmptyClusterError for an empty member list.
ShapeExtraction shape_extract_details(const std::vector<TimeSeries>& members,
                                      const TimeSeries& reference);

TimeSeries shape_extract(const std::vector<TimeSeries>& members,
                         const TimeSeries& reference);

}  // namespace fcs
