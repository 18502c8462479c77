#pragma once

// Independent reference implementations used only to cross-check the
// library: direct O(p^2) lag sums, a full symmetric eigendecomposition,
// brute-force pair counting, entropy identities and exact permutation
// distributions. None of these share code with the paths they verify.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "fcshape/matrix.hpp"
#include "fcshape/partition.hpp"
#include "fcshape/series.hpp"
#include "fcshape/validity.hpp"

namespace oracles {

// All 2p-1 cross-correlation lag products by direct summation.
std::vector<double> direct_lag_products(const fcs::TimeSeries& x,
                                        const fcs::TimeSeries& y);

struct DirectSbd {
  double dist;
  long shift;
};

// Shape-based distance from the direct lag products; ties in the argmax go
// to the smallest index, matching the library's rule.
DirectSbd direct_sbd(const fcs::TimeSeries& x, const fcs::TimeSeries& y);

// Largest eigenpair of a symmetric matrix via a full decomposition (Eigen).
std::pair<double, std::vector<double>> dominant_eigenpair(const fcs::Matrix& m);

// Pair counts by looping over all n(n-1)/2 object pairs.
fcs::PairCounts brute_force_pair_counts(const fcs::CrispPartition& u,
                                        const fcs::CrispPartition& q);

// Variation of information through the identity H(U) + H(Q) - 2 MI(U,Q).
double vi_entropy_identity(const fcs::ContingencyTable& table);

// Adjusted Rand index in the sum-of-binomials form (an algebraically
// distinct route from the pair-count form).
double ari_binomial_form(const fcs::ContingencyTable& table);

// Exact two-sided signed-rank p-value, P(|W - mu| >= |w_obs - mu|), by
// enumerating all 2^n sign patterns over the observed average ranks.
// Feasible for n <= ~20.
double wilcoxon_exact_two_sided_p(const std::vector<double>& differences);

// Closed-form chi-square upper tails for even degrees of freedom and df = 1.
double chi2_tail_df1(double x);
double chi2_tail_df2(double x);
double chi2_tail_df4(double x);

}  // namespace oracles
