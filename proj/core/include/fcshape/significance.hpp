#pragma once

#include <cstddef>
#include <vector>

#include "fcshape/matrix.hpp"

namespace fcs {

struct WilcoxonOutcome {
  double r_plus = 0.0;   // rank sum of positive differences (a - b > 0)
  double r_minus = 0.0;  // rank sum of negative differences
  double p_value = 1.0;  // two-sided
  std::size_t n_effective = 0;  // non-zero differences
  bool significant = false;     // p_value < alpha
};

// Paired Wilcoxon signed-rank test of scores_a against scores_b. Zero
// differences are dropped, tied absolute differences receive average ranks,
// and the two-sided p-value uses the normal approximation with tie-corrected
// variance, a continuity correction and Edgeworth moment corrections (which
// keep it within 0.01 of the exact tail down to 6 pairs). Requires at least
// 6 paired scores; all-zero differences yield the no-decision outcome p = 1.
WilcoxonOutcome wilcoxon_signed_rank(const std::vector<double>& scores_a,
                                     const std::vector<double>& scores_b,
                                     double alpha = 0.05);

struct FriedmanOutcome {
  std::vector<double> avg_ranks;  // one per column, each in [1, k]
  double statistic = 0.0;
  double p_value = 1.0;
  std::size_t algorithms = 0;  // k
  std::size_t blocks = 0;      // n
  bool significant = false;
};

// Friedman rank test over an n x k score matrix (rows = datasets, columns =
// algorithms). Rows are ranked with rank 1 for the highest score and average
// ranks on ties; the statistic is referred to chi-square with k-1 degrees of
// freedom. Callers comparing a min-optimal metric should negate the scores.
FriedmanOutcome friedman(const Matrix& scores, double alpha = 0.05);

// Upper tail of the chi-square distribution (regularized incomplete gamma).
double chi_squared_upper_tail(double x, double degrees_of_freedom);

// Standard normal CDF.
double normal_cdf(double z);

// Average ranks of a vector, rank 1 for the smallest value, ties averaged.
std::vector<double> average_ranks(const std::vector<double>& values);

}  // namespace fcs
