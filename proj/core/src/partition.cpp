#include "fcshape/partition.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "fcshape/errors.hpp"

namespace fcs {

FuzzyPartition fuzzy_memberships(const Matrix& squared_distances, double m,
                                 bool unsquared_exponent) {
  if (!(m > 1.0)) {
    throw ParameterError("fuzzifier must exceed 1, got " + std::to_string(m));
  }
  const std::size_t c = squared_distances.rows();
  const std::size_t n = squared_distances.cols();
  const double exponent = (unsquared_exponent ? 2.0 : 1.0) / (m - 1.0);

  FuzzyPartition out{Matrix(c, n)};
  std::vector<std::size_t> zero_rows;
  for (std::size_t k = 0; k < n; ++k) {
    zero_rows.clear();
    for (std::size_t i = 0; i < c; ++i) {
      const double d = squared_distances(i, k);
      if (d < 0.0) throw ParameterError("distances must be nonnegative");
      if (d == 0.0) zero_rows.push_back(i);
    }

    if (!zero_rows.empty()) {
      // Limit of the update as distances vanish: share among the zeros.
      const double share = 1.0 / static_cast<double>(zero_rows.size());
      for (std::size_t i : zero_rows) out.memberships(i, k) = share;
      continue;
    }

    double column_sum = 0.0;
    for (std::size_t i = 0; i < c; ++i) {
      const double d_i = squared_distances(i, k);
      double denom = 0.0;
      for (std::size_t j = 0; j < c; ++j) {
        denom += std::pow(d_i / squared_distances(j, k), exponent);
      }
      const double u = 1.0 / denom;
      out.memberships(i, k) = u;
      column_sum += u;
    }
    // Strip residual rounding so columns sum to 1 exactly within epsilon.
    for (std::size_t i = 0; i < c; ++i) out.memberships(i, k) /= column_sum;
  }
  return out;
}

CrispPartition nearest_prototype(const Matrix& distances) {
  const std::size_t c = distances.rows();
  const std::size_t n = distances.cols();
  CrispPartition out;
  out.clusters = static_cast<int>(c);
  out.labels.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < c; ++i) {
      if (distances(i, k) < distances(best, k)) best = i;
    }
    out.labels[k] = static_cast<int>(best) + 1;
  }
  return out;
}

CrispPartition harden(const FuzzyPartition& fuzzy) {
  const std::size_t c = fuzzy.clusters();
  const std::size_t n = fuzzy.objects();
  CrispPartition out;
  out.clusters = static_cast<int>(c);
  out.labels.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < c; ++i) {
      if (fuzzy.memberships(i, k) > fuzzy.memberships(best, k)) best = i;
    }
    out.labels[k] = static_cast<int>(best) + 1;
  }
  return out;
}

Matrix crisp_matrix(const CrispPartition& crisp) {
  Matrix m(static_cast<std::size_t>(crisp.clusters), crisp.labels.size());
  for (std::size_t k = 0; k < crisp.labels.size(); ++k) {
    m(static_cast<std::size_t>(crisp.labels[k] - 1), k) = 1.0;
  }
  return m;
}

}  // namespace fcs
