#include "oracles.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

namespace oracles {

std::vector<double> direct_lag_products(const fcs::TimeSeries& x,
                                        const fcs::TimeSeries& y) {
  const std::size_t p = x.size();
  std::vector<double> lags(2 * p - 1, 0.0);
  for (long k = -(static_cast<long>(p) - 1); k <= static_cast<long>(p) - 1; ++k) {
    double sum = 0.0;
    if (k >= 0) {
      for (std::size_t j = 0; j + static_cast<std::size_t>(k) < p; ++j) {
        sum += x.values[j + static_cast<std::size_t>(k)] * y.values[j];
      }
    } else {
      for (std::size_t j = 0; j + static_cast<std::size_t>(-k) < p; ++j) {
        sum += y.values[j + static_cast<std::size_t>(-k)] * x.values[j];
      }
    }
    lags[static_cast<std::size_t>(k + static_cast<long>(p) - 1)] = sum;
  }
  return lags;
}

DirectSbd direct_sbd(const fcs::TimeSeries& x, const fcs::TimeSeries& y) {
  const std::size_t p = x.size();
  double nx = 0.0, ny = 0.0;
  for (double v : x.values) nx += v * v;
  for (double v : y.values) ny += v * v;
  nx = std::sqrt(nx);
  ny = std::sqrt(ny);
  if (nx == 0.0 || ny == 0.0) return {1.0, 0};

  const std::vector<double> lags = direct_lag_products(x, y);
  double best = -std::numeric_limits<double>::infinity();
  std::size_t best_index = 0;
  for (std::size_t i = 0; i < lags.size(); ++i) {
    const double ncc = lags[i] / (nx * ny);
    if (ncc > best) {
      best = ncc;
      best_index = i;
    }
  }
  return {std::clamp(1.0 - best, 0.0, 2.0),
          static_cast<long>(best_index) - static_cast<long>(p) + 1};
}

std::pair<double, std::vector<double>> dominant_eigenpair(const fcs::Matrix& m) {
  const auto n = static_cast<Eigen::Index>(m.rows());
  Eigen::MatrixXd em(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      em(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(em);
  const Eigen::Index last = n - 1;  // eigenvalues sorted ascending
  std::vector<double> v(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    v[static_cast<std::size_t>(i)] = solver.eigenvectors()(i, last);
  }
  return {solver.eigenvalues()(last), v};
}

fcs::PairCounts brute_force_pair_counts(const fcs::CrispPartition& u,
                                        const fcs::CrispPartition& q) {
  fcs::PairCounts pc;
  const std::size_t n = u.labels.size();
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      const bool together_u = u.labels[s] == u.labels[t];
      const bool together_q = q.labels[s] == q.labels[t];
      if (together_u && together_q) {
        ++pc.a;
      } else if (!together_u && together_q) {
        ++pc.b;
      } else if (together_u && !together_q) {
        ++pc.c;
      } else {
        ++pc.d;
      }
    }
  }
  return pc;
}

double vi_entropy_identity(const fcs::ContingencyTable& table) {
  const double n = static_cast<double>(table.total);
  auto entropy = [n](const std::vector<std::uint64_t>& sums) {
    double h = 0.0;
    for (auto s : sums) {
      if (s == 0) continue;
      const double p = static_cast<double>(s) / n;
      h -= p * std::log(p);
    }
    return h;
  };
  double mi = 0.0;
  for (std::size_t i = 0; i < table.rows; ++i) {
    for (std::size_t j = 0; j < table.cols; ++j) {
      const auto nij = table.at(i, j);
      if (nij == 0) continue;
      const double pij = static_cast<double>(nij) / n;
      const double pi = static_cast<double>(table.row_sums[i]) / n;
      const double pj = static_cast<double>(table.col_sums[j]) / n;
      mi += pij * std::log(pij / (pi * pj));
    }
  }
  return entropy(table.row_sums) + entropy(table.col_sums) - 2.0 * mi;
}

double ari_binomial_form(const fcs::ContingencyTable& table) {
  auto choose2 = [](std::uint64_t v) {
    return static_cast<double>(v) * (static_cast<double>(v) - 1.0) / 2.0;
  };
  double index = 0.0;
  for (auto nij : table.counts) index += choose2(nij);
  double rows = 0.0, cols = 0.0;
  for (auto s : table.row_sums) rows += choose2(s);
  for (auto s : table.col_sums) cols += choose2(s);
  const double pairs = choose2(table.total);
  const double expected = rows * cols / pairs;
  const double max_index = 0.5 * (rows + cols);
  if (max_index == expected) {
    // Degenerate correction; identical partitions score 1.
    double off_diagonal_mass = rows + cols - 2.0 * index;
    return off_diagonal_mass == 0.0 ? 1.0 : 0.0;
  }
  return (index - expected) / (max_index - expected);
}

double wilcoxon_exact_two_sided_p(const std::vector<double>& differences) {
  std::vector<double> abs_diffs;
  for (double d : differences) {
    if (d != 0.0) abs_diffs.push_back(std::abs(d));
  }
  const std::size_t n = abs_diffs.size();
  if (n == 0) return 1.0;

  // Average ranks of the observed |differences|.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return abs_diffs[a] < abs_diffs[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && abs_diffs[order[j + 1]] == abs_diffs[order[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }

  double observed = 0.0;
  std::size_t idx = 0;
  for (double d : differences) {
    if (d == 0.0) continue;
    if (d > 0.0) observed += ranks[idx];
    ++idx;
  }

  const double mu = static_cast<double>(n) * (static_cast<double>(n) + 1.0) / 4.0;
  const double threshold = std::abs(observed - mu);

  std::uint64_t hits = 0;
  const std::uint64_t patterns = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    double w = 0.0;
    for (std::size_t b = 0; b < n; ++b) {
      if (mask & (std::uint64_t{1} << b)) w += ranks[b];
    }
    if (std::abs(w - mu) >= threshold - 1e-12) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(patterns);
}

double chi2_tail_df1(double x) { return std::erfc(std::sqrt(x / 2.0)); }

double chi2_tail_df2(double x) { return std::exp(-x / 2.0); }

double chi2_tail_df4(double x) { return std::exp(-x / 2.0) * (1.0 + x / 2.0); }

}  // namespace oracles
