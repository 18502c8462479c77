#include "fcshape/validity.hpp"

#include <cmath>
#include <string>

#include "fcshape/errors.hpp"

namespace fcs {

namespace {

double entropy_of(const std::vector<std::uint64_t>& sums, std::uint64_t n) {
  double h = 0.0;
  for (std::uint64_t s : sums) {
    if (s == 0) continue;
    const double p = static_cast<double>(s) / static_cast<double>(n);
    h -= p * std::log(p);
  }
  return h;
}

double mutual_information(const ContingencyTable& t) {
  const double n = static_cast<double>(t.total);
  double mi = 0.0;
  for (std::size_t i = 0; i < t.rows; ++i) {
    for (std::size_t j = 0; j < t.cols; ++j) {
      const std::uint64_t nij = t.at(i, j);
      if (nij == 0) continue;
      const double pij = static_cast<double>(nij) / n;
      const double pi = static_cast<double>(t.row_sums[i]) / n;
      const double pj = static_cast<double>(t.col_sums[j]) / n;
      mi += pij * std::log(pij / (pi * pj));
    }
  }
  return mi;
}

}  // namespace

ContingencyTable contingency(const CrispPartition& u, const CrispPartition& q) {
  if (u.labels.size() != q.labels.size()) {
    throw DimensionError("contingency table needs equal object counts, got " +
                         std::to_string(u.labels.size()) + " and " +
                         std::to_string(q.labels.size()));
  }
  ContingencyTable t;
  t.rows = static_cast<std::size_t>(u.clusters);
  t.cols = static_cast<std::size_t>(q.clusters);
  t.counts.assign(t.rows * t.cols, 0);
  t.row_sums.assign(t.rows, 0);
  t.col_sums.assign(t.cols, 0);
  t.total = u.labels.size();
  for (std::size_t k = 0; k < u.labels.size(); ++k) {
    const auto i = static_cast<std::size_t>(u.labels[k] - 1);
    const auto j = static_cast<std::size_t>(q.labels[k] - 1);
    ++t.counts[i * t.cols + j];
    ++t.row_sums[i];
    ++t.col_sums[j];
  }
  return t;
}

PairCounts pair_counts(const ContingencyTable& t) {
  std::uint64_t sum_sq = 0;      // sum of n_ij^2
  std::uint64_t sum_choose = 0;  // sum of n_ij (n_ij - 1)
  for (std::uint64_t nij : t.counts) {
    sum_sq += nij * nij;
    sum_choose += nij * (nij - (nij > 0 ? 1 : 0));
  }
  std::uint64_t row_sq = 0, col_sq = 0;
  for (std::uint64_t s : t.row_sums) row_sq += s * s;
  for (std::uint64_t s : t.col_sums) col_sq += s * s;
  const std::uint64_t n = t.total;

  PairCounts pc;
  pc.a = sum_choose / 2;
  pc.b = (col_sq - sum_sq) / 2;
  pc.c = (row_sq - sum_sq) / 2;
  pc.d = (n * n + sum_sq - row_sq - col_sq) / 2;
  return pc;
}

double rand_index(const PairCounts& pc) {
  const std::uint64_t agreements = pc.a + pc.d;
  const std::uint64_t disagreements = pc.b + pc.c;
  if (agreements + disagreements == 0) return 1.0;
  return static_cast<double>(agreements) /
         static_cast<double>(agreements + disagreements);
}

double adjusted_rand(const PairCounts& pc) {
  const double a = static_cast<double>(pc.a);
  const double ab = static_cast<double>(pc.a + pc.b);
  const double ac = static_cast<double>(pc.a + pc.c);
  const double m = static_cast<double>(pc.total_pairs());
  const bool identical = pc.b == 0 && pc.c == 0;
  if (m == 0.0) return 1.0;

  const double expected = ac * ab / m;
  const double denominator = 0.5 * (ac + ab) - expected;
  if (denominator == 0.0) return identical ? 1.0 : 0.0;
  return (a - expected) / denominator;
}

double variation_of_information(const ContingencyTable& t) {
  const double n = static_cast<double>(t.total);
  double joint = 0.0;
  for (std::uint64_t nij : t.counts) {
    if (nij == 0) continue;
    const double p = static_cast<double>(nij) / n;
    joint -= p * std::log(p);
  }
  return joint - mutual_information(t);
}

double nmi_max(const ContingencyTable& t) {
  const double hu = entropy_of(t.row_sums, t.total);
  const double hq = entropy_of(t.col_sums, t.total);
  const double h = std::max(hu, hq);
  if (h == 0.0) return 1.0;  // two single-cluster partitions are identical
  return mutual_information(t) / h;
}

CviReport evaluate_cvis(const CrispPartition& u, const CrispPartition& q) {
  const ContingencyTable t = contingency(u, q);
  const PairCounts pc = pair_counts(t);
  CviReport r;
  r.ri = rand_index(pc);
  r.ari = adjusted_rand(pc);
  r.nmi = nmi_max(t);
  r.vi = variation_of_information(t);
  return r;
}

}  // namespace fcs
