#include "fcshape/prototypes.hpp"

#include <cmath>
#include <string>

#include "fcshape/errors.hpp"
#include "fcshape/rng.hpp"
#include "fcshape/sbd.hpp"

namespace fcs {

namespace {

constexpr double kAngleTolerance = 1e-10;
// Relative residual ||Mv - lambda v|| / lambda at which an iterate counts as
// converged; one digit tighter than the 1e-8 * ||M||_F the callers rely on.
constexpr double kResidualTolerance = 1e-9;
constexpr std::size_t kMaxPowerIterations = 10000;

void center_inplace(std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m += x;
  m /= static_cast<double>(v.size());
  for (double& x : v) x -= m;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const std::vector<double>& v) { return std::sqrt(dot(v, v)); }

// w = M v without forming M: center, project through the member stack,
// center again (Q is symmetric).
std::vector<double> apply_operator(const std::vector<TimeSeries>& members,
                                   std::vector<double> v) {
  center_inplace(v);
  std::vector<double> out(v.size(), 0.0);
  for (const auto& member : members) {
    double coeff = 0.0;
    for (std::size_t t = 0; t < v.size(); ++t) coeff += member.values[t] * v[t];
    for (std::size_t t = 0; t < v.size(); ++t) out[t] += coeff * member.values[t];
  }
  center_inplace(out);
  return out;
}

}  // namespace

TimeSeries mean_prototype(const std::vector<TimeSeries>& members,
                          const std::vector<double>& weights) {
  if (members.size() != weights.size()) {
    throw DimensionError("mean prototype: " + std::to_string(members.size()) +
                         " members but " + std::to_string(weights.size()) + " weights");
  }
  if (members.empty()) throw EmptyClusterError("mean prototype of an empty cluster");

  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw ParameterError("mean prototype weights must be nonnegative");
    total += w;
  }
  if (total <= 0.0) throw DegenerateWeightsError("mean prototype weights sum to zero");

  const std::size_t p = members[0].size();
  TimeSeries out = zero_series(p);
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (members[k].size() != p) {
      throw DimensionError("mean prototype members must share one length");
    }
    for (std::size_t t = 0; t < p; ++t) out.values[t] += weights[k] * members[k].values[t];
  }
  for (double& v : out.values) v /= total;
  return out;
}

std::vector<TimeSeries> align_members(const std::vector<TimeSeries>& members,
                                      const TimeSeries& reference) {
  if (all_zero(reference)) return members;
  std::vector<TimeSeries> aligned;
  aligned.reserve(members.size());
  for (const auto& member : members) {
    aligned.push_back(sbd(reference, member).aligned);
  }
  return aligned;
}

RayleighProblem build_rayleigh_problem(const std::vector<TimeSeries>& aligned_members) {
  if (aligned_members.empty()) {
    throw EmptyClusterError("Rayleigh problem over an empty cluster");
  }
  const std::size_t p = aligned_members[0].size();

  RayleighProblem problem;
  problem.S = Matrix(p, p);
  for (const auto& member : aligned_members) {
    for (std::size_t a = 0; a < p; ++a) {
      const double va = member.values[a];
      for (std::size_t b = 0; b < p; ++b) problem.S(a, b) += va * member.values[b];
    }
  }

  problem.Q = Matrix(p, p, -1.0 / static_cast<double>(p));
  for (std::size_t i = 0; i < p; ++i) problem.Q(i, i) += 1.0;

  // M = Q S Q expanded so only row/column means of S are needed.
  std::vector<double> row_mean(p, 0.0), col_mean(p, 0.0);
  double total = 0.0;
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = 0; b < p; ++b) {
      row_mean[a] += problem.S(a, b);
      col_mean[b] += problem.S(a, b);
      total += problem.S(a, b);
    }
  }
  for (std::size_t i = 0; i < p; ++i) {
    row_mean[i] /= static_cast<double>(p);
    col_mean[i] /= static_cast<double>(p);
  }
  total /= static_cast<double>(p) * static_cast<double>(p);

  problem.M = Matrix(p, p);
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = 0; b < p; ++b) {
      problem.M(a, b) = problem.S(a, b) - col_mean[b] - row_mean[a] + total;
    }
  }
  return problem;
}

double rayleigh_quotient(const std::vector<TimeSeries>& aligned_members,
                         const std::vector<double>& v) {
  const double vv = dot(v, v);
  if (vv == 0.0) return 0.0;
  return dot(v, apply_operator(aligned_members, v)) / vv;
}

ShapeExtraction shape_extract_details(const std::vector<TimeSeries>& members,
                                      const TimeSeries& reference) {
  if (members.empty()) {
    throw EmptyClusterError("shape extraction over an empty cluster");
  }
  const std::size_t p = members[0].size();
  if (reference.size() != p) {
    throw DimensionError("reference length " + std::to_string(reference.size()) +
                         " does not match member length " + std::to_string(p));
  }

  const bool zero_reference = all_zero(reference);
  const std::vector<TimeSeries> aligned = align_members(members, reference);

  ShapeExtraction result;

  // Fixed-seed start keeps the extraction a pure function of its inputs.
  // The all-ones direction is in the null space of M, so a spread-out
  // pseudo-random start is used instead.
  Rng rng(0x9e3779b97f4a7c15ull);
  std::vector<double> v(p);
  for (double& x : v) x = rng.uniform() - 0.5;
  const double n0 = norm(v);
  for (double& x : v) x /= n0;

  double eigenvalue = 0.0;
  std::size_t iterations = 0;
  for (; iterations < kMaxPowerIterations; ++iterations) {
    std::vector<double> w = apply_operator(aligned, v);
    const double wn = norm(w);
    if (wn <= 1e-300) {
      // Operator annihilates the iterate: the cluster carries no shape
      // information (e.g. all members zero).
      result.centroid = zero_series(p);
      result.eigenvector = std::move(w);
      result.eigenvalue = 0.0;
      result.power_iterations = iterations + 1;
      return result;
    }
    const double lambda = dot(v, w);
    double residual_sq = 0.0;
    for (std::size_t t = 0; t < p; ++t) {
      const double r = w[t] - lambda * v[t];
      residual_sq += r * r;
    }
    for (double& x : w) x /= wn;
    const double alignment = std::abs(dot(w, v));
    v = std::move(w);
    eigenvalue = lambda;
    if (1.0 - alignment <= kAngleTolerance &&
        residual_sq <= kResidualTolerance * kResidualTolerance * lambda * lambda) {
      ++iterations;
      break;
    }
  }

  // Pair the reported eigenvalue with the returned vector exactly.
  eigenvalue = dot(v, apply_operator(aligned, v));

  // Resolve the sign ambiguity of the eigenvector.
  TimeSeries centroid(v);
  TimeSeries plus = z_normalize(centroid);
  TimeSeries minus = plus;
  for (double& x : minus.values) x = -x;

  bool flip;
  if (!zero_reference) {
    flip = sbd(reference, minus).dist < sbd(reference, plus).dist;
  } else {
    double corr = 0.0;
    for (std::size_t t = 0; t < p; ++t) corr += v[t] * aligned[0].values[t];
    flip = corr < 0.0;
  }
  if (flip) {
    for (double& x : v) x = -x;
  }

  result.centroid = flip ? std::move(minus) : std::move(plus);
  result.eigenvector = std::move(v);
  result.eigenvalue = eigenvalue;
  result.power_iterations = iterations;
  return result;
}

TimeSeries shape_extract(const std::vector<TimeSeries>& members,
                         const TimeSeries& reference) {
  return shape_extract_details(members, reference).centroid;
}

}  // namespace fcs
