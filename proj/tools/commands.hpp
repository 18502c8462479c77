#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fcstool {

struct ClusterOptions {
  std::string input;
  std::string merge;
  std::string algorithm = "kshape";
  std::string output = "run.json";
  std::size_t clusters = 2;
  double m = 2.0;
  std::uint64_t seed = 0;
  std::size_t max_iter = 100;
  double tol = 1e-6;
  std::string init = "sample-prototypes";
  std::string distance;  // empty keeps the algorithm's default norm
  bool sbd_unsquared = false;
};

struct BenchmarkOptions {
  std::string data_dir;
  std::vector<std::string> algorithms{"kshape", "fcs+", "fcs++"};
  std::size_t runs = 10;
  std::uint64_t seed = 0;  // run r uses seed + r for every algorithm
  bool clusters_from_labels = true;
  std::size_t clusters = 0;  // override when nonzero
  double m = 2.0;
  std::size_t max_iter = 100;
  double tol = 1e-6;
  std::string init = "sample-prototypes";
  bool sbd_unsquared = false;
  std::string output;
  bool summary = false;
  std::size_t jobs = 1;
};

struct ValidateOptions {
  std::string labels;
  std::string partition;
  std::vector<std::string> indices{"ri", "ari", "nmi", "vi"};
};

struct StatsOptions {
  std::string results;
  std::string test = "wilcoxon";
  std::string metric = "ri";
  double alpha = 0.05;
};

struct PlotOptions {
  std::string kind = "scatter";
  std::string results;
  std::string input;  // RunArtifact for --kind trace
  std::string metric = "ri";
  std::string x_algorithm;
  std::string y_algorithm;
  std::string output = "plot";
};

// Each command either completes (exit 0) or throws: fcs::ParseError for
// malformed inputs (exit 3), any other fcs::Error for configuration problems
// (exit 2).
void run_cluster(const ClusterOptions& options);
void run_benchmark(const BenchmarkOptions& options);
void run_validate(const ValidateOptions& options);
void run_stats(const StatsOptions& options);
void run_plot(const PlotOptions& options);

}  // namespace fcstool
