#include <iostream>

#include <CLI11.hpp>

#include "fcshape/errors.hpp"

#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Shape-based time-series clustering (SBD, k-Shape, FCS+, FCS++)"};
  app.require_subcommand(1);

  fcstool::ClusterOptions cluster;
  CLI::App* cmd_cluster = app.add_subcommand("cluster", "Run one clustering and save a run artifact");
  cmd_cluster->add_option("--input", cluster.input, "UCR-format input file")->required();
  cmd_cluster->add_option("--merge", cluster.merge, "Second UCR file to concatenate");
  cmd_cluster->add_option("--algorithm", cluster.algorithm, "hcm|fcm|kshape|fcs+|fcs++");
  cmd_cluster->add_option("--clusters", cluster.clusters, "Cluster count c")->required();
  cmd_cluster->add_option("--m", cluster.m, "Fuzzifier (default 2)");
  cmd_cluster->add_option("--seed", cluster.seed, "RNG seed");
  cmd_cluster->add_option("--max-iter", cluster.max_iter, "Iteration limit (default 100)");
  cmd_cluster->add_option("--tol", cluster.tol, "Convergence tolerance (default 1e-6)");
  cmd_cluster->add_option("--init", cluster.init, "sample-prototypes|random-assignment");
  cmd_cluster->add_option("--distance", cluster.distance, "euclidean|sbd (hcm/fcm only)");
  cmd_cluster->add_flag("--sbd-unsquared", cluster.sbd_unsquared,
                        "Treat SBD as an unsquared distance in the membership update");
  cmd_cluster->add_option("--output", cluster.output, "Artifact path (default run.json)");

  fcstool::BenchmarkOptions benchmark;
  CLI::App* cmd_benchmark =
      app.add_subcommand("benchmark", "Sweep datasets x algorithms x seeded runs to a CSV");
  cmd_benchmark->add_option("--data-dir", benchmark.data_dir, "Directory of UCR files")
      ->envname("FCSHAPE_DATA_DIR");
  cmd_benchmark->add_option("--algorithms", benchmark.algorithms, "Algorithms to run")
      ->delimiter(',');
  cmd_benchmark->add_option("--runs", benchmark.runs, "Runs per pair (default 10)");
  cmd_benchmark->add_option("--seed", benchmark.seed, "Seed base; run r uses base+r");
  cmd_benchmark->add_flag("--clusters-from-labels", benchmark.clusters_from_labels,
                          "Take c from the ground-truth label count (default)");
  cmd_benchmark->add_option("--clusters", benchmark.clusters, "Fixed c overriding the labels");
  cmd_benchmark->add_option("--m", benchmark.m, "Fuzzifier (default 2)");
  cmd_benchmark->add_option("--max-iter", benchmark.max_iter, "Iteration limit");
  cmd_benchmark->add_option("--tol", benchmark.tol, "Convergence tolerance");
  cmd_benchmark->add_option("--init", benchmark.init, "Initialization strategy");
  cmd_benchmark->add_flag("--sbd-unsquared", benchmark.sbd_unsquared,
                          "Unsquared membership exponent convention");
  cmd_benchmark->add_option("--output", benchmark.output, "Results CSV path")->required();
  cmd_benchmark->add_flag("--summary", benchmark.summary, "Append per-algorithm grand averages");
  cmd_benchmark->add_option("--jobs", benchmark.jobs, "Concurrent runs (default 1)");

  fcstool::ValidateOptions validate;
  CLI::App* cmd_validate =
      app.add_subcommand("validate", "Score a partition against ground-truth labels");
  cmd_validate->add_option("--labels", validate.labels, "Ground-truth label file")->required();
  cmd_validate->add_option("--partition", validate.partition, "Run artifact or label file")
      ->required();
  cmd_validate->add_option("--indices", validate.indices, "Subset of ri,ari,nmi,vi")
      ->delimiter(',');

  fcstool::StatsOptions stats;
  CLI::App* cmd_stats =
      app.add_subcommand("stats", "Significance tests over a benchmark results CSV");
  cmd_stats->add_option("--results", stats.results, "Results CSV from benchmark")->required();
  cmd_stats->add_option("--test", stats.test, "wilcoxon|friedman");
  cmd_stats->add_option("--metric", stats.metric, "ri|ari|nmi|vi");
  cmd_stats->add_option("--alpha", stats.alpha, "Significance level (default 0.05)");

  fcstool::PlotOptions plot;
  CLI::App* cmd_plot = app.add_subcommand("plot", "Emit plot data (TSV + SVG)");
  cmd_plot->add_option("--kind", plot.kind, "scatter|trace");
  cmd_plot->add_option("--results", plot.results, "Results CSV (scatter)");
  cmd_plot->add_option("--input", plot.input, "Run artifact (trace)");
  cmd_plot->add_option("--metric", plot.metric, "ri|ari|nmi|vi (scatter)");
  cmd_plot->add_option("--x", plot.x_algorithm, "Algorithm on the x axis");
  cmd_plot->add_option("--y", plot.y_algorithm, "Algorithm on the y axis");
  cmd_plot->add_option("--output", plot.output, "Output base path (default plot)");

  try {
    app.parse(argc, argv);
    if (*cmd_cluster) fcstool::run_cluster(cluster);
    if (*cmd_benchmark) fcstool::run_benchmark(benchmark);
    if (*cmd_validate) fcstool::run_validate(validate);
    if (*cmd_stats) fcstool::run_stats(stats);
    if (*cmd_plot) fcstool::run_plot(plot);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const fcs::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const fcs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
