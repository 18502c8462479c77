#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "fcshape/clusterers.hpp"
#include "fcshape/dataset.hpp"
#include "fcshape/errors.hpp"
#include "fcshape/significance.hpp"
#include "fcshape/validity.hpp"

#include "artifact.hpp"
#include "datasets.hpp"
#include "results.hpp"
#include "svg.hpp"

namespace fcstool {

namespace {

const std::vector<std::string> kAlgorithms = {"hcm", "fcm", "kshape", "fcs+", "fcs++"};

fcs::InitKind parse_init(const std::string& name) {
  if (name == "sample-prototypes") return fcs::InitKind::sample_prototypes;
  if (name == "random-assignment") return fcs::InitKind::random_assignment;
  throw fcs::ConfigError("unknown init strategy '" + name + "'");
}

fcs::DistanceKind parse_distance(const std::string& name) {
  if (name == "sbd") return fcs::DistanceKind::sbd;
  if (name == "euclidean") return fcs::DistanceKind::euclidean;
  throw fcs::ConfigError("unknown distance '" + name + "'");
}

void check_algorithm(const std::string& name) {
  if (std::find(kAlgorithms.begin(), kAlgorithms.end(), name) == kAlgorithms.end()) {
    throw fcs::ConfigError("unknown algorithm '" + name +
                           "' (expected hcm, fcm, kshape, fcs+ or fcs++)");
  }
}

fcs::ClusterResult dispatch(const std::string& algorithm, const fcs::Dataset& data,
                            fcs::ClusterConfig cfg, const std::string& distance_override) {
  check_algorithm(algorithm);
  const bool sbd_family = algorithm == "kshape" || algorithm == "fcs+" || algorithm == "fcs++";
  if (!distance_override.empty()) {
    const fcs::DistanceKind kind = parse_distance(distance_override);
    if (sbd_family && kind != fcs::DistanceKind::sbd) {
      throw fcs::ConfigError("algorithm '" + algorithm + "' always uses the SBD norm");
    }
    cfg.distance = kind;
  } else {
    cfg.distance = sbd_family ? fcs::DistanceKind::sbd : fcs::DistanceKind::euclidean;
  }

  if (algorithm == "hcm") {
    cfg.fuzzifier = 1.0;
    return fcs::fcm(data, cfg);
  }
  if (algorithm == "fcm") return fcs::fcm(data, cfg);
  if (algorithm == "kshape") return fcs::kshape(data, cfg);
  if (algorithm == "fcs+") return fcs::fcs_plus(data, cfg);
  return fcs::fcs_plus_plus(data, cfg);
}

fcs::Dataset load_input(const std::string& input, const std::string& merge) {
  return merge.empty() ? fcs::load_ucr(input) : fcs::load_ucr(input, merge);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fcs::ParseError(path, 0, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<int> parse_label_text(const std::string& text, const std::string& origin) {
  std::vector<long long> raw;
  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    for (char& ch : line) {
      if (ch == ',' || ch == '\t' || ch == '\r') ch = ' ';
    }
    std::istringstream fields(line);
    std::string token;
    while (fields >> token) {
      long long value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw fcs::ParseError(origin, line_no, "non-integer label '" + token + "'");
      }
      raw.push_back(value);
    }
  }
  if (raw.empty()) throw fcs::ParseError(origin, 0, "label file is empty");
  return fcs::remap_labels(raw);
}

std::vector<int> read_label_file(const std::string& path) {
  return parse_label_text(slurp(path), path);
}

fcs::CrispPartition partition_from_labels(std::vector<int> labels) {
  fcs::CrispPartition p;
  p.clusters = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end());
  p.labels = std::move(labels);
  return p;
}

// A partition argument is a run artifact (JSON) or a plain label list.
fcs::CrispPartition read_partition(const std::string& path) {
  const std::string text = slurp(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    const RunArtifact artifact = artifact_from_json(text, path);
    std::vector<long long> raw(artifact.labels.begin(), artifact.labels.end());
    return partition_from_labels(fcs::remap_labels(raw));
  }
  return partition_from_labels(parse_label_text(text, path));
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw fcs::Error("cannot write file " + path);
  out << content;
}

double metric_of(const BenchmarkRecord& r, const std::string& metric) {
  if (metric == "ri") return r.ri;
  if (metric == "ari") return r.ari;
  if (metric == "nmi") return r.nmi;
  if (metric == "vi") return r.vi;
  throw fcs::ConfigError("unknown metric '" + metric + "' (expected ri, ari, nmi or vi)");
}

// Per-dataset mean of one metric for every algorithm present in the records.
// Datasets missing any algorithm are dropped with a warning.
struct ScoreTable {
  std::vector<std::string> algorithms;  // first-appearance order
  std::vector<std::string> datasets;    // sorted
  fcs::Matrix means;                    // datasets x algorithms
};

ScoreTable score_table(const std::vector<BenchmarkRecord>& records, const std::string& metric) {
  ScoreTable table;
  std::map<std::string, std::size_t> algo_index;
  for (const auto& r : records) {
    if (algo_index.emplace(r.algorithm, table.algorithms.size()).second) {
      table.algorithms.push_back(r.algorithm);
    }
  }

  std::map<std::string, std::map<std::string, std::pair<double, std::size_t>>> sums;
  for (const auto& r : records) {
    auto& cell = sums[r.dataset][r.algorithm];
    cell.first += metric_of(r, metric);
    ++cell.second;
  }
  for (const auto& [dataset, per_algo] : sums) {
    if (per_algo.size() == table.algorithms.size()) {
      table.datasets.push_back(dataset);
    } else {
      std::cerr << "warning: dataset '" << dataset
                << "' lacks results for some algorithms, skipping\n";
    }
  }

  table.means = fcs::Matrix(table.datasets.size(), table.algorithms.size());
  for (std::size_t d = 0; d < table.datasets.size(); ++d) {
    const auto& per_algo = sums.at(table.datasets[d]);
    for (std::size_t a = 0; a < table.algorithms.size(); ++a) {
      const auto& cell = per_algo.at(table.algorithms[a]);
      table.means(d, a) = cell.first / static_cast<double>(cell.second);
    }
  }
  return table;
}

}  // namespace

void run_cluster(const ClusterOptions& options) {
  check_algorithm(options.algorithm);
  const fcs::Dataset data = load_input(options.input, options.merge);

  fcs::ClusterConfig cfg;
  cfg.clusters = options.clusters;
  cfg.fuzzifier = options.m;
  cfg.max_iterations = options.max_iter;
  cfg.epsilon = options.tol;
  cfg.seed = options.seed;
  cfg.init = parse_init(options.init);
  cfg.sbd_unsquared = options.sbd_unsquared;

  const fcs::ClusterResult result = dispatch(options.algorithm, data, cfg, options.distance);

  // The artifact echoes the effective config, including the distance the
  // dispatch resolved.
  fcs::ClusterConfig echoed = cfg;
  echoed.distance = options.distance.empty()
                        ? (options.algorithm == "hcm" || options.algorithm == "fcm"
                               ? fcs::DistanceKind::euclidean
                               : fcs::DistanceKind::sbd)
                        : parse_distance(options.distance);
  if (options.algorithm == "hcm") echoed.fuzzifier = 1.0;

  save_artifact(make_artifact(options.algorithm, data.name, echoed, result, data.size(),
                              data.length()),
                options.output);

  std::printf("algorithm=%s dataset=%s n=%zu p=%zu c=%zu iterations=%zu objective=%.6f "
              "empty_cluster_events=%zu elapsed=%.3fs artifact=%s\n",
              options.algorithm.c_str(), data.name.c_str(), data.size(), data.length(),
              cfg.clusters, result.iterations,
              result.objective_trace.empty() ? 0.0 : result.objective_trace.back(),
              result.empty_cluster_events, result.elapsed_seconds, options.output.c_str());
}

void run_benchmark(const BenchmarkOptions& options) {
  if (options.data_dir.empty()) {
    throw fcs::ConfigError("no data directory (use --data-dir or FCSHAPE_DATA_DIR)");
  }
  if (options.output.empty()) throw fcs::ConfigError("benchmark needs --output");
  if (options.runs == 0) throw fcs::ConfigError("--runs must be positive");
  if (options.algorithms.empty()) throw fcs::ConfigError("no algorithms selected");
  for (const auto& a : options.algorithms) check_algorithm(a);

  const std::vector<DatasetSource> sources = discover_datasets(options.data_dir);
  if (sources.empty()) {
    throw fcs::ConfigError("no dataset files found in " + options.data_dir);
  }

  struct Loaded {
    fcs::Dataset data;
    std::size_t clusters;
  };
  std::vector<Loaded> loaded;
  std::vector<std::string> manifest;
  for (const auto& source : sources) {
    try {
      fcs::Dataset data = source.merge_path.empty()
                              ? fcs::load_ucr(source.path)
                              : fcs::load_ucr(source.path, source.merge_path);
      data.name = source.name;
      const std::size_t c = options.clusters_from_labels && options.clusters == 0
                                ? data.label_count()
                                : options.clusters;
      if (!data.labels) {
        manifest.push_back("skipped," + source.name + ",no ground-truth labels");
        continue;
      }
      if (c < 2 || c >= data.size()) {
        manifest.push_back("skipped," + source.name + ",cluster count " + std::to_string(c) +
                           " unusable for n=" + std::to_string(data.size()));
        continue;
      }
      manifest.push_back("ok," + source.name + ",n=" + std::to_string(data.size()) +
                         " p=" + std::to_string(data.length()) + " c=" + std::to_string(c));
      loaded.push_back({std::move(data), c});
    } catch (const fcs::Error& e) {
      std::cerr << "warning: skipping dataset '" << source.name << "': " << e.what() << "\n";
      manifest.push_back(std::string("skipped,") + source.name + "," + e.what());
    }
  }
  if (loaded.empty()) throw fcs::ConfigError("no usable datasets");

  struct Task {
    std::size_t dataset;
    std::size_t algorithm;
    std::size_t run;  // 1-based
  };
  std::vector<Task> tasks;
  for (std::size_t d = 0; d < loaded.size(); ++d) {
    for (std::size_t a = 0; a < options.algorithms.size(); ++a) {
      for (std::size_t r = 1; r <= options.runs; ++r) tasks.push_back({d, a, r});
    }
  }

  std::vector<BenchmarkRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::string failure;
  std::mutex failure_mutex;

  auto worker = [&]() {
    for (;;) {
      const std::size_t index = next.fetch_add(1);
      if (index >= tasks.size() || failed.load()) return;
      const Task& task = tasks[index];
      const Loaded& entry = loaded[task.dataset];
      try {
        fcs::ClusterConfig cfg;
        cfg.clusters = entry.clusters;
        cfg.fuzzifier = options.m;
        cfg.max_iterations = options.max_iter;
        cfg.epsilon = options.tol;
        cfg.seed = options.seed + task.run;
        cfg.init = parse_init(options.init);
        cfg.sbd_unsquared = options.sbd_unsquared;

        const std::string& algorithm = options.algorithms[task.algorithm];
        const fcs::ClusterResult result = dispatch(algorithm, entry.data, cfg, "");

        fcs::CrispPartition truth;
        truth.labels = *entry.data.labels;
        truth.clusters = static_cast<int>(entry.data.label_count());
        const fcs::CviReport report = fcs::evaluate_cvis(result.crisp, truth);

        BenchmarkRecord& record = records[index];
        record.dataset = entry.data.name;
        record.algorithm = algorithm;
        record.run = task.run;
        record.seed = cfg.seed;
        record.ri = report.ri;
        record.ari = report.ari;
        record.nmi = report.nmi;
        record.vi = report.vi;
        record.iterations = result.iterations;
        record.cpu_seconds = result.elapsed_seconds;
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        failed.store(true);
        if (failure.empty()) failure = e.what();
        return;
      }
    }
  };

  const std::size_t thread_count = std::max<std::size_t>(1, options.jobs);
  if (thread_count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < thread_count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failed.load()) throw fcs::Error("benchmark run failed: " + failure);

  std::ofstream out(options.output, std::ios::binary);
  if (!out) throw fcs::Error("cannot write results file " + options.output);
  write_results_csv(out, records);

  const std::vector<GrandAverage> averages = grand_averages(records);
  if (options.summary) {
    append_summary(out, averages);
    std::printf("%-12s %10s %10s %10s %10s  (%zu records each)\n", "algorithm", "mean RI",
                "mean ARI", "mean NMI", "mean VI",
                averages.empty() ? std::size_t{0} : averages[0].records);
    for (const auto& g : averages) {
      std::printf("%-12s %10.3f %10.3f %10.3f %10.3f\n", g.algorithm.c_str(), g.ri, g.ari,
                  g.nmi, g.vi);
    }
  }
  out.close();

  std::ofstream mf(options.output + ".manifest", std::ios::binary);
  if (!mf) throw fcs::Error("cannot write manifest file");
  mf << "status,dataset,detail\n";
  for (const auto& line : manifest) mf << line << "\n";

  std::printf("wrote %zu records for %zu dataset(s) x %zu algorithm(s) x %zu run(s) to %s\n",
              records.size(), loaded.size(), options.algorithms.size(), options.runs,
              options.output.c_str());
}

void run_validate(const ValidateOptions& options) {
  const fcs::CrispPartition truth = partition_from_labels(read_label_file(options.labels));
  const fcs::CrispPartition candidate = read_partition(options.partition);
  if (truth.labels.size() != candidate.labels.size()) {
    throw fcs::ParseError(options.partition, 0,
                          "partition has " + std::to_string(candidate.labels.size()) +
                              " labels but ground truth has " +
                              std::to_string(truth.labels.size()));
  }

  const fcs::CviReport report = fcs::evaluate_cvis(candidate, truth);
  for (const auto& index : options.indices) {
    if (index == "ri") {
      std::printf("RI %.6f\n", report.ri);
    } else if (index == "ari") {
      std::printf("ARI %.6f\n", report.ari);
    } else if (index == "nmi") {
      std::printf("NMI %.6f\n", report.nmi);
    } else if (index == "vi") {
      std::printf("VI %.6f\n", report.vi);
    } else {
      throw fcs::ConfigError("unknown index '" + index + "'");
    }
  }
}

void run_stats(const StatsOptions& options) {
  metric_of(BenchmarkRecord{}, options.metric);  // validates the metric name
  const std::vector<BenchmarkRecord> records = read_results_csv(options.results);
  const ScoreTable table = score_table(records, options.metric);
  if (table.algorithms.size() < 2) {
    throw fcs::ConfigError("statistical tests need at least 2 algorithms in the results");
  }
  if (table.datasets.size() < 2) {
    throw fcs::ConfigError("statistical tests need at least 2 datasets with full coverage");
  }
  const bool min_optimal = options.metric == "vi";

  if (options.test == "wilcoxon") {
    std::printf("test=wilcoxon metric=%s datasets=%zu alpha=%g%s\n", options.metric.c_str(),
                table.datasets.size(), options.alpha,
                min_optimal ? " (min-optimal metric: lower scores are better)" : "");
    std::printf("method,r_plus,r_minus,p_value,significant\n");
    for (std::size_t i = 0; i < table.algorithms.size(); ++i) {
      for (std::size_t j = i + 1; j < table.algorithms.size(); ++j) {
        std::vector<double> a, b;
        for (std::size_t d = 0; d < table.datasets.size(); ++d) {
          a.push_back(table.means(d, i));
          b.push_back(table.means(d, j));
        }
        const fcs::WilcoxonOutcome outcome = fcs::wilcoxon_signed_rank(a, b, options.alpha);
        std::printf("%s vs %s,%.1f,%.1f,%.3e,%s\n", table.algorithms[i].c_str(),
                    table.algorithms[j].c_str(), outcome.r_plus, outcome.r_minus,
                    outcome.p_value, outcome.significant ? "yes" : "no");
      }
    }
    return;
  }

  if (options.test == "friedman") {
    fcs::Matrix scores = table.means;
    if (min_optimal) {
      for (double& v : scores.data()) v = -v;
    }
    const fcs::FriedmanOutcome outcome = fcs::friedman(scores, options.alpha);
    std::printf("test=friedman metric=%s datasets=%zu algorithms=%zu alpha=%g\n",
                options.metric.c_str(), table.datasets.size(), table.algorithms.size(),
                options.alpha);
    std::printf("algorithm,avg_rank\n");
    for (std::size_t a = 0; a < table.algorithms.size(); ++a) {
      std::printf("%s,%.4f\n", table.algorithms[a].c_str(), outcome.avg_ranks[a]);
    }
    std::printf("statistic=%.6f p_value=%.3e significant=%s\n", outcome.statistic,
                outcome.p_value, outcome.significant ? "yes" : "no");
    return;
  }

  throw fcs::ConfigError("unknown test '" + options.test + "' (expected wilcoxon or friedman)");
}

void run_plot(const PlotOptions& options) {
  if (options.kind == "scatter") {
    if (options.x_algorithm.empty() || options.y_algorithm.empty()) {
      throw fcs::ConfigError("scatter needs --x and --y algorithm names");
    }
    const std::vector<BenchmarkRecord> records = read_results_csv(options.results);
    const ScoreTable table = score_table(records, options.metric);
    const auto find_algo = [&](const std::string& name) {
      const auto it = std::find(table.algorithms.begin(), table.algorithms.end(), name);
      if (it == table.algorithms.end()) {
        throw fcs::ConfigError("algorithm '" + name + "' not present in results");
      }
      return static_cast<std::size_t>(it - table.algorithms.begin());
    };
    const std::size_t xi = find_algo(options.x_algorithm);
    const std::size_t yi = find_algo(options.y_algorithm);

    std::vector<ScatterPoint> points;
    std::size_t above = 0, on = 0, below = 0;
    double limit = 1.0;
    std::ostringstream tsv;
    tsv << "dataset\t" << options.x_algorithm << "\t" << options.y_algorithm << "\n";
    for (std::size_t d = 0; d < table.datasets.size(); ++d) {
      const double x = table.means(d, xi);
      const double y = table.means(d, yi);
      points.push_back({table.datasets[d], x, y});
      limit = std::max({limit, x, y});
      char row[256];
      std::snprintf(row, sizeof(row), "%s\t%.6f\t%.6f", table.datasets[d].c_str(), x, y);
      tsv << row << "\n";
      if (std::abs(x - y) <= 1e-12) {
        ++on;
      } else if (y > x) {
        ++above;
      } else {
        ++below;
      }
    }
    write_text_file(options.output + ".tsv", tsv.str());
    write_text_file(options.output + ".svg",
                    scatter_svg(points, options.x_algorithm + " (" + options.metric + ")",
                                options.y_algorithm + " (" + options.metric + ")", limit));
    std::printf("points=%zu above=%zu on=%zu below=%zu x=%s y=%s metric=%s\n", points.size(),
                above, on, below, options.x_algorithm.c_str(), options.y_algorithm.c_str(),
                options.metric.c_str());
    std::printf("wrote %s.tsv and %s.svg\n", options.output.c_str(), options.output.c_str());
    return;
  }

  if (options.kind == "trace") {
    if (options.input.empty()) throw fcs::ConfigError("trace needs --input run artifact");
    const RunArtifact artifact = load_artifact(options.input);
    std::ostringstream tsv;
    tsv << "iteration\tobjective\n";
    for (std::size_t i = 0; i < artifact.objective_trace.size(); ++i) {
      char row[64];
      std::snprintf(row, sizeof(row), "%zu\t%.12g", i + 1, artifact.objective_trace[i]);
      tsv << row << "\n";
    }
    write_text_file(options.output + ".tsv", tsv.str());
    write_text_file(options.output + ".svg",
                    trace_svg(artifact.objective_trace,
                              artifact.algorithm + " objective on " + artifact.dataset));
    std::printf("iterations=%zu wrote %s.tsv and %s.svg\n", artifact.objective_trace.size(),
                options.output.c_str(), options.output.c_str());
    return;
  }

  throw fcs::ConfigError("unknown plot kind '" + options.kind + "' (expected scatter or trace)");
}

}  // namespace fcstool
